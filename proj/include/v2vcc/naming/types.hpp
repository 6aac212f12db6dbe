#ifndef V2VCC_NAMING_TYPES_HPP
#define V2VCC_NAMING_TYPES_HPP

#include "v2vcc/common/clock-time.hpp"
#include "v2vcc/common/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace v2vcc {

/// Closed interval of clock time, start <= end.
struct TimeSlot
{
  ClockTime start;
  ClockTime end;

  friend bool
  operator==(const TimeSlot&, const TimeSlot&) = default;
};

/// A selling EV's advertised state.
struct SupplierProfile
{
  std::string pid;
  Vec2 location;
  double pricePerKwh = 0.0;
  double availableEnergy = 0.0; ///< kWh offered for sale
  double reputation = 0.0;      ///< 0..10
  std::vector<TimeSlot> freeSlots;
  double soc = 0.0;             ///< kWh left in the battery
  double consumptionRate = 0.0; ///< kWh/km
  std::optional<double> reservedUntil; ///< simulation time, ms

  friend bool
  operator==(const SupplierProfile&, const SupplierProfile&) = default;
};

/// Price and quantity proposal. Only counter-offers from a supplier may be hard.
struct Offer
{
  double pricePerKwh = 0.0;
  double amountKwh = 0.0;
  bool hard = false;

  friend bool
  operator==(const Offer&, const Offer&) = default;
};

struct MeetingProposal
{
  ClockTime windowStart;
  ClockTime windowEnd;
  std::optional<Vec2> location;

  friend bool
  operator==(const MeetingProposal&, const MeetingProposal&) = default;
};

/// Search area for discovery: everything within radiusMeters of center.
struct SearchArea
{
  Vec2 center;
  double radiusMeters = 0.0;

  friend bool
  operator==(const SearchArea&, const SearchArea&) = default;
};

/// Discovery constraints; every absent field is unconstrained.
struct DiscoveryFilter
{
  std::optional<SearchArea> area;
  std::optional<double> maxPricePerKwh;
  std::optional<double> minEnergy;
  std::optional<double> minReputation;
  std::optional<ClockTime> windowStart;
  std::optional<ClockTime> windowEnd;

  /// @throw std::invalid_argument when a bound is negative or the window is reversed
  void
  validate() const;

  friend bool
  operator==(const DiscoveryFilter&, const DiscoveryFilter&) = default;
};

/// @throw std::invalid_argument when profile invariants are violated
void
validateProfile(const SupplierProfile& profile);

} // namespace v2vcc

#endif // V2VCC_NAMING_TYPES_HPP
