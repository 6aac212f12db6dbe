#ifndef V2VCC_PROTOCOL_POLICY_HPP
#define V2VCC_PROTOCOL_POLICY_HPP

#include "v2vcc/sim/time.hpp"

#include <string_view>
#include <vector>

namespace v2vcc::protocol {

/// Supplier ranking criteria, applied lexicographically.
enum class Criterion {
  Price,      ///< lower first
  Distance,   ///< closer first
  Reputation, ///< higher first
};

std::string_view
toString(Criterion c);

struct NegotiationPolicy
{
  double openingDiscount = 0.10; ///< consumer opens at list * (1 - openingDiscount)
  double concessionStep = 0.05;  ///< consumer raise per round, as a fraction of list
  double floorFraction = 0.90;   ///< supplier never counters below list * floorFraction
  int maxRounds = 4;             ///< the supplier's counter in this round is hard

  /// @throw std::invalid_argument
  void
  validate() const;
};

/// What a consumer puts in the location component of its first coordination interest.
enum class MeetingRequest {
  LeaveEmpty, ///< let the supplier pick
  SuggestOwn, ///< the consumer's current position
};

struct ProtocolConfig
{
  sim::Time timeoutMs = 30.0;
  int maxRetx = 3;
  /// Times a phase request is re-issued under a fresh timestamp after
  /// express-level retransmissions are exhausted.
  int phaseRetries = 2;
  int discoveryTarget = 1;
  std::vector<Criterion> criteria = {Criterion::Price, Criterion::Distance, Criterion::Reputation};
  NegotiationPolicy negotiation;
  MeetingRequest meetingRequest = MeetingRequest::LeaveEmpty;
  double reserveKwh = 0.5;
  sim::Time reservationWindowMs = 5 * 60 * 1000.0;
  double locationDriftMeters = 500.0;
  /// Speed assumed for travel-time estimates when a vehicle is parked.
  double defaultTravelMph = 30.0;
  sim::Time discoveryFreshnessMs = 1000.0;
  sim::Time p2pFreshnessMs = 100.0;
  /// Take discovery replies as verified and skip the verification exchange.
  bool combinePhases = false;

  /// @throw std::invalid_argument
  void
  validate() const;
};

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_POLICY_HPP
