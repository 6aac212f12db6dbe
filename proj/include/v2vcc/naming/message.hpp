#ifndef V2VCC_NAMING_MESSAGE_HPP
#define V2VCC_NAMING_MESSAGE_HPP

#include "v2vcc/naming/name.hpp"
#include "v2vcc/naming/types.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace v2vcc::naming {

inline constexpr std::string_view ROOT = "FastCharging";
/// Placeholder for an absent optional field, keeping component positions fixed.
inline constexpr std::string_view ABSENT = "-";

enum class Phase {
  Discovery,
  Verification,
  Negotiation,
  Coordination,
  Confirmation,
};

std::string_view
toString(Phase phase);

class MalformedName : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief Decoded content of a protocol name.
 *
 * Templates (brackets mark optional trailing components):
 *
 *   /FastCharging/Discovery/<area>/<maxPrice>/<minEnergy>/<minRep>/<from>/<to>/<ts>[/<pid>]
 *   /FastCharging/<pid>/Verification/<ts>
 *   /FastCharging/<pid>/Negotiation/<price>/<amount>/<ts>[/<cid>]
 *   /FastCharging/<pid>/Coordination/Spatial/Temporal/<from>-<to>/<location>/<ts>[/<cid>]
 *   /FastCharging/<pid>/Coordination/<from>-<to>/<location>/Negotiation/<price>/<amount>/<digest>/<ts>[/<cid>]
 *
 * The trailing pid of a discovery name is only present on data names (the
 * responder's identity). The trailing cid scopes a point-to-point exchange to
 * one consumer session.
 */
struct ParsedMessage
{
  Phase phase = Phase::Discovery;
  std::optional<std::string> pid;
  std::optional<DiscoveryFilter> filter;      ///< Discovery
  std::optional<Offer> offer;                 ///< Negotiation, Confirmation
  std::optional<MeetingProposal> meeting;     ///< Coordination, Confirmation
  std::optional<std::string> agreementDigest; ///< Confirmation
  std::optional<std::string> cid;
  std::uint64_t timestamp = 0;                ///< simulation time, ms

  /// @throw std::invalid_argument when phase-specific fields do not match the phase
  void
  validate() const;

  friend bool
  operator==(const ParsedMessage&, const ParsedMessage&) = default;
};

/// Offers carried in names never have the hard flag; it travels in payloads.
Name
encodeName(const ParsedMessage& msg);

/// @throw MalformedName
ParsedMessage
parseName(const Name& name);

/// Name under which a supplier answers @p interestName.
/// Discovery broadcasts get the responder pid appended; point-to-point names
/// are returned unchanged.
/// @throw MalformedName when the name does not parse, or when a point-to-point
///        name addresses a different pid
Name
dataNameFor(const Name& interestName, const std::string& pid);

/// @throw std::invalid_argument for an empty identifier, one containing '/',
///        the absent marker, or a phase keyword
void
validateIdentifier(std::string_view id);

} // namespace v2vcc::naming

#endif // V2VCC_NAMING_MESSAGE_HPP
