#ifndef V2VCC_PROTOCOL_SESSION_HPP
#define V2VCC_PROTOCOL_SESSION_HPP

#include "v2vcc/naming/message.hpp"
#include "v2vcc/protocol/policy.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace v2vcc::protocol {

using naming::Phase;

inline constexpr std::size_t PHASE_COUNT = 5;

constexpr std::size_t
phaseIndex(Phase p)
{
  return static_cast<std::size_t>(p);
}

enum class Outcome {
  Pending,
  Done,
  DiscoveryFailed,
  VerificationFailed,
  AllCandidatesRejected,
  NegotiationFailed,
  CoordinationFailed,
  ConfirmationMismatch,
  Unreachable, ///< the selected supplier stopped answering after verification
};

/// Lower-case CSV spelling, e.g. "negotiation_failed".
std::string_view
toString(Outcome o);

struct PhaseTiming
{
  std::optional<sim::Time> start;
  std::optional<sim::Time> end;

  std::optional<sim::Time>
  duration() const
  {
    if (start && end) {
      return *end - *start;
    }
    return std::nullopt;
  }
};

/// Settled trade, held identically by both parties.
struct TransactionRecord
{
  std::string cid;
  std::string pid;
  double price = 0.0;
  double amount = 0.0;
  MeetingProposal meeting;
  sim::Time confirmedAt = 0.0;

  /// Canonical text form; two records are the same trade iff these match.
  std::string
  canonical() const;

  friend bool
  operator==(const TransactionRecord&, const TransactionRecord&) = default;
};

/// Digest both parties compute over the agreed terms.
std::string
agreementDigest(const std::string& cid, const std::string& pid, const Offer& offer, const MeetingProposal& meeting);

/// What a consumer wants and what it drives.
struct ConsumerSpec
{
  std::string cid;
  double desiredKwh = 10.0;
  double socKwh = 5.0;
  double kwhPerKm = 0.2;
  ClockTime windowStart = ClockTime::fromHhmm(1400);
  ClockTime windowEnd = ClockTime::fromHhmm(1500);
  DiscoveryFilter filter;
  sim::Time startAt = 0.0;
};

/// Per-consumer protocol state and its measurements.
struct ConsumerSession
{
  ConsumerSpec spec;
  std::optional<Phase> phase; ///< current phase; empty once finished
  Outcome outcome = Outcome::Pending;
  std::vector<SupplierProfile> candidates;
  std::optional<std::string> selected;
  std::optional<Offer> agreement;
  std::optional<MeetingProposal> meeting;
  std::optional<TransactionRecord> record;
  int negotiationRounds = 0;
  int coordinationRounds = 0;
  std::array<PhaseTiming, PHASE_COUNT> timings;
  std::vector<std::string> notes; ///< failure details

  bool
  finished() const
  {
    return outcome != Outcome::Pending;
  }

  /// Sum of the phase durations; set only for completed sessions.
  std::optional<sim::Time>
  total() const;
};

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_SESSION_HPP
