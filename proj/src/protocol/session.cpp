#include "v2vcc/protocol/session.hpp"
#include "v2vcc/common/decimal.hpp"
#include "v2vcc/common/digest.hpp"

namespace v2vcc::protocol {

namespace {

std::string
canonicalMeeting(const MeetingProposal& m)
{
  std::string s = m.windowStart.toString() + "-" + m.windowEnd.toString() + "@";
  if (m.location) {
    s += decimal::format(m.location->x) + "," + decimal::format(m.location->y);
  }
  else {
    s += "-";
  }
  return s;
}

} // namespace

std::string_view
toString(Outcome o)
{
  switch (o) {
    case Outcome::Pending:
      return "pending";
    case Outcome::Done:
      return "done";
    case Outcome::DiscoveryFailed:
      return "discovery_failed";
    case Outcome::VerificationFailed:
      return "verification_failed";
    case Outcome::AllCandidatesRejected:
      return "all_candidates_rejected";
    case Outcome::NegotiationFailed:
      return "negotiation_failed";
    case Outcome::CoordinationFailed:
      return "coordination_failed";
    case Outcome::ConfirmationMismatch:
      return "confirmation_mismatch";
    case Outcome::Unreachable:
      return "unreachable";
  }
  return "?";
}

std::string
TransactionRecord::canonical() const
{
  return cid + "|" + pid + "|" + decimal::format(price) + "|" + decimal::format(amount) + "|" +
         canonicalMeeting(meeting) + "|" + decimal::format(confirmedAt);
}

std::string
agreementDigest(const std::string& cid, const std::string& pid, const Offer& offer, const MeetingProposal& meeting)
{
  return stubDigestHex({cid, pid, decimal::format(offer.pricePerKwh), decimal::format(offer.amountKwh),
                        canonicalMeeting(meeting)});
}

std::optional<sim::Time>
ConsumerSession::total() const
{
  if (outcome != Outcome::Done) {
    return std::nullopt;
  }
  sim::Time sum = 0.0;
  for (const auto& t : timings) {
    sum += t.duration().value_or(0.0);
  }
  return sum;
}

} // namespace v2vcc::protocol
