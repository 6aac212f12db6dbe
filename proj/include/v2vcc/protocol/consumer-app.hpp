#ifndef V2VCC_PROTOCOL_CONSUMER_APP_HPP
#define V2VCC_PROTOCOL_CONSUMER_APP_HPP

#include "v2vcc/ndn/node.hpp"
#include "v2vcc/protocol/negotiation.hpp"
#include "v2vcc/protocol/payload.hpp"
#include "v2vcc/protocol/session.hpp"

#include <functional>
#include <set>

namespace v2vcc::protocol {

/// Deliberate misbehaviour, for exercising the supplier's checks.
struct ConsumerFaults
{
  /// Added to the price echoed in the confirmation interest.
  double confirmationPriceSkew = 0.0;
};

/**
 * @brief Consumer application: drives one session through the five phases.
 *
 * Every phase request goes out with the express-level retransmission budget;
 * when that runs out the request is re-issued under a fresh timestamp up to
 * ProtocolConfig::phaseRetries times before the phase fails.
 */
class ConsumerApp
{
public:
  using DoneCallback = std::function<void(const ConsumerSession&)>;

  ConsumerApp(ndn::Node& node, ConsumerSpec spec, ClockTime startClock, ProtocolConfig config,
              ConsumerFaults faults = {});

  /// Schedules the session start at spec.startAt.
  void
  start(DoneCallback onDone = nullptr);

  const ConsumerSession&
  session() const
  {
    return m_session;
  }

  /// Data packets handed to this application, and how many failed verification.
  std::uint64_t
  dataReceived() const
  {
    return m_dataReceived;
  }

  std::uint64_t
  badSignatures() const
  {
    return m_badSignatures;
  }

private:
  using NameFactory = std::function<ndn::Name(std::uint64_t timestamp)>;
  using DataHandler = std::function<void(const ndn::Data&)>;
  using FailHandler = std::function<void()>;

  /// Expresses the name built for the current time, re-issuing on timeout.
  void
  request(NameFactory makeName, bool canBePrefix, std::set<std::string> exclude, int retriesLeft,
          DataHandler onData, FailHandler onFail);

  void
  enterPhase(Phase phase);

  void
  leavePhase(Phase phase);

  void
  finish(Outcome outcome, std::string note = {});

  // discovery
  /// @param reexpression whether this follows a reply in the same discovery round
  void
  discover(std::set<std::string> exclude, bool rediscovery, bool reexpression);

  void
  onDiscoveryData(const ndn::Data& data, std::set<std::string> exclude, bool rediscovery);

  void
  discoveryDone(bool rediscovery);

  // verification
  void
  verifyNext();

  void
  candidateFailed(const std::string& pid, Outcome cause, std::string note);

  // negotiation
  void
  startNegotiation(const SupplierProfile& verified);

  void
  sendOffer(const Offer& offer);

  void
  soldOut(const std::string& pid);

  // coordination
  void
  startCoordination();

  void
  sendMeetingProposal(std::optional<Vec2> location, int round);

  void
  onCoordinationReply(const CoordinationReply& reply, int round);

  void
  acceptMeeting(Vec2 location, TimeSlot frame);

  // confirmation
  void
  startConfirmation();

  std::uint64_t
  timestamp() const;

  ClockTime
  clockNow() const;

  double
  travelMph() const;

  ndn::AppFace::ExpressOptions
  expressOptions(bool canBePrefix, std::set<std::string> exclude) const;

  bool
  checkSignature(const ndn::Data& data);

private:
  ndn::Node& m_node;
  ClockTime m_startClock;
  ProtocolConfig m_config;
  ConsumerFaults m_faults;
  ConsumerSession m_session;
  DoneCallback m_onDone;

  std::set<std::string> m_tried;      ///< candidates already verified or rejected
  Outcome m_lastCandidateFailure = Outcome::AllCandidatesRejected;
  bool m_rediscovered = false;
  /// Looking for a replacement after the negotiated supplier sold out; the
  /// search is timed as part of negotiation.
  bool m_reselecting = false;
  int m_discoveredThisRound = 0;
  std::optional<SupplierProfile> m_verified;
  std::optional<ConsumerNegotiation> m_negotiation;

  std::uint64_t m_dataReceived = 0;
  std::uint64_t m_badSignatures = 0;
};

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_CONSUMER_APP_HPP
