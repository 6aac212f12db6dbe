#include "v2vcc/protocol/consumer-app.hpp"
#include "v2vcc/protocol/coordination.hpp"
#include "v2vcc/protocol/selection.hpp"

#include <algorithm>
#include <cmath>

namespace v2vcc::protocol {

using naming::ParsedMessage;

ConsumerApp::ConsumerApp(ndn::Node& node, ConsumerSpec spec, ClockTime startClock, ProtocolConfig config,
                         ConsumerFaults faults)
  : m_node(node)
  , m_startClock(startClock)
  , m_config(std::move(config))
  , m_faults(faults)
{
  naming::validateIdentifier(spec.cid);
  spec.filter.validate();
  if (!(spec.desiredKwh > 0.0) || spec.socKwh < 0.0 || !(spec.kwhPerKm > 0.0) || spec.windowEnd < spec.windowStart) {
    throw std::invalid_argument("invalid consumer parameters for " + spec.cid);
  }
  m_config.validate();
  m_session.spec = std::move(spec);
}

void
ConsumerApp::start(DoneCallback onDone)
{
  m_onDone = std::move(onDone);
  m_node.kernel().schedule(m_session.spec.startAt, [this] {
    enterPhase(Phase::Discovery);
    discover({}, false, false);
  });
}

std::uint64_t
ConsumerApp::timestamp() const
{
  return static_cast<std::uint64_t>(m_node.kernel().now());
}

ClockTime
ConsumerApp::clockNow() const
{
  int elapsed = static_cast<int>(m_node.kernel().now() / 60000.0);
  return ClockTime::fromMinutes(std::min(m_startClock.minutes() + elapsed, ClockTime::MINUTES_PER_DAY - 1));
}

double
ConsumerApp::travelMph() const
{
  return m_node.speedMph() > 0.0 ? m_node.speedMph() : m_config.defaultTravelMph;
}

ndn::AppFace::ExpressOptions
ConsumerApp::expressOptions(bool canBePrefix, std::set<std::string> exclude) const
{
  ndn::AppFace::ExpressOptions opts;
  opts.timeout = m_config.timeoutMs;
  opts.maxRetx = m_config.maxRetx;
  opts.canBePrefix = canBePrefix;
  opts.excludePids = std::move(exclude);
  return opts;
}

bool
ConsumerApp::checkSignature(const ndn::Data& data)
{
  if (ndn::verifySignature(data)) {
    return true;
  }
  ++m_badSignatures;
  return false;
}

void
ConsumerApp::request(NameFactory makeName, bool canBePrefix, std::set<std::string> exclude, int retriesLeft,
                     DataHandler onData, FailHandler onFail)
{
  ndn::Name name = makeName(timestamp());
  m_node.appFace().expressInterest(
    name, expressOptions(canBePrefix, exclude),
    [this, onData] (const ndn::Interest&, const ndn::Data& data) {
      ++m_dataReceived;
      onData(data);
    },
    [=, this] (const ndn::Interest&) {
      if (retriesLeft > 0) {
        request(makeName, canBePrefix, exclude, retriesLeft - 1, onData, onFail);
      }
      else {
        onFail();
      }
    });
}

void
ConsumerApp::enterPhase(Phase phase)
{
  m_session.phase = phase;
  m_session.timings[phaseIndex(phase)].start = m_node.kernel().now();
}

void
ConsumerApp::leavePhase(Phase phase)
{
  m_session.timings[phaseIndex(phase)].end = m_node.kernel().now();
}

void
ConsumerApp::finish(Outcome outcome, std::string note)
{
  if (m_session.finished()) {
    return;
  }
  m_session.outcome = outcome;
  m_session.phase.reset();
  if (!note.empty()) {
    m_session.notes.push_back(std::move(note));
  }
  if (m_onDone) {
    m_onDone(m_session);
  }
}

// ---- discovery ----

void
ConsumerApp::discover(std::set<std::string> exclude, bool rediscovery, bool reexpression)
{
  if (!reexpression) {
    m_discoveredThisRound = 0;
  }
  DiscoveryFilter filter = m_session.spec.filter;
  auto makeName = [filter] (std::uint64_t ts) {
    ParsedMessage m;
    m.phase = Phase::Discovery;
    m.filter = filter;
    m.timestamp = ts;
    return naming::encodeName(m);
  };
  // only the first expression of a round is retried; a re-expression that
  // goes unanswered means nobody else is out there
  int retries = reexpression ? 0 : m_config.phaseRetries;
  request(makeName, true, exclude, retries,
          [=, this] (const ndn::Data& data) { onDiscoveryData(data, exclude, rediscovery); },
          [=, this] { discoveryDone(rediscovery); });
}

void
ConsumerApp::onDiscoveryData(const ndn::Data& data, std::set<std::string> exclude, bool rediscovery)
{
  const std::string& responder = data.name.at(data.name.size() - 1);
  exclude.insert(responder);
  if (checkSignature(data)) {
    try {
      SupplierProfile p = decodeProfile(data.payload);
      if (p.pid == responder && p.pid == data.signerPid) {
        auto known = std::find_if(m_session.candidates.begin(), m_session.candidates.end(),
                                  [&] (const auto& c) { return c.pid == p.pid; });
        if (known == m_session.candidates.end()) {
          m_session.candidates.push_back(std::move(p));
          ++m_discoveredThisRound;
        }
      }
    }
    catch (const PayloadError& e) {
      m_session.notes.push_back(std::string("discovery reply from ") + responder + ": " + e.what());
    }
  }
  if (m_discoveredThisRound >= m_config.discoveryTarget) {
    discoveryDone(rediscovery);
    return;
  }
  discover(std::move(exclude), rediscovery, true);
}

void
ConsumerApp::discoveryDone(bool rediscovery)
{
  if (rediscovery) {
    verifyNext();
    return;
  }
  leavePhase(Phase::Discovery);
  if (m_session.candidates.empty()) {
    finish(Outcome::DiscoveryFailed, "no supplier answered");
    return;
  }
  enterPhase(Phase::Verification);
  if (m_config.combinePhases) {
    std::string pid = selectSupplier(m_session.candidates, m_node.position(), m_config.criteria);
    m_session.selected = pid;
    m_verified = *std::find_if(m_session.candidates.begin(), m_session.candidates.end(),
                               [&] (const auto& c) { return c.pid == pid; });
    leavePhase(Phase::Verification);
    startNegotiation(*m_verified);
    return;
  }
  verifyNext();
}

// ---- verification ----

void
ConsumerApp::verifyNext()
{
  std::vector<SupplierProfile> untried;
  for (const auto& c : m_session.candidates) {
    if (m_tried.count(c.pid) == 0) {
      untried.push_back(c);
    }
  }
  if (untried.empty()) {
    if (!m_rediscovered) {
      m_rediscovered = true;
      discover(m_tried, true, false);
      return;
    }
    finish(m_lastCandidateFailure, "no candidate passed verification");
    return;
  }

  std::string pid = selectSupplier(untried, m_node.position(), m_config.criteria);
  m_tried.insert(pid);
  m_session.selected = pid;
  SupplierProfile advertised = *std::find_if(untried.begin(), untried.end(),
                                             [&] (const auto& c) { return c.pid == pid; });
  auto makeName = [pid] (std::uint64_t ts) {
    ParsedMessage m;
    m.phase = Phase::Verification;
    m.pid = pid;
    m.timestamp = ts;
    return naming::encodeName(m);
  };
  request(makeName, false, {}, m_config.phaseRetries,
          [=, this] (const ndn::Data& data) {
            if (!checkSignature(data)) {
              candidateFailed(pid, Outcome::VerificationFailed, pid + ": bad signature");
              return;
            }
            SupplierProfile verified;
            try {
              verified = decodeProfile(data.payload);
            }
            catch (const PayloadError& e) {
              candidateFailed(pid, Outcome::VerificationFailed, pid + ": " + e.what());
              return;
            }
            bool consistent = verified.pid == pid && verified.pricePerKwh == advertised.pricePerKwh &&
                              verified.availableEnergy == advertised.availableEnergy &&
                              distance(verified.location, advertised.location) <= m_config.locationDriftMeters;
            if (!consistent) {
              candidateFailed(pid, Outcome::AllCandidatesRejected, pid + ": profile differs from advertisement");
              return;
            }
            m_verified = verified;
            if (!m_reselecting) {
              leavePhase(Phase::Verification);
            }
            startNegotiation(verified);
          },
          [=, this] { candidateFailed(pid, Outcome::VerificationFailed, pid + ": no answer"); });
}

void
ConsumerApp::candidateFailed(const std::string&, Outcome cause, std::string note)
{
  m_session.notes.push_back(std::move(note));
  m_lastCandidateFailure = cause;
  verifyNext();
}

// ---- negotiation ----

void
ConsumerApp::startNegotiation(const SupplierProfile& verified)
{
  if (m_reselecting) {
    m_reselecting = false;
  }
  else {
    enterPhase(Phase::Negotiation);
  }
  double ceiling = m_session.spec.filter.maxPricePerKwh.value_or(verified.pricePerKwh);
  m_negotiation.emplace(verified.pricePerKwh, ceiling, m_session.spec.desiredKwh, m_config.negotiation);
  sendOffer(m_negotiation->opening());
}

void
ConsumerApp::sendOffer(const Offer& offer)
{
  std::string pid = *m_session.selected;
  std::string cid = m_session.spec.cid;
  auto makeName = [=] (std::uint64_t ts) {
    ParsedMessage m;
    m.phase = Phase::Negotiation;
    m.pid = pid;
    m.offer = Offer{offer.pricePerKwh, offer.amountKwh, false};
    m.cid = cid;
    m.timestamp = ts;
    return naming::encodeName(m);
  };
  request(makeName, false, {}, m_config.phaseRetries,
          [=, this] (const ndn::Data& data) {
            NegotiationAnswer answer;
            try {
              if (!checkSignature(data)) {
                throw PayloadError("bad signature");
              }
              answer = decodeAnswer(data.payload);
            }
            catch (const PayloadError& e) {
              finish(Outcome::NegotiationFailed, e.what());
              return;
            }
            m_session.negotiationRounds = answer.round;
            auto reaction = m_negotiation->react(offer, answer);
            switch (reaction.kind) {
              case ConsumerNegotiation::Reaction::Accept:
                m_session.agreement = Offer{reaction.offer.pricePerKwh, reaction.offer.amountKwh, false};
                leavePhase(Phase::Negotiation);
                startCoordination();
                break;
              case ConsumerNegotiation::Reaction::Reject:
                if (answer.kind == AnswerKind::Unavailable) {
                  soldOut(pid);
                }
                else {
                  finish(Outcome::NegotiationFailed, "hard offer above budget");
                }
                break;
              case ConsumerNegotiation::Reaction::Offer:
                sendOffer(reaction.offer);
                break;
            }
          },
          [this] { finish(Outcome::Unreachable, "negotiation timed out"); });
}

void
ConsumerApp::soldOut(const std::string& pid)
{
  // another buyer took the rest; look for a different seller, rediscovering
  // once more if the known candidates run out
  m_session.notes.push_back(pid + ": supplier has no energy left");
  m_reselecting = true;
  m_rediscovered = false;
  m_lastCandidateFailure = Outcome::NegotiationFailed;
  verifyNext();
}

// ---- coordination ----

void
ConsumerApp::startCoordination()
{
  enterPhase(Phase::Coordination);
  std::optional<Vec2> location;
  if (m_config.meetingRequest == MeetingRequest::SuggestOwn) {
    location = m_node.position();
  }
  sendMeetingProposal(location, 1);
}

void
ConsumerApp::sendMeetingProposal(std::optional<Vec2> location, int round)
{
  m_session.coordinationRounds = round;
  std::string pid = *m_session.selected;
  std::string cid = m_session.spec.cid;
  MeetingProposal proposal{m_session.spec.windowStart, m_session.spec.windowEnd, location};
  auto makeName = [=] (std::uint64_t ts) {
    ParsedMessage m;
    m.phase = Phase::Coordination;
    m.pid = pid;
    m.meeting = proposal;
    m.cid = cid;
    m.timestamp = ts;
    return naming::encodeName(m);
  };
  request(makeName, false, {}, m_config.phaseRetries,
          [=, this] (const ndn::Data& data) {
            CoordinationReply reply;
            try {
              if (!checkSignature(data)) {
                throw PayloadError("bad signature");
              }
              reply = decodeCoordination(data.payload);
            }
            catch (const PayloadError& e) {
              finish(Outcome::CoordinationFailed, e.what());
              return;
            }
            onCoordinationReply(reply, round);
          },
          [this] { finish(Outcome::Unreachable, "coordination timed out"); });
}

void
ConsumerApp::onCoordinationReply(const CoordinationReply& reply, int round)
{
  if (reply.kind == CoordinationReply::Reject || !reply.location || !reply.timeFrame) {
    finish(Outcome::CoordinationFailed, reply.reason.empty() ? "supplier rejected the meeting" : reply.reason);
    return;
  }
  const ConsumerSpec& spec = m_session.spec;
  Vec2 here = m_node.position();
  Vec2 place = *reply.location;
  int arrival = clockNow().minutes() + travelMinutes(distance(here, place), travelMph());
  bool reachable = feasibleMeeting(spec.socKwh, spec.kwhPerKm, here, place, m_config.reserveKwh);
  if (reachable && arrival <= reply.timeFrame->end.minutes()) {
    acceptMeeting(place, *reply.timeFrame);
    return;
  }
  if (round >= 2) {
    finish(Outcome::CoordinationFailed, "no mutually reachable meeting point");
    return;
  }
  Vec2 supplierAt = reply.kind == CoordinationReply::Counter ? place : m_verified->location;
  Vec2 mid = midpoint(here, supplierAt);
  if (!feasibleMeeting(spec.socKwh, spec.kwhPerKm, here, mid, m_config.reserveKwh)) {
    finish(Outcome::CoordinationFailed, "midpoint out of range");
    return;
  }
  sendMeetingProposal(mid, round + 1);
}

void
ConsumerApp::acceptMeeting(Vec2 location, TimeSlot frame)
{
  m_session.meeting = MeetingProposal{frame.start, frame.end, location};
  leavePhase(Phase::Coordination);
  startConfirmation();
}

// ---- confirmation ----

void
ConsumerApp::startConfirmation()
{
  enterPhase(Phase::Confirmation);
  std::string pid = *m_session.selected;
  std::string cid = m_session.spec.cid;
  Offer agreed = *m_session.agreement;
  MeetingProposal meeting = *m_session.meeting;
  Offer echoed = agreed;
  echoed.pricePerKwh += m_faults.confirmationPriceSkew;
  std::string digest = agreementDigest(cid, pid, agreed, meeting);
  auto makeName = [=] (std::uint64_t ts) {
    ParsedMessage m;
    m.phase = Phase::Confirmation;
    m.pid = pid;
    m.offer = echoed;
    m.meeting = meeting;
    m.agreementDigest = digest;
    m.cid = cid;
    m.timestamp = ts;
    return naming::encodeName(m);
  };
  request(makeName, false, {}, m_config.phaseRetries,
          [=, this] (const ndn::Data& data) {
            ConfirmationAck ack;
            try {
              if (!checkSignature(data)) {
                throw PayloadError("bad signature");
              }
              ack = decodeAck(data.payload);
            }
            catch (const PayloadError& e) {
              finish(Outcome::ConfirmationMismatch, e.what());
              return;
            }
            if (!ack.confirmed || !ack.record) {
              finish(Outcome::ConfirmationMismatch, ack.reason);
              return;
            }
            const TransactionRecord& r = *ack.record;
            if (r.cid != cid || r.pid != pid || r.price != agreed.pricePerKwh || r.amount != agreed.amountKwh ||
                r.meeting != meeting) {
              finish(Outcome::ConfirmationMismatch, "acknowledged terms differ from ours");
              return;
            }
            m_session.record = r;
            leavePhase(Phase::Confirmation);
            finish(Outcome::Done);
          },
          [this] { finish(Outcome::Unreachable, "confirmation timed out"); });
}

} // namespace v2vcc::protocol
