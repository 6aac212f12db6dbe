#include "v2vcc/protocol/supplier-app.hpp"
#include "v2vcc/naming/filter.hpp"
#include "v2vcc/protocol/coordination.hpp"
#include "v2vcc/protocol/payload.hpp"

#include <algorithm>
#include <cmath>

namespace v2vcc::protocol {

using naming::ParsedMessage;

SupplierApp::SupplierApp(ndn::Node& node, SupplierProfile profile, ClockTime startClock, ProtocolConfig config,
                         SupplierFaults faults)
  : m_node(node)
  , m_profile(std::move(profile))
  , m_startClock(startClock)
  , m_config(std::move(config))
  , m_faults(faults)
{
  validateProfile(m_profile);
  naming::validateIdentifier(m_profile.pid);
  m_config.validate();
  m_node.appFace().setInterestHandler([this] (const ndn::Interest& i) { onInterest(i); });
}

SupplierProfile
SupplierApp::currentProfile() const
{
  SupplierProfile p = m_profile;
  p.location = m_node.position();
  sim::Time now = m_node.kernel().now();
  for (const auto& [cid, rec] : m_consumers) {
    if (rec.reservation && rec.reservation->until > now) {
      p.reservedUntil = std::max(p.reservedUntil.value_or(0.0), rec.reservation->until);
    }
  }
  return p;
}

double
SupplierApp::reservedKwh(const std::string* exceptCid) const
{
  sim::Time now = m_node.kernel().now();
  double sum = 0.0;
  for (const auto& [cid, rec] : m_consumers) {
    if (exceptCid != nullptr && cid == *exceptCid) {
      continue;
    }
    if (rec.reservation && rec.reservation->until > now) {
      sum += rec.reservation->amount;
    }
  }
  return sum;
}

std::vector<std::pair<std::string, Offer>>
SupplierApp::agreements() const
{
  std::vector<std::pair<std::string, Offer>> out;
  for (const auto& [cid, rec] : m_consumers) {
    if (rec.agreed) {
      out.emplace_back(cid, *rec.agreed);
    }
  }
  return out;
}

ClockTime
SupplierApp::clockNow() const
{
  int elapsed = static_cast<int>(m_node.kernel().now() / 60000.0);
  return ClockTime::fromMinutes(std::min(m_startClock.minutes() + elapsed, ClockTime::MINUTES_PER_DAY - 1));
}

double
SupplierApp::travelMph() const
{
  return m_node.speedMph() > 0.0 ? m_node.speedMph() : m_config.defaultTravelMph;
}

void
SupplierApp::notePeak()
{
  m_counters.peakReservedKwh = std::max(m_counters.peakReservedKwh, reservedKwh());
}

void
SupplierApp::reply(const ndn::Name& name, std::string payload, sim::Time freshness, bool corruptSignature)
{
  ndn::Data data = ndn::Data::make(naming::dataNameFor(name, m_profile.pid), std::move(payload), m_profile.pid,
                                   freshness);
  if (corruptSignature) {
    data.signatureDigest.back() = data.signatureDigest.back() == '0' ? '1' : '0';
  }
  m_node.appFace().putData(std::move(data));
}

void
SupplierApp::onInterest(const ndn::Interest& interest)
{
  ParsedMessage msg;
  try {
    msg = naming::parseName(interest.name);
  }
  catch (const naming::MalformedName&) {
    ++m_counters.ignored;
    return;
  }

  if (msg.phase == Phase::Discovery) {
    onDiscovery(interest, msg);
    return;
  }
  if (msg.pid != m_profile.pid) {
    ++m_counters.ignored;
    return;
  }
  if (msg.phase == Phase::Verification) {
    onVerification(interest);
    return;
  }
  if (!msg.cid) {
    ++m_counters.ignored;
    return;
  }

  if (msg.phase == Phase::Confirmation && m_faults.ignoredConfirmations > 0) {
    --m_faults.ignoredConfirmations;
    return;
  }

  ConsumerRecord& rec = m_consumers[*msg.cid];
  auto done = rec.answered.find(interest.name);
  if (done != rec.answered.end()) {
    // a retransmission that outlived the cached reply: answer the same way again
    reply(interest.name, done->second, m_config.p2pFreshnessMs);
    return;
  }

  std::string payload;
  switch (msg.phase) {
    case Phase::Negotiation:
      payload = onNegotiation(*msg.cid, msg, rec);
      ++m_counters.negotiationReplies;
      break;
    case Phase::Coordination:
      payload = onCoordination(msg, rec);
      ++m_counters.coordinationReplies;
      break;
    default:
      payload = onConfirmation(interest.name, msg, rec);
      break;
  }
  rec.answered.emplace(interest.name, payload);
  reply(interest.name, std::move(payload), m_config.p2pFreshnessMs);
}

void
SupplierApp::onDiscovery(const ndn::Interest& interest, const ParsedMessage& msg)
{
  if (interest.excludePids.count(m_profile.pid) > 0) {
    ++m_counters.ignored;
    return;
  }
  SupplierProfile advertised = currentProfile();
  if (m_faults.advertisedPrice) {
    advertised.pricePerKwh = *m_faults.advertisedPrice;
  }
  if (!naming::matchesFilter(advertised, msg.filter.value_or(DiscoveryFilter{}))) {
    ++m_counters.ignored;
    return;
  }
  ++m_counters.discoveryReplies;
  reply(interest.name, encodeProfile(advertised), m_config.discoveryFreshnessMs);
}

void
SupplierApp::onVerification(const ndn::Interest& interest)
{
  ++m_counters.verificationReplies;
  reply(interest.name, encodeProfile(currentProfile()), m_config.p2pFreshnessMs, m_faults.badVerificationSignature);
}

std::string
SupplierApp::onNegotiation(const std::string& cid, const ParsedMessage& msg, ConsumerRecord& rec)
{
  if (!rec.negotiation) {
    rec.negotiation.emplace(m_profile.pricePerKwh, m_config.negotiation);
  }
  double freeKwh = m_profile.availableEnergy - reservedKwh(&cid);
  NegotiationAnswer answer = rec.negotiation->respond(*msg.offer, freeKwh);

  bool binding = answer.kind == AnswerKind::Agree || (answer.kind == AnswerKind::Counter && answer.offer.hard);
  if (binding) {
    // a hard counter is reserved right away: the consumer accepts it by moving on
    rec.agreed = Offer{answer.offer.pricePerKwh, answer.offer.amountKwh, false};
    rec.reservation = Reservation{answer.offer.amountKwh, m_node.kernel().now() + m_config.reservationWindowMs};
    rec.meeting.reset();
    rec.spatialRounds = 0;
    notePeak();
  }
  return encodeAnswer(answer);
}

std::string
SupplierApp::onCoordination(const ParsedMessage& msg, ConsumerRecord& rec)
{
  CoordinationReply r;
  if (!rec.agreed) {
    r.reason = "no agreement";
    return encodeCoordination(r);
  }
  ++rec.spatialRounds;
  const MeetingProposal& proposal = *msg.meeting;
  Vec2 here = m_node.position();

  Vec2 place = here;
  r.kind = CoordinationReply::Counter;
  if (proposal.location) {
    if (feasibleMeeting(m_profile.soc, m_profile.consumptionRate, here, *proposal.location, m_config.reserveKwh)) {
      place = *proposal.location;
      r.kind = CoordinationReply::Accept;
    }
    else if (rec.spatialRounds >= 2) {
      r.kind = CoordinationReply::Reject;
      r.reason = "location out of range";
      return encodeCoordination(r);
    }
  }

  int travel = travelMinutes(distance(here, place), travelMph());
  int earliestMin = std::min(clockNow().minutes() + travel, ClockTime::MINUTES_PER_DAY - 1);
  auto frame = resolveTimeFrame(proposal.windowStart, proposal.windowEnd, m_profile.freeSlots,
                                ClockTime::fromMinutes(earliestMin));
  if (!frame) {
    r.kind = CoordinationReply::Reject;
    r.reason = "no common time";
    return encodeCoordination(r);
  }
  r.location = place;
  r.timeFrame = frame;
  rec.meeting = MeetingProposal{frame->start, frame->end, place};
  return encodeCoordination(r);
}

std::string
SupplierApp::onConfirmation(const ndn::Name& name, const ParsedMessage& msg, ConsumerRecord& rec)
{
  ConfirmationAck ack;
  bool matches = false;
  if (rec.agreed && rec.meeting) {
    ParsedMessage expected;
    expected.phase = Phase::Confirmation;
    expected.pid = m_profile.pid;
    expected.offer = rec.agreed;
    expected.meeting = rec.meeting;
    expected.agreementDigest = agreementDigest(*msg.cid, m_profile.pid, *rec.agreed, *rec.meeting);
    expected.cid = msg.cid;
    expected.timestamp = msg.timestamp;
    matches = naming::encodeName(expected).toUri() == name.toUri();
  }

  if (!matches) {
    ++m_counters.mismatches;
    rec.reservation.reset();
    rec.agreed.reset();
    rec.meeting.reset();
    ack.reason = "terms differ from the supplier's record";
    return encodeAck(ack);
  }

  if (!rec.confirmed) {
    rec.confirmed = TransactionRecord{*msg.cid, m_profile.pid, rec.agreed->pricePerKwh, rec.agreed->amountKwh,
                                      *rec.meeting, m_node.kernel().now()};
    m_transactions.push_back(*rec.confirmed);
    ++m_counters.confirmations;
  }
  ack.confirmed = true;
  ack.record = rec.confirmed;
  return encodeAck(ack);
}

} // namespace v2vcc::protocol
