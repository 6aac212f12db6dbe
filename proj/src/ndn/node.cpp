#include "v2vcc/ndn/node.hpp"

namespace v2vcc::ndn {

// ---- AppFace ----

AppFace::PendingId
AppFace::expressInterest(const Name& name, ExpressOptions opts, DataCallback onData, TimeoutCallback onTimeout)
{
  if (!(opts.timeout > 0.0) || opts.maxRetx < 0) {
    throw std::invalid_argument("expressInterest needs a positive timeout and maxRetx >= 0");
  }
  PendingId id = m_nextId++;
  Interest proto{name};
  proto.canBePrefix = opts.canBePrefix;
  proto.excludePids = opts.excludePids;
  proto.lifetime = opts.timeout;
  m_pending.emplace(id, Pending{std::move(proto), std::move(opts), 0, 0, std::move(onData), std::move(onTimeout)});
  sendAttempt(id);
  return id;
}

void
AppFace::sendAttempt(PendingId id)
{
  Pending& p = m_pending.at(id);
  p.interest.nonce = m_node.newNonce();
  ++p.attempts;
  p.timer = m_node.kernel().schedule(p.opts.timeout, [this, id] { onTimer(id); });
  Interest copy = p.interest;
  m_node.processInterest(copy, {Node::APP_FACE, m_node.id()});
}

void
AppFace::onTimer(PendingId id)
{
  auto it = m_pending.find(id);
  if (it == m_pending.end()) {
    return;
  }
  Pending& p = it->second;
  if (p.attempts <= p.opts.maxRetx) {
    ++m_retransmissions;
    sendAttempt(id);
    return;
  }
  ++m_timeouts;
  m_node.log(EventKind::Timeout, p.interest.name, p.interest.nonce);
  Pending done = std::move(p);
  m_pending.erase(it);
  if (done.onTimeout) {
    done.onTimeout(done.interest);
  }
}

void
AppFace::cancel(PendingId id)
{
  auto it = m_pending.find(id);
  if (it != m_pending.end()) {
    m_node.kernel().cancel(it->second.timer);
    m_pending.erase(it);
  }
}

void
AppFace::deliverData(const Data& data)
{
  std::vector<PendingId> matched;
  for (const auto& [id, p] : m_pending) {
    if (p.interest.matches(data.name)) {
      matched.push_back(id);
    }
  }
  for (PendingId id : matched) {
    auto it = m_pending.find(id);
    if (it == m_pending.end()) {
      continue; // cancelled by an earlier callback
    }
    m_node.kernel().cancel(it->second.timer);
    Pending done = std::move(it->second);
    m_pending.erase(it);
    if (done.onData) {
      done.onData(done.interest, data);
    }
  }
}

void
AppFace::deliverInterest(const Interest& interest)
{
  if (m_interestHandler) {
    m_interestHandler(interest);
  }
}

void
AppFace::putData(Data data)
{
  m_node.processData(data, {Node::APP_FACE, m_node.id()});
}

// ---- Node ----

Node::Node(std::string label, sim::Kernel& kernel, sim::Medium& medium, sim::MobilityState mobility,
           std::uint64_t seed, EventLog* log, NodeConfig config)
  : m_label(std::move(label))
  , m_kernel(kernel)
  , m_medium(medium)
  , m_id(medium.attach(*this, mobility))
  , m_rng(seed)
  , m_log(log)
  , m_config(config)
  , m_forwarder(config.forwarder)
  , m_app(*this)
{
}

Nonce
Node::newNonce()
{
  return m_rng.next64();
}

void
Node::log(EventKind kind, const Name& name, std::optional<Nonce> nonce)
{
  if (m_log != nullptr) {
    m_log->record(m_kernel.now(), m_label, kind, name.toUri(), nonce);
  }
}

void
Node::onReceive(const sim::Wire& wire, sim::NodeId from)
{
  std::optional<Packet> packet;
  try {
    packet.emplace(decodePacket(*wire));
  }
  catch (const PacketError&) {
    ++m_counters.malformedDropped;
    if (m_log != nullptr) {
      m_log->record(m_kernel.now(), m_label, EventKind::Drop, "-", std::nullopt);
    }
    return;
  }

  if (auto* interest = std::get_if<Interest>(&*packet)) {
    log(EventKind::Recv, interest->name, interest->nonce);
    processInterest(*interest, {BROADCAST_FACE, from});
  }
  else {
    auto& data = std::get<Data>(*packet);
    log(EventKind::Recv, data.name, std::nullopt);
    processData(data, {BROADCAST_FACE, from});
  }
}

void
Node::onLost(const sim::Wire& wire, sim::NodeId)
{
  ++m_counters.channelLosses;
  try {
    Packet packet = decodePacket(*wire);
    if (auto* interest = std::get_if<Interest>(&packet)) {
      log(EventKind::Drop, interest->name, interest->nonce);
    }
    else {
      log(EventKind::Drop, std::get<Data>(packet).name, std::nullopt);
    }
  }
  catch (const PacketError&) {
    if (m_log != nullptr) {
      m_log->record(m_kernel.now(), m_label, EventKind::Drop, "-", std::nullopt);
    }
  }
}

void
Node::processInterest(const Interest& interest, Downstream ingress)
{
  InterestResult result = m_forwarder.onInterest(interest, ingress, m_kernel.now());
  switch (result.disposition) {
    case InterestDisposition::Forwarded:
      break;
    case InterestDisposition::Aggregated:
      ++m_counters.aggregated;
      log(EventKind::Aggregate, interest.name, interest.nonce);
      break;
    case InterestDisposition::CacheHit:
      ++m_counters.cacheHits;
      log(EventKind::CacheHit, interest.name, interest.nonce);
      break;
    case InterestDisposition::DuplicateNonce:
      ++m_counters.duplicateNonceDropped;
      log(EventKind::Drop, interest.name, interest.nonce);
      break;
    case InterestDisposition::NoRoute:
      ++m_counters.noRouteDropped;
      log(EventKind::Drop, interest.name, interest.nonce);
      break;
  }
  execute(result.actions);
}

void
Node::processData(const Data& data, Downstream ingress)
{
  DataResult result = m_forwarder.onData(data, ingress, m_kernel.now());
  if (!result.solicited) {
    ++m_counters.unsolicitedDropped;
    log(EventKind::Drop, data.name, std::nullopt);
    return;
  }
  execute(result.actions);
}

void
Node::execute(std::vector<ForwardingAction>& actions)
{
  for (auto& action : actions) {
    const Interest* interest = std::get_if<Interest>(&action.packet);
    const Data* data = std::get_if<Data>(&action.packet);
    const Name& name = interest != nullptr ? interest->name : data->name;
    std::optional<Nonce> nonce = interest != nullptr ? std::optional<Nonce>(interest->nonce) : std::nullopt;

    if (action.face == APP_FACE) {
      log(EventKind::Send, name, nonce);
      m_kernel.schedule(0.0, [this, packet = std::move(action.packet)] {
        if (const auto* i = std::get_if<Interest>(&packet)) {
          m_app.deliverInterest(*i);
        }
        else {
          m_app.deliverData(std::get<Data>(packet));
        }
      });
      continue;
    }

    if (data != nullptr && m_config.suppressInFlightDuplicates) {
      auto onAir = m_dataOnAir.find(data->name);
      if (onAir != m_dataOnAir.end() && onAir->second > m_kernel.now()) {
        ++m_counters.suppressedDuplicates;
        log(EventKind::Drop, name, std::nullopt);
        continue;
      }
    }
    log(EventKind::Send, name, nonce);
    auto wire = std::make_shared<const std::string>(encodePacket(action.packet));
    sim::Transmission tx = m_medium.broadcast(m_id, m_config.packetBytes, std::move(wire));
    if (data != nullptr) {
      m_dataOnAir[data->name] = tx.end;
    }
  }
}

} // namespace v2vcc::ndn
