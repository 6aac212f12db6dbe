#include "v2vcc/ndn/forwarder.hpp"

#include <algorithm>

namespace v2vcc::ndn {

void
NonceMemory::remember(Nonce nonce)
{
  if (!m_set.insert(nonce).second) {
    return;
  }
  m_order.push_back(nonce);
  if (m_order.size() > m_capacity) {
    m_set.erase(m_order.front());
    m_order.pop_front();
  }
}

Forwarder::Forwarder(ForwarderConfig config)
  : m_cs(config.csCapacity)
  , m_nonces(config.nonceMemory)
{
}

void
Forwarder::addRoute(Name prefix, FaceId face)
{
  m_routes.emplace_back(std::move(prefix), face);
}

std::vector<FaceId>
Forwarder::nextHops(const Name& name, FaceId ingressFace) const
{
  std::vector<FaceId> out;
  for (const auto& [prefix, face] : m_routes) {
    if (face != ingressFace && prefix.isPrefixOf(name) &&
        std::find(out.begin(), out.end(), face) == out.end()) {
      out.push_back(face);
    }
  }
  return out;
}

InterestResult
Forwarder::onInterest(const Interest& interest, Downstream ingress, Time now)
{
  InterestResult result;

  if (m_nonces.contains(interest.nonce)) {
    result.disposition = InterestDisposition::DuplicateNonce;
    return result;
  }
  m_nonces.remember(interest.nonce);

  if (auto hit = m_cs.find(interest, now)) {
    result.disposition = InterestDisposition::CacheHit;
    result.actions.push_back({ingress.face, hit->data});
    result.cacheEntry = std::move(hit);
    return result;
  }

  PitEntry* entry = m_pit.find(interest, now);
  if (entry != nullptr && entry->downstreams.count(ingress) == 0) {
    entry->downstreams.insert(ingress);
    entry->nonces.insert(interest.nonce);
    entry->expiry = std::max(entry->expiry, now + interest.lifetime);
    result.disposition = InterestDisposition::Aggregated;
    return result;
  }

  auto hops = nextHops(interest.name, ingress.face);
  if (hops.empty()) {
    result.disposition = InterestDisposition::NoRoute;
    return result;
  }

  if (entry != nullptr) {
    // same downstream asking again with a fresh nonce: a retransmission
    result.retransmission = true;
  }
  else {
    entry = &m_pit.insert(interest, now);
  }
  entry->downstreams.insert(ingress);
  entry->nonces.insert(interest.nonce);
  entry->expiry = std::max(entry->expiry, now + interest.lifetime);

  result.disposition = InterestDisposition::Forwarded;
  for (FaceId face : hops) {
    entry->upstreams.insert(face);
    result.actions.push_back({face, interest});
  }
  return result;
}

DataResult
Forwarder::onData(const Data& data, Downstream ingress, Time now)
{
  DataResult result;
  auto satisfied = m_pit.extractMatching(data.name, ingress.face, now);
  if (satisfied.empty()) {
    return result;
  }
  result.solicited = true;
  result.satisfiedEntries = satisfied.size();

  std::set<FaceId> faces;
  for (const auto& entry : satisfied) {
    for (const auto& ds : entry.downstreams) {
      faces.insert(ds.face);
    }
  }
  faces.erase(ingress.face);
  for (FaceId face : faces) {
    result.actions.push_back({face, data});
  }
  m_cs.insert(data, now);
  return result;
}

} // namespace v2vcc::ndn
