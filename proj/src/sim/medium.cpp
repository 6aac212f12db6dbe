#include "v2vcc/sim/medium.hpp"

#include <algorithm>
#include <stdexcept>

namespace v2vcc::sim {

void
ChannelConfig::validate() const
{
  if (!(bandwidthBps > 0.0)) {
    throw std::invalid_argument("channel bandwidth must be positive");
  }
  if (!(lossRate >= 0.0 && lossRate <= 1.0)) {
    throw std::invalid_argument("channel loss rate must be within [0, 1]");
  }
  if (!(propagationSpeed > 0.0)) {
    throw std::invalid_argument("propagation speed must be positive");
  }
  if (!(commRange >= 0.0)) {
    throw std::invalid_argument("communication range must be non-negative");
  }
}

Medium::Medium(Kernel& kernel, ChannelConfig config, Arena arena, std::uint64_t channelSeed)
  : m_kernel(kernel)
  , m_config(config)
  , m_arena(arena)
  , m_rng(channelSeed)
{
  m_config.validate();
}

NodeId
Medium::attach(MediumEndpoint& endpoint, MobilityState mobility)
{
  m_nodes.push_back({&endpoint, mobility});
  return static_cast<NodeId>(m_nodes.size() - 1);
}

Vec2
Medium::positionOf(NodeId node, Time t) const
{
  return positionAt(m_nodes.at(node).mobility, t, m_arena);
}

Time
Medium::serializationDelay(std::size_t packetBytes) const
{
  double bits = static_cast<double>(packetBytes + m_config.headerOverhead) * 8.0;
  return bits / m_config.bandwidthBps * MS_PER_SECOND;
}

Transmission
Medium::broadcast(NodeId sender, std::size_t packetBytes, Wire wire)
{
  Attached& tx = m_nodes.at(sender);
  Transmission t;
  t.start = std::max(m_kernel.now(), tx.busyUntil);
  t.end = t.start + serializationDelay(packetBytes);
  tx.busyUntil = t.end;
  ++m_transmissions;

  Vec2 from = positionOf(sender, t.start);
  for (NodeId id = 0; id < m_nodes.size(); ++id) {
    if (id == sender) {
      continue;
    }
    double d = distance(from, positionOf(id, t.start));
    if (d > m_config.commRange) {
      continue;
    }
    ++t.receivers;
    bool lost = m_config.lossRate > 0.0 && m_rng.bernoulli(m_config.lossRate);
    Time arrival = t.end + d / m_config.propagationSpeed * MS_PER_SECOND;
    MediumEndpoint* rx = m_nodes[id].endpoint;
    if (lost) {
      ++t.lost;
      ++m_losses;
      m_kernel.schedule(arrival - m_kernel.now(), [rx, wire, sender] { rx->onLost(wire, sender); });
    }
    else {
      ++m_deliveries;
      m_kernel.schedule(arrival - m_kernel.now(), [rx, wire, sender] { rx->onReceive(wire, sender); });
    }
  }
  return t;
}

} // namespace v2vcc::sim
