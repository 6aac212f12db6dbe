#ifndef V2VCC_SIM_MEDIUM_HPP
#define V2VCC_SIM_MEDIUM_HPP

#include "v2vcc/sim/kernel.hpp"
#include "v2vcc/sim/mobility.hpp"
#include "v2vcc/sim/random.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace v2vcc::sim {

using NodeId = std::uint32_t;
using Wire = std::shared_ptr<const std::string>;

struct ChannelConfig
{
  double bandwidthBps = 24'000'000.0;
  double lossRate = 0.0;
  double propagationSpeed = 3.0e8; ///< m/s
  double commRange = 300.0;        ///< m
  std::size_t headerOverhead = 0;  ///< bytes added to every packet

  /// @throw std::invalid_argument
  void
  validate() const;
};

class MediumEndpoint
{
public:
  virtual
  ~MediumEndpoint() = default;

  virtual void
  onReceive(const Wire& wire, NodeId from) = 0;

  /// Called instead of onReceive() when the channel drops the copy.
  virtual void
  onLost(const Wire& wire, NodeId from)
  {
    (void)wire;
    (void)from;
  }
};

struct Transmission
{
  Time start = 0.0;
  Time end = 0.0; ///< last bit leaves the sender
  std::size_t receivers = 0;
  std::size_t lost = 0;
};

/**
 * @brief Shared broadcast wireless channel.
 *
 * Each sender serialises its own packets back to back; there is no contention
 * between senders. A copy reaches every other node within commRange of the
 * sender at transmission start, after serialisation plus propagation delay,
 * unless dropped with probability lossRate.
 */
class Medium
{
public:
  Medium(Kernel& kernel, ChannelConfig config, Arena arena, std::uint64_t channelSeed);

  NodeId
  attach(MediumEndpoint& endpoint, MobilityState mobility);

  Transmission
  broadcast(NodeId sender, std::size_t packetBytes, Wire wire);

  Vec2
  positionOf(NodeId node, Time t) const;

  Vec2
  positionOf(NodeId node) const
  {
    return positionOf(node, m_kernel.now());
  }

  const MobilityState&
  mobilityOf(NodeId node) const
  {
    return m_nodes.at(node).mobility;
  }

  /// Serialisation time of a packet, ms.
  Time
  serializationDelay(std::size_t packetBytes) const;

  const ChannelConfig&
  config() const
  {
    return m_config;
  }

  const Arena&
  arena() const
  {
    return m_arena;
  }

  std::size_t
  nodeCount() const
  {
    return m_nodes.size();
  }

  std::uint64_t
  transmissions() const
  {
    return m_transmissions;
  }

  std::uint64_t
  deliveries() const
  {
    return m_deliveries;
  }

  std::uint64_t
  losses() const
  {
    return m_losses;
  }

private:
  struct Attached
  {
    MediumEndpoint* endpoint;
    MobilityState mobility;
    Time busyUntil = 0.0;
  };

  Kernel& m_kernel;
  ChannelConfig m_config;
  Arena m_arena;
  Rng m_rng;
  std::vector<Attached> m_nodes;
  std::uint64_t m_transmissions = 0;
  std::uint64_t m_deliveries = 0;
  std::uint64_t m_losses = 0;
};

} // namespace v2vcc::sim

#endif // V2VCC_SIM_MEDIUM_HPP
