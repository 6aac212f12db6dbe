#ifndef V2VCC_PROTOCOL_WORLD_HPP
#define V2VCC_PROTOCOL_WORLD_HPP

#include "v2vcc/ndn/event-log.hpp"
#include "v2vcc/protocol/consumer-app.hpp"
#include "v2vcc/protocol/supplier-app.hpp"
#include "v2vcc/sim/medium.hpp"

#include <memory>

namespace v2vcc::protocol {

/// Everything needed to build and run one simulated neighbourhood.
struct WorldConfig
{
  int nSuppliers = 1;
  int nConsumers = 3;
  double speedMph = 0.0;
  sim::ChannelConfig channel;
  sim::Arena arena;
  ProtocolConfig protocol;
  ndn::NodeConfig node;
  ClockTime startClock = ClockTime::fromHhmm(1400);
  DiscoveryFilter filter;        ///< applied by every consumer
  /// Suppliers are placed uniformly in a disc of this radius around the arena centre.
  double supplierSpread = 100.0;
  /// Each consumer starts within this distance of its home supplier.
  double consumerSpread = 15.0;
  /// Consumer k starts at k * consumerStagger ms.
  sim::Time consumerStagger = 0.0;
  bool recordEvents = true;
};

/// Outcome of one run plus what the audits need.
struct RunResult
{
  std::uint64_t seed = 0;
  std::vector<ConsumerSession> sessions;
  std::vector<SupplierProfile> suppliers;  ///< as configured at t = 0
  std::vector<Vec2> consumerPositions;     ///< at t = 0
  std::vector<double> supplierFloors;
  std::vector<SupplierCounters> supplierCounters;
  std::vector<std::vector<TransactionRecord>> supplierTransactions;
  std::vector<std::vector<std::pair<std::string, Offer>>> supplierAgreements;
  std::vector<ndn::NodeCounters> nodeCounters; ///< suppliers first, then consumers
  std::uint64_t dataDelivered = 0;  ///< data handed to consumer applications
  std::uint64_t badSignatures = 0;  ///< of those, how many failed verification
  std::uint64_t transmissions = 0;
  ndn::EventLog events;
};

/// Builds the neighbourhood deterministically from @p seed and runs it to completion.
RunResult
runWorld(const WorldConfig& config, std::uint64_t seed);

/// Parameters a world draws for supplier @p index; exposed for tests.
SupplierProfile
drawSupplier(sim::Rng& rng, int index, Vec2 location);

ConsumerSpec
drawConsumer(sim::Rng& rng, int index);

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_WORLD_HPP
