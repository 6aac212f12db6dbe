#include "v2vcc/protocol/world.hpp"

#include <cmath>
#include <numbers>

namespace v2vcc::protocol {

namespace {

// RNG stream numbers; node streams start at NODE_STREAM_BASE
constexpr std::uint64_t CHANNEL_STREAM = 0;
constexpr std::uint64_t TOPOLOGY_STREAM = 1;
constexpr std::uint64_t NODE_STREAM_BASE = 100;

double
quantize(double v, double step)
{
  return std::round(v / step) * step;
}

Vec2
pointInDisc(sim::Rng& rng, Vec2 center, double radius)
{
  double r = radius * std::sqrt(rng.uniform());
  double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {quantize(center.x + r * std::cos(theta), 0.01), quantize(center.y + r * std::sin(theta), 0.01)};
}

} // namespace

SupplierProfile
drawSupplier(sim::Rng& rng, int index, Vec2 location)
{
  SupplierProfile p;
  p.pid = "S" + std::to_string(index + 1);
  p.location = location;
  p.pricePerKwh = quantize(rng.uniform(0.08, 0.12), 0.001);
  p.availableEnergy = static_cast<double>(rng.uniformInt(40, 60));
  p.reputation = static_cast<double>(rng.uniformInt(5, 10));
  p.freeSlots = {{ClockTime::fromHhmm(1300), ClockTime::fromHhmm(1800)}};
  p.soc = static_cast<double>(rng.uniformInt(50, 70));
  p.consumptionRate = quantize(rng.uniform(0.15, 0.20), 0.01);
  return p;
}

ConsumerSpec
drawConsumer(sim::Rng& rng, int index)
{
  ConsumerSpec c;
  c.cid = "C" + std::to_string(index + 1);
  c.desiredKwh = quantize(rng.uniform(5.0, 10.0), 0.1);
  c.socKwh = quantize(rng.uniform(3.0, 10.0), 0.1);
  c.kwhPerKm = quantize(rng.uniform(0.15, 0.20), 0.01);
  return c;
}

RunResult
runWorld(const WorldConfig& config, std::uint64_t seed)
{
  if (config.nSuppliers < 1 || config.nConsumers < 0) {
    throw std::invalid_argument("a world needs at least one supplier");
  }
  config.protocol.validate();

  RunResult result;
  result.seed = seed;

  sim::Kernel kernel;
  sim::Medium medium(kernel, config.channel, config.arena, sim::deriveSeed(seed, CHANNEL_STREAM));
  sim::Rng topology(sim::deriveSeed(seed, TOPOLOGY_STREAM));
  ndn::EventLog* log = config.recordEvents ? &result.events : nullptr;

  auto mobility = [&] (Vec2 origin) {
    if (config.speedMph <= 0.0) {
      return sim::MobilityState::stationary(origin);
    }
    return sim::MobilityState::withHeading(origin, config.speedMph, topology.uniform(0.0, 2.0 * std::numbers::pi));
  };

  std::vector<std::unique_ptr<ndn::Node>> nodes;
  std::vector<std::unique_ptr<SupplierApp>> suppliers;
  std::vector<std::unique_ptr<ConsumerApp>> consumers;
  Vec2 center{config.arena.width / 2.0, config.arena.height / 2.0};

  std::uint64_t stream = NODE_STREAM_BASE;
  for (int i = 0; i < config.nSuppliers; ++i) {
    Vec2 at = pointInDisc(topology, center, config.supplierSpread);
    SupplierProfile profile = drawSupplier(topology, i, at);
    auto node = std::make_unique<ndn::Node>(profile.pid, kernel, medium, mobility(at),
                                            sim::deriveSeed(seed, stream++), log, config.node);
    node->routeToApp(ndn::Name({std::string(naming::ROOT), "Discovery"}));
    node->routeToApp(ndn::Name({std::string(naming::ROOT), profile.pid}));
    result.suppliers.push_back(profile);
    suppliers.push_back(std::make_unique<SupplierApp>(*node, profile, config.startClock, config.protocol));
    result.supplierFloors.push_back(suppliers.back()->floorPrice());
    nodes.push_back(std::move(node));
  }

  for (int k = 0; k < config.nConsumers; ++k) {
    Vec2 home = result.suppliers[static_cast<size_t>(k % config.nSuppliers)].location;
    Vec2 at = pointInDisc(topology, home, config.consumerSpread);
    ConsumerSpec spec = drawConsumer(topology, k);
    spec.filter = config.filter;
    result.consumerPositions.push_back(at);
    spec.startAt = k * config.consumerStagger;
    auto node = std::make_unique<ndn::Node>(spec.cid, kernel, medium, mobility(at),
                                            sim::deriveSeed(seed, stream++), log, config.node);
    node->routeToBroadcast(ndn::Name({std::string(naming::ROOT)}));
    consumers.push_back(std::make_unique<ConsumerApp>(*node, spec, config.startClock, config.protocol));
    consumers.back()->start();
    nodes.push_back(std::move(node));
  }

  kernel.run();

  for (const auto& c : consumers) {
    result.sessions.push_back(c->session());
    result.dataDelivered += c->dataReceived();
    result.badSignatures += c->badSignatures();
  }
  for (const auto& s : suppliers) {
    result.supplierCounters.push_back(s->counters());
    result.supplierTransactions.push_back(s->transactions());
    result.supplierAgreements.push_back(s->agreements());
  }
  for (const auto& n : nodes) {
    result.nodeCounters.push_back(n->counters());
  }
  result.transmissions = medium.transmissions();
  return result;
}

} // namespace v2vcc::protocol
