#include "v2vcc/ip/cloud.hpp"

#include <cmath>
#include <stdexcept>

namespace v2vcc::ip {

void
CloudConfig::validate() const
{
  if (!(oneWayDelayMs > 0.0) || !std::isfinite(oneWayDelayMs)) {
    throw std::invalid_argument("oneWayDelay must be positive");
  }
  if (!(errorRate >= 0.0 && errorRate < 1.0)) {
    throw std::invalid_argument("errorRate must be in [0, 1)");
  }
  if (!(bandwidthBps > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive");
  }
  if (nProviders < 0 || nClients < 1) {
    throw std::invalid_argument("need at least one client and no negative provider count");
  }
  if (packetBytes == 0 || !(updatePeriodMs > 0.0)) {
    throw std::invalid_argument("packet size and update period must be positive");
  }
}

double
serializationMs(const CloudConfig& config)
{
  return static_cast<double>(config.packetBytes) * 8.0 / config.bandwidthBps * 1000.0;
}

double
lossFreeCompletionMs(const CloudConfig& config)
{
  double rtt = 2.0 * config.oneWayDelayMs;
  return 2.5 * rtt + serializationMs(config);
}

ClientSample
clientCompletionTime(const CloudConfig& config, sim::Rng& rng)
{
  config.validate();
  ClientSample sample;
  sample.totalMs = lossFreeCompletionMs(config);
  double timeout = 2.0 * (2.0 * config.oneWayDelayMs);
  for (int segment = 0; segment < SEGMENTS_PER_REQUEST; ++segment) {
    while (rng.bernoulli(config.errorRate)) {
      ++sample.lostSegments;
      sample.totalMs += timeout;
    }
  }
  return sample;
}

ClientSample
clientCompletionTime(const CloudConfig& config, std::uint64_t seed)
{
  sim::Rng rng(seed);
  return clientCompletionTime(config, rng);
}

BaselineRun
runBaseline(const CloudConfig& config, std::uint64_t seed)
{
  config.validate();
  BaselineRun run;
  run.seed = seed;
  double updateBps = config.nProviders * static_cast<double>(config.packetBytes) * 8.0 /
                     (config.updatePeriodMs / 1000.0);
  run.updateUtilisation = updateBps / config.bandwidthBps;
  if (run.updateUtilisation >= 1.0) {
    throw std::invalid_argument("provider updates saturate the coordinator link");
  }
  for (int c = 0; c < config.nClients; ++c) {
    sim::Rng rng(sim::deriveSeed(seed, static_cast<std::uint64_t>(c)));
    run.clients.push_back(clientCompletionTime(config, rng));
  }
  return run;
}

std::vector<BaselineRun>
runBaselineExperiment(const CloudConfig& config, int nRuns, std::uint64_t seed)
{
  if (nRuns < 1) {
    throw std::invalid_argument("nRuns must be at least 1");
  }
  std::vector<BaselineRun> runs;
  for (int i = 0; i < nRuns; ++i) {
    runs.push_back(runBaseline(config, seed + static_cast<std::uint64_t>(i)));
  }
  return runs;
}

} // namespace v2vcc::ip
