#ifndef V2VCC_IP_CLOUD_HPP
#define V2VCC_IP_CLOUD_HPP

#include "v2vcc/sim/random.hpp"

#include <cstdint>
#include <vector>

namespace v2vcc::ip {

/// Client, providers and a central coordinator reached over TCP/IP.
struct CloudConfig
{
  double oneWayDelayMs = 25.0;
  double bandwidthBps = 24'000'000.0;
  double errorRate = 0.0005;  ///< per-segment loss probability
  int nProviders = 1;
  int nClients = 1;
  std::size_t packetBytes = 256;
  double updatePeriodMs = 1000.0; ///< provider state pushes

  /// @throw std::invalid_argument
  void
  validate() const;
};

/// Segments one client exchange puts on the wire: SYN, SYN-ACK, ACK, request, response.
inline constexpr int SEGMENTS_PER_REQUEST = 5;

/// Time to clock the request message onto the link.
double
serializationMs(const CloudConfig& config);

/// Handshake (1.5 RTT) plus request (1 RTT) with no loss.
double
lossFreeCompletionMs(const CloudConfig& config);

struct ClientSample
{
  double totalMs = 0.0;
  int lostSegments = 0;
};

/**
 * @brief One client's connect-and-request time.
 *
 * Every segment, including retransmissions, is lost independently with
 * errorRate; each loss costs a retransmission timeout of two RTTs.
 */
ClientSample
clientCompletionTime(const CloudConfig& config, sim::Rng& rng);

ClientSample
clientCompletionTime(const CloudConfig& config, std::uint64_t seed);

struct BaselineRun
{
  std::uint64_t seed = 0;
  std::vector<ClientSample> clients;
  /// Share of the coordinator link taken by provider updates; never reaches 1.
  double updateUtilisation = 0.0;
};

/// One run: every client connects once while providers keep pushing updates.
BaselineRun
runBaseline(const CloudConfig& config, std::uint64_t seed);

/// @p nRuns independent runs seeded seed, seed+1, ...
std::vector<BaselineRun>
runBaselineExperiment(const CloudConfig& config, int nRuns, std::uint64_t seed);

} // namespace v2vcc::ip

#endif // V2VCC_IP_CLOUD_HPP
