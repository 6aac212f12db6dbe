#ifndef V2VCC_HARNESS_SCENARIO_HPP
#define V2VCC_HARNESS_SCENARIO_HPP

#include "v2vcc/ip/cloud.hpp"
#include "v2vcc/protocol/world.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace v2vcc::harness {

class ConfigError : public std::runtime_error
{
public:
  ConfigError(const std::string& source, int line, const std::string& key, const std::string& what);

  int
  line() const
  {
    return m_line;
  }

  const std::string&
  key() const
  {
    return m_key;
  }

private:
  int m_line;
  std::string m_key;
};

enum class Mode {
  V2vcc,
  Ip,
};

/**
 * @brief One experiment, read from a flat `key = value` file.
 *
 * Keys and their domains:
 *   scenario          identifier used in CSV output (default: file stem; "ip-" is prepended in ip mode)
 *   mode              v2vcc | ip                        (default v2vcc)
 *   suppliers         1..10                             (default: consumers / 3 rounded up)
 *   consumers         1..21                             (default 21)
 *   clients           1..30, ip mode                    (default 1)
 *   providers         1..3, ip mode                     (default 1)
 *   ratio_check       true | false; suppliers must equal consumers / 3 rounded up (default true)
 *   discovery_target  1 | 3                             (default 1)
 *   timeout_ms        30 | 50                           (default 30)
 *   loss              0 | 0.2                           (default 0)
 *   speed_mph         0 | 10 | 30 | 50 | 70             (default 0)
 *   ip_delay_ms       25 | 50 | 100                     (default 25)
 *   error_rate        [0, 1)                            (default 0.0005)
 *   comm_range_m      > 0                               (default 300)
 *   combine_phases    true | false                      (default false)
 *   record_events     true | false                      (default true)
 *   runs              >= 1                              (default 10)
 *   seed              unsigned 64-bit, required
 * Blank lines and lines starting with '#' are ignored.
 */
struct ScenarioConfig
{
  std::string scenarioId = "scenario";
  Mode mode = Mode::V2vcc;
  int nSuppliers = 7;
  int nConsumers = 21;
  int nClients = 1;
  int nProviders = 1;
  bool ratioCheck = true;
  int discoveryTarget = 1;
  double timeoutMs = 30.0;
  double lossRate = 0.0;
  double speedMph = 0.0;
  double ipDelayMs = 25.0;
  double errorRate = 0.0005;
  double commRange = 300.0;
  bool combinePhases = false;
  bool recordEvents = true;
  int nRuns = 10;
  std::uint64_t seed = 0;

  protocol::WorldConfig
  worldConfig() const;

  ip::CloudConfig
  cloudConfig() const;
};

/// @throw ConfigError
ScenarioConfig
parseScenario(std::istream& is, const std::string& source, const std::string& defaultId);

/// @throw ConfigError, also when the file cannot be read
ScenarioConfig
loadScenario(const std::filesystem::path& path);

/// Re-checks domains after programmatic edits (e.g. command-line overrides).
/// @throw ConfigError
void
validateScenario(const ScenarioConfig& config, const std::string& source);

} // namespace v2vcc::harness

#endif // V2VCC_HARNESS_SCENARIO_HPP
