#ifndef V2VCC_HARNESS_EXPERIMENT_HPP
#define V2VCC_HARNESS_EXPERIMENT_HPP

#include "v2vcc/harness/metrics.hpp"
#include "v2vcc/harness/scenario.hpp"

#include <filesystem>
#include <stdexcept>

namespace v2vcc::harness {

class ExperimentError : public std::runtime_error
{
public:
  ExperimentError(int run, const std::string& what)
    : std::runtime_error("run " + std::to_string(run) + ": " + what)
    , m_run(run)
  {
  }

  int
  run() const
  {
    return m_run;
  }

private:
  int m_run;
};

/// Runs nRuns independent simulations seeded seed + runIndex.
/// @throw ExperimentError naming the failing run
MetricsTable
runExperiment(const ScenarioConfig& config);

struct OutputPaths
{
  std::filesystem::path sessions;
  std::filesystem::path summary;
  std::filesystem::path events;
};

/// Writes sessions.csv, summary.csv and events.log into @p dir, replacing earlier files.
/// @throw std::runtime_error naming the path on I/O failure
OutputPaths
writeOutputs(const MetricsTable& table, const std::filesystem::path& dir);

/// Reads a grid file: one scenario file path per line, relative to the grid file.
/// @throw ConfigError
std::vector<std::filesystem::path>
loadGrid(const std::filesystem::path& grid);

} // namespace v2vcc::harness

#endif // V2VCC_HARNESS_EXPERIMENT_HPP
