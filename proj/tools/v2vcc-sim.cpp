#include "v2vcc/harness/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>

namespace {

constexpr int EXIT_CONFIG_ERROR = 2;
constexpr int EXIT_EXPERIMENT_ERROR = 3;

void
report(const v2vcc::harness::MetricsTable& table, const v2vcc::harness::OutputPaths& paths)
{
  const auto* total = table.find("total");
  std::cout << table.scenarioId << ": " << table.rows.size() << " sessions";
  if (total != nullptr) {
    std::cout << ", " << total->count << " done, mean total " << v2vcc::harness::formatReal(total->mean) << " ms";
  }
  std::cout << " -> " << paths.sessions.parent_path().string() << '\n';
}

} // namespace

int
main(int argc, char** argv)
{
  using namespace v2vcc::harness;

  CLI::App app{"Discrete-event simulator for peer-to-peer EV charging coordination"};
  app.require_subcommand(1);

  std::string configPath;
  std::string outDir;
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario");
  simulate->add_option("--config", configPath, "Scenario file (key = value)")->required();
  simulate->add_option("--out", outDir, "Output directory")->required();
  simulate->add_option("--runs", runs, "Override the number of runs");
  simulate->add_option("--seed", seed, "Override the base seed");

  std::string gridPath;
  auto* sweep = app.add_subcommand("sweep", "Run every scenario listed in a grid file");
  sweep->add_option("--grid", gridPath, "Grid file, one scenario path per line")->required();
  sweep->add_option("--out", outDir, "Output directory; one subdirectory per scenario")->required();

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : EXIT_CONFIG_ERROR;
  }

  try {
    if (*simulate) {
      ScenarioConfig config = loadScenario(configPath);
      if (runs) {
        config.nRuns = *runs;
      }
      if (seed) {
        config.seed = *seed;
      }
      validateScenario(config, configPath);
      MetricsTable table = runExperiment(config);
      report(table, writeOutputs(table, outDir));
    }
    else {
      std::vector<ScenarioConfig> configs;
      std::set<std::string> ids;
      for (const auto& path : loadGrid(gridPath)) {
        configs.push_back(loadScenario(path));
        if (!ids.insert(configs.back().scenarioId).second) {
          throw ConfigError(path.string(), 0, "scenario", "duplicate scenario id " + configs.back().scenarioId);
        }
      }
      for (const auto& config : configs) {
        MetricsTable table = runExperiment(config);
        report(table, writeOutputs(table, std::filesystem::path(outDir) / config.scenarioId));
      }
    }
  }
  catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return EXIT_CONFIG_ERROR;
  }
  catch (const ExperimentError& e) {
    std::cerr << "experiment error: " << e.what() << '\n';
    return EXIT_EXPERIMENT_ERROR;
  }
  catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_EXPERIMENT_ERROR;
  }
  return 0;
}
