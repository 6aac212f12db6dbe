#include "v2vcc/harness/experiment.hpp"

#include <fstream>
#include <sstream>

namespace v2vcc::harness {

namespace {

void
runV2vcc(const ScenarioConfig& config, MetricsTable& table, std::ostringstream& events)
{
  protocol::WorldConfig world = config.worldConfig();
  for (int run = 0; run < config.nRuns; ++run) {
    std::uint64_t seed = config.seed + static_cast<std::uint64_t>(run);
    protocol::RunResult result;
    try {
      result = protocol::runWorld(world, seed);
    }
    catch (const std::exception& e) {
      throw ExperimentError(run, e.what());
    }
    for (const auto& s : result.sessions) {
      if (!s.finished()) {
        throw ExperimentError(run, "session " + s.spec.cid + " never finished");
      }
      table.rows.push_back(rowFromSession(config.scenarioId, seed, s));
    }
    if (config.recordEvents) {
      events << "# run " << run << " seed " << seed << '\n';
      result.events.write(events);
    }
  }
}

void
runIp(const ScenarioConfig& config, MetricsTable& table)
{
  ip::CloudConfig cloud = config.cloudConfig();
  for (int run = 0; run < config.nRuns; ++run) {
    std::uint64_t seed = config.seed + static_cast<std::uint64_t>(run);
    ip::BaselineRun result;
    try {
      result = ip::runBaseline(cloud, seed);
    }
    catch (const std::exception& e) {
      throw ExperimentError(run, e.what());
    }
    for (std::size_t c = 0; c < result.clients.size(); ++c) {
      SessionRow row;
      row.scenarioId = config.scenarioId;
      row.seed = seed;
      row.cid = "K" + std::to_string(c + 1);
      row.outcome = "done";
      row.totalMs = result.clients[c].totalMs;
      table.rows.push_back(std::move(row));
    }
  }
}

void
writeFile(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error(path.string() + ": cannot open for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw std::runtime_error(path.string() + ": write failed");
  }
}

} // namespace

MetricsTable
runExperiment(const ScenarioConfig& config)
{
  validateScenario(config, config.scenarioId);
  MetricsTable table;
  table.scenarioId = config.scenarioId;
  std::ostringstream events;
  if (config.mode == Mode::V2vcc) {
    runV2vcc(config, table, events);
  }
  else {
    runIp(config, table);
  }
  table.summary = summarize(table.rows);
  table.eventLog = events.str();
  return table;
}

OutputPaths
writeOutputs(const MetricsTable& table, const std::filesystem::path& dir)
{
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error(dir.string() + ": " + ec.message());
  }
  OutputPaths paths{dir / "sessions.csv", dir / "summary.csv", dir / "events.log"};
  std::ostringstream sessions;
  writeSessionsCsv(sessions, table.rows);
  writeFile(paths.sessions, sessions.str());
  std::ostringstream summary;
  writeSummaryCsv(summary, table.scenarioId, table.summary);
  writeFile(paths.summary, summary.str());
  writeFile(paths.events, table.eventLog);
  return paths;
}

std::vector<std::filesystem::path>
loadGrid(const std::filesystem::path& grid)
{
  std::ifstream in(grid);
  if (!in) {
    throw ConfigError(grid.string(), 0, "", "cannot open file");
  }
  std::vector<std::filesystem::path> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') {
      continue;
    }
    auto e = line.find_last_not_of(" \t\r");
    std::filesystem::path p = line.substr(b, e - b + 1);
    if (p.is_relative()) {
      p = grid.parent_path() / p;
    }
    if (!std::filesystem::exists(p)) {
      throw ConfigError(grid.string(), n, "", "no such scenario file: " + p.string());
    }
    out.push_back(p);
  }
  if (out.empty()) {
    throw ConfigError(grid.string(), 0, "", "grid lists no scenarios");
  }
  return out;
}

} // namespace v2vcc::harness
