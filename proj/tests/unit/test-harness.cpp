#include "v2vcc/harness/experiment.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace v2vcc;
using namespace v2vcc::harness;

namespace {

ScenarioConfig
parse(const std::string& text, const std::string& id = "test")
{
  std::istringstream in(text);
  return parseScenario(in, "test.cfg", id);
}

int
errorLine(const std::string& text)
{
  try {
    parse(text);
  }
  catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

std::string
slurp(const std::filesystem::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_SUITE("load_scenario")
{
  TEST_CASE("defaults are filled in")
  {
    auto c = parse("mode = v2vcc\nconsumers = 21\nseed = 7\n");
    CHECK((c.mode == Mode::V2vcc));
    CHECK(c.nConsumers == 21);
    CHECK(c.nSuppliers == 7);
    CHECK(c.seed == 7);
    CHECK(c.nRuns == 10);
    CHECK(c.discoveryTarget == 1);
    CHECK(c.timeoutMs == 30);
    CHECK(c.lossRate == 0);
    CHECK(c.speedMph == 0);
    CHECK(c.ratioCheck);
    CHECK(c.scenarioId == "test");
  }

  TEST_CASE("every key")
  {
    auto c = parse("# comment\n\nscenario = sweep-1\nmode = v2vcc\nsuppliers = 2\nconsumers = 9\nratio_check = false\n"
                   "discovery_target = 3\ntimeout_ms = 50\nloss = 0.2\nspeed_mph = 70\ncomm_range_m = 450\n"
                   "combine_phases = true\nrecord_events = false\nruns = 4\nseed = 18446744073709551615\n");
    CHECK(c.scenarioId == "sweep-1");
    CHECK(c.nSuppliers == 2);
    CHECK(c.discoveryTarget == 3);
    CHECK(c.timeoutMs == 50);
    CHECK(c.lossRate == 0.2);
    CHECK(c.speedMph == 70);
    CHECK(c.commRange == 450);
    CHECK(c.combinePhases);
    CHECK_FALSE(c.recordEvents);
    CHECK(c.nRuns == 4);
    CHECK(c.seed == 18446744073709551615ULL);
    auto w = c.worldConfig();
    CHECK(w.nSuppliers == 2);
    CHECK(w.channel.lossRate == 0.2);
    CHECK(w.protocol.timeoutMs == 50);
    CHECK(w.protocol.discoveryTarget == 3);
  }

  TEST_CASE("ip mode")
  {
    auto c = parse("mode = ip\nclients = 30\nproviders = 3\nip_delay_ms = 100\nerror_rate = 0\nseed = 1\n", "base");
    CHECK(c.scenarioId == "ip-base");
    auto cloud = c.cloudConfig();
    CHECK(cloud.oneWayDelayMs == 100);
    CHECK(cloud.nClients == 30);
    CHECK(cloud.nProviders == 3);
    CHECK(cloud.errorRate == 0);
    CHECK(parse("mode = ip\nscenario = ip-x\nseed = 1\n").scenarioId == "ip-x");
  }

  TEST_CASE("errors carry the line and key")
  {
    try {
      parse("seed = 1\n\nloss = 0.3\n");
      FAIL("expected ConfigError");
    }
    catch (const ConfigError& e) {
      CHECK(e.line() == 3);
      CHECK(e.key() == "loss");
      CHECK(std::string(e.what()).find("test.cfg:3") != std::string::npos);
    }
    CHECK(errorLine("") == 0);
    CHECK(errorLine("colour = red\nseed = 1") == 1);
    CHECK(errorLine("seed = 1\nseed = 2") == 2);
    CHECK(errorLine("seed = 1\njust words") == 2);
    CHECK(errorLine("seed = -1") == 1);
    CHECK(errorLine("seed = 1\nconsumers = 22") == 2);
    CHECK(errorLine("seed = 1\nconsumers = 3.5") == 2);
    CHECK(errorLine("seed = 1\nsuppliers = 11") == 2);
    CHECK(errorLine("seed = 1\nclients = 31") == 2);
    CHECK(errorLine("seed = 1\nproviders = 4") == 2);
    CHECK(errorLine("seed = 1\ndiscovery_target = 2") == 2);
    CHECK(errorLine("seed = 1\ntimeout_ms = 40") == 2);
    CHECK(errorLine("seed = 1\nspeed_mph = 20") == 2);
    CHECK(errorLine("seed = 1\nip_delay_ms = 75") == 2);
    CHECK(errorLine("seed = 1\nerror_rate = 1") == 2);
    CHECK(errorLine("seed = 1\nmode = tcp") == 2);
    CHECK(errorLine("seed = 1\nratio_check = yes") == 2);
    CHECK(errorLine("seed = 1\nruns = 0") == 2);
    CHECK(errorLine("seed = 1\nscenario = a/b") == 2);
  }

  TEST_CASE("ratio check")
  {
    CHECK(parse("consumers = 10\nseed = 1").nSuppliers == 4);
    CHECK_THROWS_AS(parse("consumers = 9\nsuppliers = 2\nseed = 1"), ConfigError);
    CHECK(parse("consumers = 9\nsuppliers = 3\nseed = 1").nSuppliers == 3);
    CHECK(parse("consumers = 9\nsuppliers = 2\nratio_check = false\nseed = 1").nSuppliers == 2);
  }

  TEST_CASE("files")
  {
    auto dir = std::filesystem::temp_directory_path() / "v2vcc-harness-load";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "optimal.cfg") << "consumers = 3\nseed = 2\n";
    CHECK(loadScenario(dir / "optimal.cfg").scenarioId == "optimal");
    CHECK_THROWS_AS(loadScenario(dir / "nope.cfg"), ConfigError);
    std::ofstream(dir / "grid.txt") << "optimal.cfg\n\n# skipped\n";
    auto grid = loadGrid(dir / "grid.txt");
    REQUIRE(grid.size() == 1);
    CHECK(grid[0] == dir / "optimal.cfg");
    std::ofstream(dir / "bad-grid.txt") << "optimal.cfg\nmissing.cfg\n";
    CHECK_THROWS_AS(loadGrid(dir / "bad-grid.txt"), ConfigError);
  }
}

TEST_SUITE("metrics")
{
  TEST_CASE("type 7 quantiles")
  {
    std::vector<double> v = {1, 2, 3, 4};
    CHECK(quantile(v, 0) == 1);
    CHECK(quantile(v, 0.25) == doctest::Approx(1.75));
    CHECK(quantile(v, 0.5) == doctest::Approx(2.5));
    CHECK(quantile(v, 0.75) == doctest::Approx(3.25));
    CHECK(quantile(v, 1) == 4);
    CHECK(quantile({7}, 0.3) == 7);
  }

  TEST_CASE("summary over completed sessions only, from printed values")
  {
    std::vector<SessionRow> rows(3);
    for (int i = 0; i < 3; ++i) {
      rows[i].outcome = "done";
      rows[i].totalMs = 1.0 + i + 1e-9; // printed as 1.000000, 2.000000, 3.000000
    }
    rows[2].outcome = "negotiation_failed";
    auto s = summarize(rows);
    REQUIRE(s.size() == 1);
    CHECK(s[0].phase == "total");
    CHECK(s[0].count == 2);
    CHECK(s[0].mean == 1.5);
    CHECK(s[0].median == 1.5);
    CHECK(summarize({}).empty());
  }

  TEST_CASE("empty table: headers only")
  {
    auto dir = std::filesystem::temp_directory_path() / "v2vcc-harness-empty";
    MetricsTable t;
    t.scenarioId = "empty";
    auto paths = writeOutputs(t, dir);
    CHECK(slurp(paths.sessions) == std::string(SESSIONS_HEADER) + "\n");
    CHECK(slurp(paths.summary) == std::string(SUMMARY_HEADER) + "\n");
    CHECK(slurp(paths.events).empty());
  }
}

TEST_SUITE("run_experiment")
{
  TEST_CASE("optimal scenario")
  {
    auto c = parse("consumers = 21\nseed = 3\n");
    auto t = runExperiment(c);
    CHECK(t.rows.size() == 210);
    const auto* total = t.find("total");
    REQUIRE(total != nullptr);
    CHECK(total->count == 210);
    CHECK(total->mean < 10.0);
    // run-major order, seeds seed + run
    CHECK(t.rows.front().seed == 3);
    CHECK(t.rows.front().cid == "C1");
    CHECK(t.rows[21].seed == 4);
    CHECK(t.rows.back().seed == 12);
    CHECK(t.rows.back().cid == "C21");
  }

  TEST_CASE("ip baseline without loss is deterministic")
  {
    auto t = runExperiment(parse("mode = ip\nip_delay_ms = 25\nerror_rate = 0\nruns = 10\nseed = 1\n"));
    REQUIRE(t.rows.size() == 10);
    for (const auto& r : t.rows) {
      CHECK(std::abs(*r.totalMs - 125.0) < 0.1);
      CHECK_FALSE(r.phaseMs[0]);
    }
    CHECK(t.scenarioId.rfind("ip-", 0) == 0);
  }

  TEST_CASE("same config and seed give byte-identical output")
  {
    auto c = parse("consumers = 9\nloss = 0.2\nruns = 3\nseed = 21\n");
    auto root = std::filesystem::temp_directory_path() / "v2vcc-harness-det";
    auto a = writeOutputs(runExperiment(c), root / "a");
    auto b = writeOutputs(runExperiment(c), root / "b");
    CHECK(slurp(a.sessions) == slurp(b.sessions));
    CHECK(slurp(a.summary) == slurp(b.summary));
    CHECK(slurp(a.events) == slurp(b.events));
    // and rewriting in place gives the same bytes again
    auto again = writeOutputs(runExperiment(c), root / "a");
    CHECK(slurp(again.sessions) == slurp(b.sessions));
  }

  TEST_CASE("a scenario's output does not depend on what else is run")
  {
    auto c = parse("consumers = 6\nruns = 2\nseed = 4\n");
    auto alone = runExperiment(c);
    runExperiment(parse("consumers = 21\nruns = 2\nseed = 4\n"));
    auto after = runExperiment(c);
    std::ostringstream x, y;
    writeSessionsCsv(x, alone.rows);
    writeSessionsCsv(y, after.rows);
    CHECK(x.str() == y.str());
  }

  TEST_CASE("invalid configuration is refused before running")
  {
    ScenarioConfig c;
    c.nConsumers = 40;
    CHECK_THROWS_AS(runExperiment(c), ConfigError);
    ExperimentError e(4, "boom");
    CHECK(e.run() == 4);
    CHECK(std::string(e.what()) == "run 4: boom");
  }
}
