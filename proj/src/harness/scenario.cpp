#include "v2vcc/harness/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace v2vcc::harness {

ConfigError::ConfigError(const std::string& source, int line, const std::string& key, const std::string& what)
  : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                       (key.empty() ? "" : ": '" + key + "'") + ": " + what)
  , m_line(line)
  , m_key(key)
{
}

protocol::WorldConfig
ScenarioConfig::worldConfig() const
{
  protocol::WorldConfig w;
  w.nSuppliers = nSuppliers;
  w.nConsumers = nConsumers;
  w.speedMph = speedMph;
  w.channel.lossRate = lossRate;
  w.channel.commRange = commRange;
  w.protocol.timeoutMs = timeoutMs;
  w.protocol.discoveryTarget = discoveryTarget;
  w.protocol.combinePhases = combinePhases;
  w.recordEvents = recordEvents;
  return w;
}

ip::CloudConfig
ScenarioConfig::cloudConfig() const
{
  ip::CloudConfig c;
  c.oneWayDelayMs = ipDelayMs;
  c.errorRate = errorRate;
  c.nProviders = nProviders;
  c.nClients = nClients;
  return c;
}

namespace {

int
suppliersFor(int consumers)
{
  return (consumers + 2) / 3;
}

std::optional<long long>
toInteger(const std::string& v)
{
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    return std::nullopt;
  }
  return out;
}

std::optional<double>
toReal(const std::string& v)
{
  if (v.empty()) {
    return std::nullopt;
  }
  char* end = nullptr;
  double out = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || !std::isfinite(out)) {
    return std::nullopt;
  }
  return out;
}

std::string
trim(const std::string& s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool
validId(const std::string& id)
{
  return !id.empty() && std::all_of(id.begin(), id.end(), [] (char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
  });
}

struct Parser
{
  std::string source;
  int line = 0;
  std::string key;

  [[noreturn]] void
  fail(const std::string& what) const
  {
    throw ConfigError(source, line, key, what);
  }

  int
  integer(const std::string& v, long long lo, long long hi) const
  {
    auto n = toInteger(v);
    if (!n) {
      fail("expected an integer, got '" + v + "'");
    }
    if (*n < lo || *n > hi) {
      fail("must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return static_cast<int>(*n);
  }

  double
  oneOf(const std::string& v, std::initializer_list<double> allowed) const
  {
    auto x = toReal(v);
    if (!x) {
      fail("expected a number, got '" + v + "'");
    }
    for (double a : allowed) {
      if (*x == a) {
        return a;
      }
    }
    std::string list;
    for (double a : allowed) {
      list += (list.empty() ? "" : ", ") + trimmedNumber(a);
    }
    fail("outside the allowed values {" + list + "}");
  }

  static std::string
  trimmedNumber(double a)
  {
    std::string s = std::to_string(a);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') {
      s.pop_back();
    }
    return s;
  }

  bool
  boolean(const std::string& v) const
  {
    if (v == "true") {
      return true;
    }
    if (v == "false") {
      return false;
    }
    fail("expected true or false, got '" + v + "'");
  }
};

} // namespace

void
validateScenario(const ScenarioConfig& c, const std::string& source)
{
  auto check = [&] (bool ok, const std::string& key, const std::string& what) {
    if (!ok) {
      throw ConfigError(source, 0, key, what);
    }
  };
  check(validId(c.scenarioId), "scenario", "identifier may only use letters, digits, '-', '_' and '.'");
  check(c.nSuppliers >= 1 && c.nSuppliers <= 10, "suppliers", "must be in 1..10");
  check(c.nConsumers >= 1 && c.nConsumers <= 21, "consumers", "must be in 1..21");
  check(c.nClients >= 1 && c.nClients <= 30, "clients", "must be in 1..30");
  check(c.nProviders >= 1 && c.nProviders <= 3, "providers", "must be in 1..3");
  check(!c.ratioCheck || c.nSuppliers == suppliersFor(c.nConsumers), "suppliers",
        "ratio_check requires one supplier per three consumers (" + std::to_string(suppliersFor(c.nConsumers)) +
          " for " + std::to_string(c.nConsumers) + " consumers)");
  check(c.discoveryTarget == 1 || c.discoveryTarget == 3, "discovery_target", "must be 1 or 3");
  check(c.timeoutMs == 30 || c.timeoutMs == 50, "timeout_ms", "must be 30 or 50");
  check(c.lossRate == 0 || c.lossRate == 0.2, "loss", "must be 0 or 0.2");
  check(c.speedMph == 0 || c.speedMph == 10 || c.speedMph == 30 || c.speedMph == 50 || c.speedMph == 70,
        "speed_mph", "must be one of 0, 10, 30, 50, 70");
  check(c.ipDelayMs == 25 || c.ipDelayMs == 50 || c.ipDelayMs == 100, "ip_delay_ms", "must be 25, 50 or 100");
  check(c.errorRate >= 0 && c.errorRate < 1, "error_rate", "must be in [0, 1)");
  check(c.commRange > 0 && std::isfinite(c.commRange), "comm_range_m", "must be positive");
  check(c.nRuns >= 1, "runs", "must be at least 1");
}

ScenarioConfig
parseScenario(std::istream& is, const std::string& source, const std::string& defaultId)
{
  ScenarioConfig c;
  Parser p{source};
  std::set<std::string> seen;
  std::optional<std::string> id;
  bool suppliersGiven = false;
  bool seedGiven = false;

  using Handler = std::function<void(const std::string&)>;
  const std::map<std::string, Handler> handlers = {
    {"scenario", [&] (const std::string& v) {
       if (!validId(v)) {
         p.fail("identifier may only use letters, digits, '-', '_' and '.'");
       }
       id = v;
     }},
    {"mode", [&] (const std::string& v) {
       if (v == "v2vcc") {
         c.mode = Mode::V2vcc;
       }
       else if (v == "ip") {
         c.mode = Mode::Ip;
       }
       else {
         p.fail("expected v2vcc or ip, got '" + v + "'");
       }
     }},
    {"suppliers", [&] (const std::string& v) { c.nSuppliers = p.integer(v, 1, 10); suppliersGiven = true; }},
    {"consumers", [&] (const std::string& v) { c.nConsumers = p.integer(v, 1, 21); }},
    {"clients", [&] (const std::string& v) { c.nClients = p.integer(v, 1, 30); }},
    {"providers", [&] (const std::string& v) { c.nProviders = p.integer(v, 1, 3); }},
    {"ratio_check", [&] (const std::string& v) { c.ratioCheck = p.boolean(v); }},
    {"discovery_target", [&] (const std::string& v) { c.discoveryTarget = static_cast<int>(p.oneOf(v, {1, 3})); }},
    {"timeout_ms", [&] (const std::string& v) { c.timeoutMs = p.oneOf(v, {30, 50}); }},
    {"loss", [&] (const std::string& v) { c.lossRate = p.oneOf(v, {0, 0.2}); }},
    {"speed_mph", [&] (const std::string& v) { c.speedMph = p.oneOf(v, {0, 10, 30, 50, 70}); }},
    {"ip_delay_ms", [&] (const std::string& v) { c.ipDelayMs = p.oneOf(v, {25, 50, 100}); }},
    {"error_rate", [&] (const std::string& v) {
       auto x = toReal(v);
       if (!x || *x < 0 || *x >= 1) {
         p.fail("must be a number in [0, 1)");
       }
       c.errorRate = *x;
     }},
    {"comm_range_m", [&] (const std::string& v) {
       auto x = toReal(v);
       if (!x || *x <= 0) {
         p.fail("must be a positive number");
       }
       c.commRange = *x;
     }},
    {"combine_phases", [&] (const std::string& v) { c.combinePhases = p.boolean(v); }},
    {"record_events", [&] (const std::string& v) { c.recordEvents = p.boolean(v); }},
    {"runs", [&] (const std::string& v) { c.nRuns = p.integer(v, 1, 1'000'000); }},
    {"seed", [&] (const std::string& v) {
       std::uint64_t s = 0;
       auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
       if (ec != std::errc() || ptr != v.data() + v.size()) {
         p.fail("expected an unsigned 64-bit integer, got '" + v + "'");
       }
       c.seed = s;
       seedGiven = true;
     }},
  };

  std::string raw;
  while (std::getline(is, raw)) {
    ++p.line;
    p.key.clear();
    std::string text = trim(raw);
    if (text.empty() || text[0] == '#') {
      continue;
    }
    auto eq = text.find('=');
    if (eq == std::string::npos) {
      p.fail("expected 'key = value'");
    }
    p.key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    auto h = handlers.find(p.key);
    if (h == handlers.end()) {
      p.fail("unknown key");
    }
    if (!seen.insert(p.key).second) {
      p.fail("given more than once");
    }
    h->second(value);
  }

  p.line = 0;
  if (!seedGiven) {
    p.key = "seed";
    p.fail("seed is required");
  }
  if (!suppliersGiven) {
    c.nSuppliers = std::min(10, suppliersFor(c.nConsumers));
  }
  c.scenarioId = id.value_or(defaultId.empty() ? "scenario" : defaultId);
  if (c.mode == Mode::Ip && c.scenarioId.rfind("ip-", 0) != 0) {
    c.scenarioId = "ip-" + c.scenarioId;
  }
  validateScenario(c, source);
  return c;
}

ScenarioConfig
loadScenario(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path.string(), 0, "", "cannot open file");
  }
  return parseScenario(in, path.string(), path.stem().string());
}

} // namespace v2vcc::harness
