#include "v2vcc/ip/cloud.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace v2vcc;
using namespace v2vcc::ip;

namespace {

CloudConfig
lossless(double oneWay)
{
  CloudConfig c;
  c.oneWayDelayMs = oneWay;
  c.errorRate = 0;
  return c;
}

} // namespace

TEST_CASE("base cases without loss")
{
  // 1.5 RTT handshake plus one RTT request, to within the serialization term
  CHECK(std::abs(clientCompletionTime(lossless(25), 1).totalMs - 125.0) < 0.1);
  CHECK(std::abs(clientCompletionTime(lossless(50), 1).totalMs - 250.0) < 0.1);
  CHECK(std::abs(clientCompletionTime(lossless(100), 1).totalMs - 500.0) < 0.1);
  CHECK(serializationMs(lossless(25)) == doctest::Approx(256 * 8 / 24e6 * 1000));
}

TEST_CASE("without loss the time is five one-way delays plus serialization")
{
  for (double d = 1; d < 300; d += 7.5) {
    auto c = lossless(d);
    CHECK(clientCompletionTime(c, 3).totalMs == doctest::Approx(5 * d + serializationMs(c)));
  }
}

TEST_CASE("a single run without loss is deterministic")
{
  auto runs = runBaselineExperiment(lossless(25), 1, 42);
  REQUIRE(runs.size() == 1);
  REQUIRE(runs[0].clients.size() == 1);
  CHECK(runs[0].clients[0].totalMs == lossFreeCompletionMs(lossless(25)));
  CHECK(runs[0].clients[0].lostSegments == 0);
}

TEST_CASE("rare loss barely moves the mean")
{
  CloudConfig c;
  c.oneWayDelayMs = 25;
  c.errorRate = 0.0005;
  auto runs = runBaselineExperiment(c, 1000, 7);
  double sum = 0;
  int losses = 0;
  for (const auto& r : runs) {
    sum += r.clients[0].totalMs;
    losses += r.clients[0].lostSegments;
  }
  double mean = sum / 1000;
  CHECK(mean >= 125.0);
  CHECK(mean <= 127.0);
  // the penalty is exactly 4 one-way delays per lost segment
  CHECK(sum == doctest::Approx(1000 * lossFreeCompletionMs(c) + losses * 100.0));
}

TEST_CASE("long delay lower bound")
{
  CloudConfig c;
  c.oneWayDelayMs = 100;
  c.errorRate = 0.2;
  for (const auto& r : runBaselineExperiment(c, 200, 9)) {
    CHECK(r.clients[0].totalMs >= 500.0);
  }
}

TEST_CASE("monotone in delay and loss under a fixed seed schedule")
{
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CloudConfig a;
    a.errorRate = 0.05;
    CloudConfig b = a;
    b.oneWayDelayMs = 50;
    CHECK(clientCompletionTime(a, seed).totalMs <= clientCompletionTime(b, seed).totalMs);
    CloudConfig lo = a;
    CloudConfig hi = a;
    hi.errorRate = 0.3;
    CHECK(clientCompletionTime(lo, seed).totalMs <= clientCompletionTime(hi, seed).totalMs);
  }
}

TEST_CASE("provider updates never fill the link")
{
  CloudConfig c;
  c.nProviders = 3;
  c.nClients = 30;
  auto r = runBaseline(c, 1);
  CHECK(r.clients.size() == 30);
  CHECK(r.updateUtilisation < 0.001);
  c.updatePeriodMs = 0.0001;
  CHECK_THROWS_AS(runBaseline(c, 1), std::invalid_argument);
}

TEST_CASE("invalid configurations")
{
  CloudConfig c;
  c.oneWayDelayMs = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.errorRate = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(runBaselineExperiment({}, 0, 1), std::invalid_argument);
}
