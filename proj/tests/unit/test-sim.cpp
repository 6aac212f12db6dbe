#include "v2vcc/sim/kernel.hpp"
#include "v2vcc/sim/medium.hpp"
#include "v2vcc/sim/mobility.hpp"
#include "v2vcc/sim/random.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace v2vcc;
using namespace v2vcc::sim;

namespace {

struct Recorder : MediumEndpoint
{
  Kernel* kernel = nullptr;
  std::vector<Time> received;
  int lost = 0;

  void
  onReceive(const Wire&, NodeId) override
  {
    received.push_back(kernel->now());
  }

  void
  onLost(const Wire&, NodeId) override
  {
    ++lost;
  }
};

Wire
payload()
{
  return std::make_shared<const std::string>("x");
}

// Moves a point in small steps and folds it back whenever it leaves the arena.
Vec2
steppedReflection(Vec2 origin, Vec2 velocity, double seconds, Arena arena)
{
  const int steps = 200000;
  double dt = seconds / steps;
  Vec2 p = origin;
  Vec2 v = velocity;
  for (int i = 0; i < steps; ++i) {
    p = p + v * dt;
    if (p.x < 0) { p.x = -p.x; v.x = -v.x; }
    if (p.x > arena.width) { p.x = 2 * arena.width - p.x; v.x = -v.x; }
    if (p.y < 0) { p.y = -p.y; v.y = -v.y; }
    if (p.y > arena.height) { p.y = 2 * arena.height - p.y; v.y = -v.y; }
  }
  return p;
}

} // namespace

TEST_SUITE("Kernel")
{
  TEST_CASE("equal-time events fire in insertion order")
  {
    Kernel k;
    std::string order;
    k.schedule(0, [&] { order += 'a'; });
    k.schedule(0, [&] { order += 'b'; });
    k.schedule(1, [&] { order += 'd'; });
    k.schedule(0, [&] { order += 'c'; });
    k.run();
    CHECK(order == "abcd");
    CHECK(k.executedCount() == 4);
  }

  TEST_CASE("clock reads the scheduled time inside the action")
  {
    Kernel k;
    Time seen = -1;
    k.schedule(5, [&] { seen = k.now(); });
    k.run();
    CHECK(seen == 5.0);
  }

  TEST_CASE("cancel and bad delays")
  {
    Kernel k;
    bool fired = false;
    EventId id = k.schedule(3, [&] { fired = true; });
    CHECK(k.cancel(id));
    CHECK_FALSE(k.cancel(id));
    k.run();
    CHECK_FALSE(fired);
    CHECK_THROWS_AS(k.schedule(-1, [] {}), std::invalid_argument);
    CHECK_THROWS_AS(k.schedule(std::nan(""), [] {}), std::invalid_argument);
  }

  TEST_CASE("clock never runs backwards")
  {
    Kernel k;
    Rng rng(3);
    Time last = 0;
    bool monotone = true;
    std::function<void()> spawn = [&] {
      monotone = monotone && k.now() >= last;
      last = k.now();
      if (k.executedCount() < 5000) {
        k.schedule(rng.uniform(0, 10), spawn);
        k.schedule(rng.uniform(0, 10), spawn);
      }
    };
    k.schedule(0, spawn);
    k.run();
    CHECK(monotone);
  }

  TEST_CASE("runUntil stops at the limit")
  {
    Kernel k;
    int fired = 0;
    k.schedule(1, [&] { ++fired; });
    k.schedule(10, [&] { ++fired; });
    k.runUntil(5);
    CHECK(fired == 1);
    CHECK(k.now() == 5.0);
    CHECK(k.pendingCount() == 1);
  }
}

TEST_SUITE("Rng")
{
  TEST_CASE("same seed, same stream")
  {
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) {
      REQUIRE(a.next64() == b.next64());
    }
    CHECK(deriveSeed(1, 0) != deriveSeed(1, 1));
    CHECK(deriveSeed(1, 0) == deriveSeed(1, 0));
  }

  TEST_CASE("uniform range")
  {
    Rng r(5);
    for (int i = 0; i < 10000; ++i) {
      double u = r.uniform();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
      auto k = r.uniformInt(-3, 3);
      REQUIRE(k >= -3);
      REQUIRE(k <= 3);
    }
  }
}

TEST_SUITE("Mobility")
{
  Arena arena;

  TEST_CASE("stationary")
  {
    auto m = MobilityState::stationary({12, 34});
    CHECK(positionAt(m, 0, arena) == Vec2{12, 34});
    CHECK(positionAt(m, 1e9, arena) == Vec2{12, 34});
  }

  TEST_CASE("10 mph along x for one second")
  {
    auto m = MobilityState::withHeading({100, 100}, 10, 0);
    Vec2 p = positionAt(m, 1000, arena);
    CHECK(p.x == doctest::Approx(104.4704).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(100));
    CHECK(norm(m.velocity) == doctest::Approx(10 * 0.44704));
  }

  TEST_CASE("reflection matches a stepped simulation")
  {
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
      Vec2 origin{rng.uniform(0, 1000), rng.uniform(0, 1000)};
      double mph = 70;
      double heading = rng.uniform(0, 6.283185307179586);
      auto m = MobilityState::withHeading(origin, mph, heading);
      double seconds = rng.uniform(10, 200);
      Vec2 exact = positionAt(m, seconds * 1000, arena);
      Vec2 stepped = steppedReflection(origin, m.velocity, seconds, arena);
      CHECK(exact.x >= 0.0);
      CHECK(exact.x <= 1000.0);
      CHECK(exact.y >= 0.0);
      CHECK(exact.y <= 1000.0);
      CHECK(distance(exact, stepped) < 1e-3);
    }
  }

  TEST_CASE("reflection at the boundary by hand")
  {
    // 990 m + 20 m along x: hits the wall after 10 m, comes back 10 m
    MobilityState m{{990, 500}, {20, 0}, 0};
    Vec2 p = positionAt(m, 1000, arena);
    CHECK(p.x == doctest::Approx(990));
    CHECK(positionAt(m, 500, arena).x == doctest::Approx(1000));
  }
}

TEST_SUITE("Medium")
{
  TEST_CASE("serialisation of 1500 bytes at 24 Mb/s")
  {
    Kernel k;
    ChannelConfig cfg;
    cfg.propagationSpeed = 1e30; // negligible distance term
    Medium m(k, cfg, {}, 1);
    Recorder a, b;
    a.kernel = b.kernel = &k;
    m.attach(a, MobilityState::stationary({0, 0}));
    m.attach(b, MobilityState::stationary({10, 0}));
    CHECK(m.serializationDelay(1500) == doctest::Approx(0.5));
    m.broadcast(0, 1500, payload());
    k.run();
    REQUIRE(b.received.size() == 1);
    CHECK(b.received[0] == doctest::Approx(0.5));
    CHECK(a.received.empty());
  }

  TEST_CASE("propagation delay and range")
  {
    Kernel k;
    ChannelConfig cfg;
    Medium m(k, cfg, {}, 1);
    Recorder a, near, far;
    a.kernel = near.kernel = far.kernel = &k;
    m.attach(a, MobilityState::stationary({0, 0}));
    m.attach(near, MobilityState::stationary({300, 0}));
    m.attach(far, MobilityState::stationary({300.5, 0}));
    auto tx = m.broadcast(0, 256, payload());
    k.run();
    CHECK(tx.receivers == 1);
    REQUIRE(near.received.size() == 1);
    CHECK(near.received[0] == doctest::Approx(256 * 8 / 24e6 * 1000 + 300 / 3e8 * 1000));
    CHECK(far.received.empty());
  }

  TEST_CASE("a sender serialises its own packets back to back")
  {
    Kernel k;
    Medium m(k, {}, {}, 1);
    Recorder a, b;
    a.kernel = b.kernel = &k;
    m.attach(a, MobilityState::stationary({0, 0}));
    m.attach(b, MobilityState::stationary({0, 0}));
    auto t1 = m.broadcast(0, 1500, payload());
    auto t2 = m.broadcast(0, 1500, payload());
    CHECK(t2.start == t1.end);
    k.run();
    REQUIRE(b.received.size() == 2);
    CHECK(b.received[1] == doctest::Approx(1.0));
  }

  TEST_CASE("loss rate 1 delivers nothing")
  {
    Kernel k;
    ChannelConfig cfg;
    cfg.lossRate = 1;
    Medium m(k, cfg, {}, 1);
    Recorder a, b;
    a.kernel = b.kernel = &k;
    m.attach(a, MobilityState::stationary({0, 0}));
    m.attach(b, MobilityState::stationary({1, 0}));
    for (int i = 0; i < 50; ++i) {
      m.broadcast(0, 256, payload());
    }
    k.run();
    CHECK(b.received.empty());
    CHECK(b.lost == 50);
  }

  TEST_CASE("empirical loss fraction converges")
  {
    Kernel k;
    ChannelConfig cfg;
    cfg.lossRate = 0.2;
    Medium m(k, cfg, {}, deriveSeed(42, 0));
    Recorder a, b;
    a.kernel = b.kernel = &k;
    m.attach(a, MobilityState::stationary({0, 0}));
    m.attach(b, MobilityState::stationary({1, 0}));
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      m.broadcast(0, 256, payload());
    }
    k.run();
    double fraction = static_cast<double>(b.lost) / trials;
    CHECK(fraction == doctest::Approx(0.2).epsilon(0.05)); // i.e. 0.2 +- 0.01
    CHECK(b.lost + static_cast<int>(b.received.size()) == trials);
  }

  TEST_CASE("invalid channel configs")
  {
    Kernel k;
    ChannelConfig cfg;
    cfg.lossRate = 1.5;
    CHECK_THROWS_AS(Medium(k, cfg, {}, 1), std::invalid_argument);
    cfg.lossRate = 0;
    cfg.bandwidthBps = 0;
    CHECK_THROWS_AS(Medium(k, cfg, {}, 1), std::invalid_argument);
  }
}
