#include "v2vcc/naming/filter.hpp"
#include "v2vcc/naming/message.hpp"
#include "v2vcc/sim/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace v2vcc;
using namespace v2vcc::naming;

namespace {

ClockTime
hhmm(int v)
{
  return ClockTime::fromHhmm(v);
}

DiscoveryFilter
paperFilter()
{
  DiscoveryFilter f;
  f.area = SearchArea{{0, 0}, 2000};
  f.maxPricePerKwh = 0.10;
  f.minEnergy = 25;
  f.minReputation = 7;
  f.windowStart = hhmm(1400);
  f.windowEnd = hhmm(1500);
  return f;
}

// Written independently of matchesFilter: every bound is checked separately
// and the results are combined at the end.
bool
bruteForceMatch(const SupplierProfile& p, const DiscoveryFilter& f)
{
  std::vector<bool> checks;
  if (f.area) {
    double dx = p.location.x - f.area->center.x;
    double dy = p.location.y - f.area->center.y;
    checks.push_back(std::sqrt(dx * dx + dy * dy) <= f.area->radiusMeters);
  }
  if (f.maxPricePerKwh) {
    checks.push_back(!(p.pricePerKwh > *f.maxPricePerKwh));
  }
  if (f.minEnergy) {
    checks.push_back(!(p.availableEnergy < *f.minEnergy));
  }
  if (f.minReputation) {
    checks.push_back(!(p.reputation < *f.minReputation));
  }
  if (f.windowStart || f.windowEnd) {
    int ws = f.windowStart ? f.windowStart->minutes() : 0;
    int we = f.windowEnd ? f.windowEnd->minutes() : 24 * 60 - 1;
    bool any = false;
    for (const auto& s : p.freeSlots) {
      for (int m = s.start.minutes(); m <= s.end.minutes(); ++m) {
        if (m >= ws && m <= we) {
          any = true;
        }
      }
    }
    checks.push_back(any);
  }
  for (bool c : checks) {
    if (!c) {
      return false;
    }
  }
  return true;
}

double
roundTo(double v, double step)
{
  return std::round(v / step) * step;
}

SupplierProfile
randomProfile(sim::Rng& rng)
{
  SupplierProfile p;
  p.pid = "EV" + std::to_string(rng.uniformInt(1, 99));
  p.location = {roundTo(rng.uniform(0, 3000), 0.5), roundTo(rng.uniform(0, 3000), 0.5)};
  p.pricePerKwh = roundTo(rng.uniform(0.05, 0.15), 0.01);
  p.availableEnergy = static_cast<double>(rng.uniformInt(0, 60));
  p.reputation = static_cast<double>(rng.uniformInt(0, 10));
  int start = static_cast<int>(rng.uniformInt(0, 1300));
  p.freeSlots.push_back({ClockTime::fromMinutes(start), ClockTime::fromMinutes(start + rng.uniformInt(0, 120))});
  p.soc = 20;
  p.consumptionRate = 0.2;
  return p;
}

DiscoveryFilter
randomFilter(sim::Rng& rng)
{
  DiscoveryFilter f;
  if (rng.bernoulli(0.5)) {
    f.area = SearchArea{{roundTo(rng.uniform(0, 3000), 1), roundTo(rng.uniform(0, 3000), 1)},
                        static_cast<double>(rng.uniformInt(0, 3000))};
  }
  if (rng.bernoulli(0.5)) {
    f.maxPricePerKwh = roundTo(rng.uniform(0.05, 0.15), 0.01);
  }
  if (rng.bernoulli(0.5)) {
    f.minEnergy = static_cast<double>(rng.uniformInt(0, 60));
  }
  if (rng.bernoulli(0.5)) {
    f.minReputation = static_cast<double>(rng.uniformInt(0, 10));
  }
  if (rng.bernoulli(0.5)) {
    int a = static_cast<int>(rng.uniformInt(0, 1439));
    int b = static_cast<int>(rng.uniformInt(0, 1439));
    f.windowStart = ClockTime::fromMinutes(std::min(a, b));
    if (rng.bernoulli(0.7)) {
      f.windowEnd = ClockTime::fromMinutes(std::max(a, b));
    }
  }
  return f;
}

std::string
randomId(sim::Rng& rng, const char* prefix)
{
  return prefix + std::to_string(rng.uniformInt(0, 500));
}

ParsedMessage
randomMessage(sim::Rng& rng)
{
  ParsedMessage m;
  m.timestamp = static_cast<std::uint64_t>(rng.uniformInt(0, 1'000'000'000));
  auto offer = [&] {
    return Offer{roundTo(rng.uniform(0.01, 1.0), 0.001), roundTo(rng.uniform(0.1, 80), 0.1), false};
  };
  auto meeting = [&] (bool requireLocation) {
    int a = static_cast<int>(rng.uniformInt(0, 1439));
    int b = static_cast<int>(rng.uniformInt(0, 1439));
    MeetingProposal mp{ClockTime::fromMinutes(std::min(a, b)), ClockTime::fromMinutes(std::max(a, b)), std::nullopt};
    if (requireLocation || rng.bernoulli(0.5)) {
      mp.location = Vec2{rng.uniform(0, 1000), rng.uniform(0, 1000)};
    }
    return mp;
  };
  switch (rng.uniformInt(0, 4)) {
    case 0:
      m.phase = Phase::Discovery;
      m.filter = randomFilter(rng);
      if (m.filter->area) {
        m.filter->area->radiusMeters = rng.uniform(0, 5000);
      }
      if (m.filter->maxPricePerKwh) {
        m.filter->maxPricePerKwh = rng.uniform(0, 1);
      }
      if (rng.bernoulli(0.5)) {
        m.pid = randomId(rng, "EV");
      }
      return m;
    case 1:
      m.phase = Phase::Verification;
      m.pid = randomId(rng, "EV");
      return m;
    case 2:
      m.phase = Phase::Negotiation;
      m.offer = offer();
      break;
    case 3:
      m.phase = Phase::Coordination;
      m.meeting = meeting(false);
      break;
    default:
      m.phase = Phase::Confirmation;
      m.offer = offer();
      m.meeting = meeting(true);
      m.agreementDigest = "d" + std::to_string(rng.next64() % 100000);
      break;
  }
  m.pid = randomId(rng, "EV");
  if (rng.bernoulli(0.5)) {
    m.cid = randomId(rng, "C");
  }
  return m;
}

} // namespace

TEST_SUITE("Name")
{
  TEST_CASE("uri round trip")
  {
    Name n = Name::fromUri("/FastCharging/EV7/Verification/5");
    CHECK(n.size() == 4);
    CHECK(n.at(1) == "EV7");
    CHECK(n.toUri() == "/FastCharging/EV7/Verification/5");
    CHECK(Name::fromUri(n.toUri()) == n);
  }

  TEST_CASE("invalid names")
  {
    CHECK_THROWS_AS(Name::fromUri(""), Name::Error);
    CHECK_THROWS_AS(Name::fromUri("/"), Name::Error);
    CHECK_THROWS_AS(Name::fromUri("a/b"), Name::Error);
    CHECK_THROWS_AS(Name::fromUri("/a//b"), Name::Error);
    CHECK_THROWS_AS(Name(std::vector<std::string>{}), Name::Error);
    CHECK_THROWS_AS(Name({"a/b"}), Name::Error);
  }

  TEST_CASE("prefix relation")
  {
    Name a = Name::fromUri("/FastCharging/Discovery");
    Name b = Name::fromUri("/FastCharging/Discovery/x");
    CHECK(a.isPrefixOf(b));
    CHECK(a.isPrefixOf(a));
    CHECK_FALSE(b.isPrefixOf(a));
    CHECK(b.prefix(2) == a);
    CHECK(a.append("x") == b);
  }
}

TEST_SUITE("encode and parse")
{
  TEST_CASE("discovery with the example filter")
  {
    ParsedMessage m;
    m.phase = Phase::Discovery;
    m.filter = paperFilter();
    m.timestamp = 42;
    Name n = encodeName(m);
    CHECK(n.toUri() == "/FastCharging/Discovery/0,0+2km/0.10/25/7/1400/1500/42");
    CHECK(parseName(n) == m);
  }

  TEST_CASE("discovery with an empty filter")
  {
    ParsedMessage m;
    m.phase = Phase::Discovery;
    m.filter = DiscoveryFilter{};
    m.timestamp = 0;
    CHECK(encodeName(m).toUri() == "/FastCharging/Discovery/-/-/-/-/-/-/0");
    ParsedMessage back = parseName(Name::fromUri("/FastCharging/Discovery/-/-/-/-/-/-/0"));
    CHECK((back.phase == Phase::Discovery));
    CHECK(back.filter == DiscoveryFilter{});
    CHECK(back.timestamp == 0);
    CHECK_FALSE(back.pid);
  }

  TEST_CASE("verification")
  {
    ParsedMessage m;
    m.phase = Phase::Verification;
    m.pid = "EV7";
    m.timestamp = 5;
    CHECK(encodeName(m).toUri() == "/FastCharging/EV7/Verification/5");
  }

  TEST_CASE("negotiation")
  {
    ParsedMessage m = parseName(Name::fromUri("/FastCharging/EV3/Negotiation/0.08/20/17"));
    CHECK((m.phase == Phase::Negotiation));
    CHECK(m.pid == "EV3");
    REQUIRE(m.offer);
    CHECK(m.offer->pricePerKwh == 0.08);
    CHECK(m.offer->amountKwh == 20);
    CHECK(m.timestamp == 17);
    CHECK_FALSE(m.cid);
  }

  TEST_CASE("coordination and confirmation")
  {
    ParsedMessage c = parseName(Name::fromUri("/FastCharging/EV3/Coordination/Spatial/Temporal/1400-1500/-/9/C1"));
    CHECK((c.phase == Phase::Coordination));
    REQUIRE(c.meeting);
    CHECK(c.meeting->windowStart == hhmm(1400));
    CHECK(c.meeting->windowEnd == hhmm(1500));
    CHECK_FALSE(c.meeting->location);
    CHECK(c.cid == "C1");

    ParsedMessage f = parseName(
      Name::fromUri("/FastCharging/EV3/Coordination/1400-1430/10.5,20/Negotiation/0.09/7.5/abc/11"));
    CHECK((f.phase == Phase::Confirmation));
    CHECK(f.meeting->location == Vec2{10.5, 20});
    CHECK(f.offer->amountKwh == 7.5);
    CHECK(f.agreementDigest == "abc");
  }

  TEST_CASE("malformed names")
  {
    for (const char* uri : {"/FastCharging/Bogus", "/Other/Discovery/-/-/-/-/-/-/0", "/FastCharging/Discovery/-/-/-/-/-/0",
                            "/FastCharging/EV3/Negotiation/cheap/20/17", "/FastCharging/EV3/Negotiation/0.08/20",
                            "/FastCharging/EV3/Verification/-5", "/FastCharging/EV3/Coordination/Spatial/Temporal/2500-2600/-/1",
                            "/FastCharging/Discovery/-/-/-/-/1500/1400/0", "/FastCharging/Discovery/1,2+xkm/-/-/-/-/-/0",
                            "/FastCharging/EV3/Negotiation/1e-2/20/17"}) {
      INFO(std::string(uri));
      CHECK_THROWS_AS(parseName(Name::fromUri(uri)), MalformedName);
    }
  }

  TEST_CASE("randomized round trip")
  {
    sim::Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
      ParsedMessage m = randomMessage(rng);
      Name n = encodeName(m);
      CAPTURE(n.toUri());
      REQUIRE(n.at(0) == "FastCharging");
      CHECK(parseName(n) == m);
      CHECK(parseName(Name::fromUri(n.toUri())) == m);
    }
  }

  TEST_CASE("data name derivation")
  {
    Name disco = Name::fromUri("/FastCharging/Discovery/-/-/-/-/-/-/0");
    CHECK(dataNameFor(disco, "EV1").toUri() == "/FastCharging/Discovery/-/-/-/-/-/-/0/EV1");
    Name verif = Name::fromUri("/FastCharging/EV1/Verification/5");
    CHECK(dataNameFor(verif, "EV1") == verif);
    CHECK_THROWS_AS(dataNameFor(verif, "EV2"), MalformedName);
    CHECK_THROWS_AS(dataNameFor(Name::fromUri("/FastCharging/Bogus"), "EV1"), MalformedName);
  }

  TEST_CASE("identifiers")
  {
    CHECK_NOTHROW(validateIdentifier("EV12"));
    CHECK_THROWS(validateIdentifier(""));
    CHECK_THROWS(validateIdentifier("-"));
    CHECK_THROWS(validateIdentifier("Discovery"));
    CHECK_THROWS(validateIdentifier("a/b"));
  }
}

TEST_SUITE("matchesFilter")
{
  TEST_CASE("examples")
  {
    SupplierProfile p;
    p.pid = "EV1";
    p.location = {1500, 0};
    p.pricePerKwh = 0.09;
    p.availableEnergy = 30;
    p.reputation = 8;
    p.freeSlots = {{hhmm(1400), hhmm(1600)}};
    CHECK(matchesFilter(p, paperFilter()));
    CHECK(matchesFilter(p, DiscoveryFilter{}));

    SupplierProfile low = p;
    low.reputation = 6;
    DiscoveryFilter repOnly;
    repOnly.minReputation = 7;
    CHECK_FALSE(matchesFilter(low, repOnly));
  }

  TEST_CASE("agrees with a brute-force evaluator")
  {
    sim::Rng rng(7);
    int matches = 0;
    for (int i = 0; i < 5000; ++i) {
      SupplierProfile p = randomProfile(rng);
      DiscoveryFilter f = randomFilter(rng);
      bool expected = bruteForceMatch(p, f);
      matches += expected;
      REQUIRE(matchesFilter(p, f) == expected);
    }
    // both outcomes must actually be exercised
    CHECK(matches > 200);
    CHECK(matches < 4800);
  }

  TEST_CASE("removing a bound never turns a match into a mismatch")
  {
    sim::Rng rng(11);
    for (int i = 0; i < 3000; ++i) {
      SupplierProfile p = randomProfile(rng);
      DiscoveryFilter f = randomFilter(rng);
      if (!matchesFilter(p, f)) {
        continue;
      }
      for (int field = 0; field < 5; ++field) {
        DiscoveryFilter relaxed = f;
        switch (field) {
          case 0: relaxed.area.reset(); break;
          case 1: relaxed.maxPricePerKwh.reset(); break;
          case 2: relaxed.minEnergy.reset(); break;
          case 3: relaxed.minReputation.reset(); break;
          default: relaxed.windowStart.reset(); relaxed.windowEnd.reset(); break;
        }
        REQUIRE(matchesFilter(p, relaxed));
      }
    }
  }
}
