#include "v2vcc/sim/mobility.hpp"

#include <cmath>

namespace v2vcc::sim {

namespace {

double
reflect(double p, double length)
{
  if (length <= 0.0) {
    return 0.0;
  }
  double period = 2.0 * length;
  double m = std::fmod(p, period);
  if (m < 0.0) {
    m += period;
  }
  return m > length ? period - m : m;
}

} // namespace

MobilityState
MobilityState::withHeading(Vec2 origin, double speedMph, double headingRadians)
{
  double v = speedMph * METERS_PER_SECOND_PER_MPH;
  return {origin, {v * std::cos(headingRadians), v * std::sin(headingRadians)}, speedMph};
}

Vec2
positionAt(const MobilityState& m, Time t, const Arena& arena)
{
  if (m.velocity.x == 0.0 && m.velocity.y == 0.0) {
    return m.origin;
  }
  Vec2 raw = m.origin + m.velocity * (t / MS_PER_SECOND);
  return {reflect(raw.x, arena.width), reflect(raw.y, arena.height)};
}

} // namespace v2vcc::sim
