#ifndef V2VCC_SIM_MOBILITY_HPP
#define V2VCC_SIM_MOBILITY_HPP

#include "v2vcc/common/geometry.hpp"
#include "v2vcc/sim/time.hpp"

namespace v2vcc::sim {

inline constexpr double METERS_PER_SECOND_PER_MPH = 0.44704;

/// Rectangular area [0, width] x [0, height] with reflective walls.
struct Arena
{
  double width = 1000.0;
  double height = 1000.0;
};

/// Constant-velocity movement; velocity magnitude equals speedMph in m/s.
struct MobilityState
{
  Vec2 origin;
  Vec2 velocity; ///< m/s
  double speedMph = 0.0;

  /// Moves at @p speedMph along @p headingRadians (0 = +x).
  static MobilityState
  withHeading(Vec2 origin, double speedMph, double headingRadians);

  static MobilityState
  stationary(Vec2 origin)
  {
    return {origin, {0.0, 0.0}, 0.0};
  }
};

/// Position after @p t ms, reflecting off the arena walls.
Vec2
positionAt(const MobilityState& m, Time t, const Arena& arena);

} // namespace v2vcc::sim

#endif // V2VCC_SIM_MOBILITY_HPP
