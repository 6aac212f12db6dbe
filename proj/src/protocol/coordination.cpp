#include "v2vcc/protocol/coordination.hpp"
#include "v2vcc/sim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace v2vcc::protocol {

bool
feasibleMeeting(double socKwh, double kwhPerKm, Vec2 from, Vec2 to, double reserveKwh)
{
  if (!(kwhPerKm > 0.0)) {
    throw std::invalid_argument("consumption rate must be positive");
  }
  return distance(from, to) / 1000.0 * kwhPerKm <= socKwh - reserveKwh;
}

int
travelMinutes(double meters, double mph)
{
  if (!(mph > 0.0)) {
    throw std::invalid_argument("travel speed must be positive");
  }
  double metersPerMinute = mph * sim::METERS_PER_SECOND_PER_MPH * 60.0;
  return static_cast<int>(std::ceil(meters / metersPerMinute - 1e-9));
}

std::optional<TimeSlot>
resolveTimeFrame(ClockTime windowStart, ClockTime windowEnd, const std::vector<TimeSlot>& freeSlots,
                 ClockTime earliest)
{
  for (const auto& slot : freeSlots) {
    ClockTime start = std::max({windowStart, slot.start, earliest});
    ClockTime end = std::min(windowEnd, slot.end);
    if (start <= end) {
      return TimeSlot{start, end};
    }
  }
  return std::nullopt;
}

} // namespace v2vcc::protocol
