#ifndef V2VCC_PROTOCOL_COORDINATION_HPP
#define V2VCC_PROTOCOL_COORDINATION_HPP

#include "v2vcc/naming/types.hpp"

#include <optional>

namespace v2vcc::protocol {

/// Whether a vehicle with @p socKwh left can drive from @p from to @p to
/// (straight line) and still keep @p reserveKwh.
bool
feasibleMeeting(double socKwh, double kwhPerKm, Vec2 from, Vec2 to, double reserveKwh);

/// Whole minutes needed to cover @p meters at @p mph, rounded up.
int
travelMinutes(double meters, double mph);

/**
 * Earliest common time frame: not before either window starts, not before
 * @p earliest (now plus travel), inside one of the supplier's free slots.
 * Returns nullopt when nothing is left.
 */
std::optional<TimeSlot>
resolveTimeFrame(ClockTime windowStart, ClockTime windowEnd, const std::vector<TimeSlot>& freeSlots,
                 ClockTime earliest);

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_COORDINATION_HPP
