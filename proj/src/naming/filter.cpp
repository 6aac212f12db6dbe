#include "v2vcc/naming/filter.hpp"

namespace v2vcc::naming {

bool
matchesFilter(const SupplierProfile& profile, const DiscoveryFilter& filter)
{
  if (filter.area && distance(profile.location, filter.area->center) > filter.area->radiusMeters) {
    return false;
  }
  if (filter.maxPricePerKwh && profile.pricePerKwh > *filter.maxPricePerKwh) {
    return false;
  }
  if (filter.minEnergy && profile.availableEnergy < *filter.minEnergy) {
    return false;
  }
  if (filter.minReputation && profile.reputation < *filter.minReputation) {
    return false;
  }
  if (filter.windowStart || filter.windowEnd) {
    ClockTime from = filter.windowStart.value_or(ClockTime::fromMinutes(0));
    ClockTime to = filter.windowEnd.value_or(ClockTime::fromMinutes(ClockTime::MINUTES_PER_DAY - 1));
    bool overlaps = false;
    for (const auto& slot : profile.freeSlots) {
      if (slot.start <= to && from <= slot.end) {
        overlaps = true;
        break;
      }
    }
    if (!overlaps) {
      return false;
    }
  }
  return true;
}

} // namespace v2vcc::naming
