#include "v2vcc/naming/types.hpp"

#include <cmath>
#include <stdexcept>

namespace v2vcc {

namespace {

void
requireNonNegative(const std::optional<double>& v, const char* what)
{
  if (v && !(*v >= 0.0 && std::isfinite(*v))) {
    throw std::invalid_argument(std::string("filter bound must be a non-negative number: ") + what);
  }
}

} // namespace

void
DiscoveryFilter::validate() const
{
  if (area && !(area->radiusMeters >= 0.0 && std::isfinite(area->radiusMeters))) {
    throw std::invalid_argument("filter radius must be non-negative");
  }
  requireNonNegative(maxPricePerKwh, "maxPricePerKwh");
  requireNonNegative(minEnergy, "minEnergy");
  requireNonNegative(minReputation, "minReputation");
  if (windowStart && windowEnd && *windowStart > *windowEnd) {
    throw std::invalid_argument("filter window start is after its end");
  }
}

void
validateProfile(const SupplierProfile& p)
{
  if (p.pid.empty()) {
    throw std::invalid_argument("supplier profile without pid");
  }
  if (!(p.availableEnergy >= 0.0) || !(p.soc >= 0.0)) {
    throw std::invalid_argument("supplier " + p.pid + ": negative energy or state of charge");
  }
  if (!(p.reputation >= 0.0 && p.reputation <= 10.0)) {
    throw std::invalid_argument("supplier " + p.pid + ": reputation outside 0..10");
  }
  for (size_t i = 0; i < p.freeSlots.size(); ++i) {
    const auto& s = p.freeSlots[i];
    if (s.start > s.end) {
      throw std::invalid_argument("supplier " + p.pid + ": reversed free slot");
    }
    for (size_t j = 0; j < i; ++j) {
      const auto& o = p.freeSlots[j];
      if (s.start <= o.end && o.start <= s.end) {
        throw std::invalid_argument("supplier " + p.pid + ": overlapping free slots");
      }
    }
  }
}

} // namespace v2vcc
