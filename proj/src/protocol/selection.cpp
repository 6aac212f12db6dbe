#include "v2vcc/protocol/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace v2vcc::protocol {

bool
rankedBefore(const SupplierProfile& a, const SupplierProfile& b, Vec2 consumer,
             const std::vector<Criterion>& criteria)
{
  for (Criterion c : criteria) {
    double ka = 0.0;
    double kb = 0.0;
    switch (c) {
      case Criterion::Price:
        ka = a.pricePerKwh;
        kb = b.pricePerKwh;
        break;
      case Criterion::Distance:
        ka = distance(a.location, consumer);
        kb = distance(b.location, consumer);
        break;
      case Criterion::Reputation:
        ka = -a.reputation;
        kb = -b.reputation;
        break;
    }
    if (ka != kb) {
      return ka < kb;
    }
  }
  return a.pid < b.pid;
}

std::string
selectSupplier(const std::vector<SupplierProfile>& candidates, Vec2 consumer,
               const std::vector<Criterion>& criteria)
{
  if (candidates.empty()) {
    throw std::invalid_argument("no candidates to select from");
  }
  auto best = std::min_element(candidates.begin(), candidates.end(), [&] (const auto& a, const auto& b) {
    return rankedBefore(a, b, consumer, criteria);
  });
  return best->pid;
}

} // namespace v2vcc::protocol
