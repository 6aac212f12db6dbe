#include "v2vcc/protocol/policy.hpp"

#include <stdexcept>

namespace v2vcc::protocol {

std::string_view
toString(Criterion c)
{
  switch (c) {
    case Criterion::Price:
      return "price";
    case Criterion::Distance:
      return "distance";
    case Criterion::Reputation:
      return "reputation";
  }
  return "?";
}

void
NegotiationPolicy::validate() const
{
  if (!(openingDiscount >= 0.0 && openingDiscount < 1.0)) {
    throw std::invalid_argument("opening discount must be within [0, 1)");
  }
  if (!(concessionStep > 0.0)) {
    throw std::invalid_argument("concession step must be positive");
  }
  if (!(floorFraction > 0.0 && floorFraction <= 1.0)) {
    throw std::invalid_argument("floor fraction must be within (0, 1]");
  }
  if (maxRounds < 1) {
    throw std::invalid_argument("negotiation needs at least one round");
  }
}

void
ProtocolConfig::validate() const
{
  if (!(timeoutMs > 0.0)) {
    throw std::invalid_argument("timeout must be positive");
  }
  if (maxRetx < 0 || phaseRetries < 0) {
    throw std::invalid_argument("retry budgets must be non-negative");
  }
  if (discoveryTarget < 1) {
    throw std::invalid_argument("discovery target must be at least 1");
  }
  if (criteria.empty()) {
    throw std::invalid_argument("supplier ranking needs at least one criterion");
  }
  if (reserveKwh < 0.0 || !(reservationWindowMs > 0.0) || locationDriftMeters < 0.0 || !(defaultTravelMph > 0.0)) {
    throw std::invalid_argument("invalid protocol margins");
  }
  if (!(discoveryFreshnessMs > 0.0) || !(p2pFreshnessMs > 0.0)) {
    throw std::invalid_argument("freshness periods must be positive");
  }
  negotiation.validate();
}

} // namespace v2vcc::protocol
