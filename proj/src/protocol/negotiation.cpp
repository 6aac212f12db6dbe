#include "v2vcc/protocol/negotiation.hpp"

#include <algorithm>
#include <stdexcept>

namespace v2vcc::protocol {

namespace {

// prices that differ by less than this are the same price
constexpr double PRICE_EPSILON = 1e-12;

} // namespace

SupplierNegotiation::SupplierNegotiation(double listPrice, NegotiationPolicy policy)
  : m_list(listPrice)
  , m_floor(listPrice * policy.floorFraction)
  , m_standing(listPrice)
  , m_policy(policy)
{
  if (!(listPrice > 0.0)) {
    throw std::invalid_argument("list price must be positive");
  }
  policy.validate();
}

NegotiationAnswer
SupplierNegotiation::respond(const Offer& offer, double freeKwh)
{
  NegotiationAnswer answer;
  answer.round = ++m_rounds;
  if (!(freeKwh > 0.0)) {
    answer.kind = AnswerKind::Unavailable;
    return answer;
  }
  double amount = std::min(offer.amountKwh, freeKwh);
  if (offer.pricePerKwh + PRICE_EPSILON >= m_standing) {
    answer.kind = AnswerKind::Agree;
    answer.offer = {offer.pricePerKwh, amount, false};
    return answer;
  }
  m_standing = std::max(m_floor, (offer.pricePerKwh + m_standing) / 2.0);
  answer.kind = AnswerKind::Counter;
  answer.offer = {m_standing, amount, m_rounds >= m_policy.maxRounds};
  return answer;
}

ConsumerNegotiation::ConsumerNegotiation(double listPrice, double ceiling, double desiredKwh,
                                         NegotiationPolicy policy)
  : m_list(listPrice)
  , m_ceiling(ceiling)
  , m_desired(desiredKwh)
  , m_policy(policy)
{
  if (!(listPrice > 0.0) || !(desiredKwh > 0.0)) {
    throw std::invalid_argument("list price and desired energy must be positive");
  }
  policy.validate();
}

Offer
ConsumerNegotiation::opening() const
{
  double price = std::min(m_list * (1.0 - m_policy.openingDiscount), m_ceiling);
  return {price, m_desired, false};
}

ConsumerNegotiation::Reaction
ConsumerNegotiation::react(const v2vcc::Offer& last, const NegotiationAnswer& answer) const
{
  switch (answer.kind) {
    case AnswerKind::Unavailable:
      return {Reaction::Reject, {}};
    case AnswerKind::Agree:
      return {Reaction::Accept, answer.offer};
    case AnswerKind::Counter:
      break;
  }
  const v2vcc::Offer& counter = answer.offer;
  if (counter.hard) {
    if (counter.pricePerKwh <= m_ceiling + PRICE_EPSILON) {
      return {Reaction::Accept, counter};
    }
    return {Reaction::Reject, counter};
  }
  double next = std::min({counter.pricePerKwh, last.pricePerKwh + m_policy.concessionStep * m_list, m_ceiling});
  return {Reaction::Offer, {next, counter.amountKwh, false}};
}

NegotiationOutcome
negotiateDirect(double listPrice, double ceiling, double desiredKwh, double freeKwh, NegotiationPolicy policy)
{
  SupplierNegotiation supplier(listPrice, policy);
  ConsumerNegotiation consumer(listPrice, ceiling, desiredKwh, policy);
  NegotiationOutcome out;
  Offer offer = consumer.opening();
  while (true) {
    NegotiationAnswer answer = supplier.respond(offer, freeKwh);
    out.rounds = answer.round;
    auto reaction = consumer.react(offer, answer);
    if (reaction.kind == ConsumerNegotiation::Reaction::Accept) {
      out.agreed = true;
      out.offer = reaction.offer;
      return out;
    }
    if (reaction.kind == ConsumerNegotiation::Reaction::Reject) {
      return out;
    }
    offer = reaction.offer;
  }
}

} // namespace v2vcc::protocol
