#ifndef V2VCC_PROTOCOL_NEGOTIATION_HPP
#define V2VCC_PROTOCOL_NEGOTIATION_HPP

#include "v2vcc/naming/types.hpp"
#include "v2vcc/protocol/policy.hpp"

#include <optional>

namespace v2vcc::protocol {

enum class AnswerKind {
  Agree,       ///< the consumer's offer stands
  Counter,     ///< see offer; hard on the final round
  Unavailable, ///< nothing left to sell
};

struct NegotiationAnswer
{
  AnswerKind kind = AnswerKind::Counter;
  Offer offer;
  int round = 0;
};

/**
 * @brief Supplier side of one negotiation.
 *
 * The standing price starts at the list price. An offer at or above the
 * standing price is accepted. Otherwise the supplier counters at the midpoint
 * of offer and standing price, never below its floor, and that counter becomes
 * the new standing price.
 */
class SupplierNegotiation
{
public:
  SupplierNegotiation(double listPrice, NegotiationPolicy policy);

  /// @param freeKwh energy not reserved by anyone else
  NegotiationAnswer
  respond(const Offer& offer, double freeKwh);

  double
  floor() const
  {
    return m_floor;
  }

  double
  standing() const
  {
    return m_standing;
  }

  int
  rounds() const
  {
    return m_rounds;
  }

private:
  double m_list;
  double m_floor;
  double m_standing;
  NegotiationPolicy m_policy;
  int m_rounds = 0;
};

/// Consumer side of one negotiation.
class ConsumerNegotiation
{
public:
  ConsumerNegotiation(double listPrice, double ceiling, double desiredKwh, NegotiationPolicy policy);

  Offer
  opening() const;

  struct Reaction
  {
    enum Kind {
      Accept, ///< agreement reached on the given offer
      Reject, ///< hard offer above the ceiling, or nothing to buy
      Offer,  ///< send the given offer next
    } kind;
    v2vcc::Offer offer;
  };

  /// @param last the offer the answer responds to
  Reaction
  react(const v2vcc::Offer& last, const NegotiationAnswer& answer) const;

  double
  ceiling() const
  {
    return m_ceiling;
  }

private:
  double m_list;
  double m_ceiling;
  double m_desired;
  NegotiationPolicy m_policy;
};

struct NegotiationOutcome
{
  bool agreed = false;
  Offer offer;
  int rounds = 0;
};

/// Runs both sides against each other without a network.
NegotiationOutcome
negotiateDirect(double listPrice, double ceiling, double desiredKwh, double freeKwh, NegotiationPolicy policy);

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_NEGOTIATION_HPP
