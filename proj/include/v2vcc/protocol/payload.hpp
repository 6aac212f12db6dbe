#ifndef V2VCC_PROTOCOL_PAYLOAD_HPP
#define V2VCC_PROTOCOL_PAYLOAD_HPP

#include "v2vcc/protocol/negotiation.hpp"
#include "v2vcc/protocol/session.hpp"

#include <stdexcept>
#include <string>

namespace v2vcc::protocol {

class PayloadError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string
encodeProfile(const SupplierProfile& p);

/// @throw PayloadError
SupplierProfile
decodeProfile(const std::string& text);

std::string
encodeAnswer(const NegotiationAnswer& a);

NegotiationAnswer
decodeAnswer(const std::string& text);

struct CoordinationReply
{
  enum Kind {
    Accept,  ///< the proposed location stands
    Counter, ///< the supplier names a different place
    Reject,
  } kind = Reject;
  std::optional<Vec2> location;
  std::optional<TimeSlot> timeFrame;
  std::string reason;
};

std::string
encodeCoordination(const CoordinationReply& r);

CoordinationReply
decodeCoordination(const std::string& text);

struct ConfirmationAck
{
  bool confirmed = false;
  std::optional<TransactionRecord> record;
  std::string reason;
};

std::string
encodeAck(const ConfirmationAck& a);

ConfirmationAck
decodeAck(const std::string& text);

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_PAYLOAD_HPP
