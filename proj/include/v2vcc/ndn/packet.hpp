#ifndef V2VCC_NDN_PACKET_HPP
#define V2VCC_NDN_PACKET_HPP

#include "v2vcc/naming/name.hpp"
#include "v2vcc/sim/time.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace v2vcc::ndn {

using naming::Name;
using sim::Time;
using Nonce = std::uint64_t;
using FaceId = std::uint32_t;

struct Interest
{
  Name name;
  Nonce nonce = 0;
  Time lifetime = 30.0;
  /// Data whose name extends this name also satisfies the interest.
  bool canBePrefix = false;
  /// With canBePrefix, data whose next component (the responder pid) is in
  /// this set does not satisfy the interest.
  std::set<std::string> excludePids;

  /// Whether Data named @p dataName satisfies this interest.
  bool
  matches(const Name& dataName) const;

  /// Same name and selectors, ignoring nonce and lifetime.
  bool
  sameRequest(const Interest& other) const
  {
    return name == other.name && canBePrefix == other.canBePrefix && excludePids == other.excludePids;
  }
};

struct Data
{
  Name name;
  std::string payload;
  std::string signerPid;
  std::string signatureDigest;
  Time freshness = 100.0;

  /// Builds a Data packet signed with the stub scheme.
  static Data
  make(Name name, std::string payload, std::string signerPid, Time freshness);
};

/// Stub digest over name, payload and signer.
std::string
computeSignature(const Name& name, std::string_view payload, std::string_view signerPid);

bool
verifySignature(const Data& data);

class PacketError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

using Packet = std::variant<Interest, Data>;

/// Self-describing text encoding used on the simulated air interface.
std::string
encodePacket(const Packet& packet);

/// @throw PacketError on anything that is not a well-formed Interest or Data
Packet
decodePacket(std::string_view wire);

} // namespace v2vcc::ndn

#endif // V2VCC_NDN_PACKET_HPP
