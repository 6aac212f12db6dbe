#include "v2vcc/ndn/packet.hpp"
#include "v2vcc/common/digest.hpp"

#include <json.hpp>

namespace v2vcc::ndn {

using json = nlohmann::json;

bool
Interest::matches(const Name& dataName) const
{
  if (!canBePrefix) {
    return name == dataName;
  }
  if (!name.isPrefixOf(dataName)) {
    return false;
  }
  return dataName.size() == name.size() || excludePids.count(dataName.at(name.size())) == 0;
}

std::string
computeSignature(const Name& name, std::string_view payload, std::string_view signerPid)
{
  return stubDigestHex({name.toUri(), payload, signerPid});
}

Data
Data::make(Name name, std::string payload, std::string signerPid, Time freshness)
{
  std::string sig = computeSignature(name, payload, signerPid);
  return Data{std::move(name), std::move(payload), std::move(signerPid), std::move(sig), freshness};
}

bool
verifySignature(const Data& data)
{
  return data.signatureDigest == computeSignature(data.name, data.payload, data.signerPid);
}

std::string
encodePacket(const Packet& packet)
{
  json j;
  if (const auto* i = std::get_if<Interest>(&packet)) {
    j["type"] = "interest";
    j["name"] = i->name.toUri();
    j["nonce"] = i->nonce;
    j["lifetime"] = i->lifetime;
    if (i->canBePrefix) {
      j["canBePrefix"] = true;
    }
    if (!i->excludePids.empty()) {
      j["exclude"] = i->excludePids;
    }
  }
  else {
    const auto& d = std::get<Data>(packet);
    j["type"] = "data";
    j["name"] = d.name.toUri();
    j["payload"] = d.payload;
    j["signer"] = d.signerPid;
    j["signature"] = d.signatureDigest;
    j["freshness"] = d.freshness;
  }
  return j.dump();
}

Packet
decodePacket(std::string_view wire)
{
  try {
    json j = json::parse(wire);
    std::string type = j.at("type").get<std::string>();
    Name name = Name::fromUri(j.at("name").get<std::string>());
    if (type == "interest") {
      Interest i{std::move(name)};
      i.nonce = j.at("nonce").get<Nonce>();
      i.lifetime = j.at("lifetime").get<double>();
      i.canBePrefix = j.value("canBePrefix", false);
      if (j.contains("exclude")) {
        i.excludePids = j.at("exclude").get<std::set<std::string>>();
      }
      if (!(i.lifetime > 0.0)) {
        throw PacketError("interest lifetime must be positive");
      }
      return i;
    }
    if (type == "data") {
      Data d{std::move(name)};
      d.payload = j.at("payload").get<std::string>();
      d.signerPid = j.at("signer").get<std::string>();
      d.signatureDigest = j.at("signature").get<std::string>();
      d.freshness = j.at("freshness").get<double>();
      if (!(d.freshness > 0.0)) {
        throw PacketError("data freshness must be positive");
      }
      return d;
    }
    throw PacketError("unknown packet type '" + type + "'");
  }
  catch (const PacketError&) {
    throw;
  }
  catch (const std::exception& e) {
    throw PacketError(std::string("undecodable packet: ") + e.what());
  }
}

} // namespace v2vcc::ndn
