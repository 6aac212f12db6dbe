#include "v2vcc/protocol/payload.hpp"

#include <json.hpp>

namespace v2vcc::protocol {

using nlohmann::json;

namespace {

json
point(Vec2 p)
{
  return json::array({p.x, p.y});
}

Vec2
toPoint(const json& j)
{
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json
slot(const TimeSlot& s)
{
  return json::array({s.start.minutes(), s.end.minutes()});
}

TimeSlot
toSlot(const json& j)
{
  return {ClockTime::fromMinutes(j.at(0).get<int>()), ClockTime::fromMinutes(j.at(1).get<int>())};
}

json
meeting(const MeetingProposal& m)
{
  json j = {{"from", m.windowStart.minutes()}, {"to", m.windowEnd.minutes()}};
  if (m.location) {
    j["at"] = point(*m.location);
  }
  return j;
}

MeetingProposal
toMeeting(const json& j)
{
  MeetingProposal m{ClockTime::fromMinutes(j.at("from").get<int>()), ClockTime::fromMinutes(j.at("to").get<int>()),
                    std::nullopt};
  if (j.contains("at")) {
    m.location = toPoint(j.at("at"));
  }
  return m;
}

template<typename F>
auto
decoding(const std::string& text, const char* what, F&& f)
{
  try {
    return f(json::parse(text));
  }
  catch (const json::exception& e) {
    throw PayloadError(std::string("bad ") + what + " payload: " + e.what());
  }
  catch (const std::out_of_range& e) {
    throw PayloadError(std::string("bad ") + what + " payload: " + e.what());
  }
}

} // namespace

std::string
encodeProfile(const SupplierProfile& p)
{
  json slots = json::array();
  for (const auto& s : p.freeSlots) {
    slots.push_back(slot(s));
  }
  json j = {
    {"pid", p.pid},
    {"at", point(p.location)},
    {"price", p.pricePerKwh},
    {"energy", p.availableEnergy},
    {"reputation", p.reputation},
    {"slots", slots},
    {"soc", p.soc},
    {"rate", p.consumptionRate},
  };
  if (p.reservedUntil) {
    j["reservedUntil"] = *p.reservedUntil;
  }
  return j.dump();
}

SupplierProfile
decodeProfile(const std::string& text)
{
  return decoding(text, "profile", [] (const json& j) {
    SupplierProfile p;
    p.pid = j.at("pid").get<std::string>();
    p.location = toPoint(j.at("at"));
    p.pricePerKwh = j.at("price").get<double>();
    p.availableEnergy = j.at("energy").get<double>();
    p.reputation = j.at("reputation").get<double>();
    for (const auto& s : j.at("slots")) {
      p.freeSlots.push_back(toSlot(s));
    }
    p.soc = j.at("soc").get<double>();
    p.consumptionRate = j.at("rate").get<double>();
    if (j.contains("reservedUntil")) {
      p.reservedUntil = j.at("reservedUntil").get<double>();
    }
    try {
      validateProfile(p);
    }
    catch (const std::invalid_argument& e) {
      throw PayloadError(std::string("invalid profile: ") + e.what());
    }
    return p;
  });
}

std::string
encodeAnswer(const NegotiationAnswer& a)
{
  static const char* kinds[] = {"agree", "counter", "unavailable"};
  return json{
    {"kind", kinds[static_cast<int>(a.kind)]},
    {"price", a.offer.pricePerKwh},
    {"amount", a.offer.amountKwh},
    {"hard", a.offer.hard},
    {"round", a.round},
  }.dump();
}

NegotiationAnswer
decodeAnswer(const std::string& text)
{
  return decoding(text, "negotiation", [] (const json& j) {
    NegotiationAnswer a;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "agree") {
      a.kind = AnswerKind::Agree;
    }
    else if (kind == "counter") {
      a.kind = AnswerKind::Counter;
    }
    else if (kind == "unavailable") {
      a.kind = AnswerKind::Unavailable;
    }
    else {
      throw PayloadError("unknown negotiation answer '" + kind + "'");
    }
    a.offer = {j.at("price").get<double>(), j.at("amount").get<double>(), j.at("hard").get<bool>()};
    a.round = j.at("round").get<int>();
    return a;
  });
}

std::string
encodeCoordination(const CoordinationReply& r)
{
  static const char* kinds[] = {"accept", "counter", "reject"};
  json j = {{"kind", kinds[r.kind]}};
  if (r.location) {
    j["at"] = point(*r.location);
  }
  if (r.timeFrame) {
    j["frame"] = slot(*r.timeFrame);
  }
  if (!r.reason.empty()) {
    j["reason"] = r.reason;
  }
  return j.dump();
}

CoordinationReply
decodeCoordination(const std::string& text)
{
  return decoding(text, "coordination", [] (const json& j) {
    CoordinationReply r;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "accept") {
      r.kind = CoordinationReply::Accept;
    }
    else if (kind == "counter") {
      r.kind = CoordinationReply::Counter;
    }
    else if (kind == "reject") {
      r.kind = CoordinationReply::Reject;
    }
    else {
      throw PayloadError("unknown coordination reply '" + kind + "'");
    }
    if (j.contains("at")) {
      r.location = toPoint(j.at("at"));
    }
    if (j.contains("frame")) {
      r.timeFrame = toSlot(j.at("frame"));
    }
    r.reason = j.value("reason", "");
    return r;
  });
}

std::string
encodeAck(const ConfirmationAck& a)
{
  json j = {{"confirmed", a.confirmed}};
  if (a.record) {
    const auto& r = *a.record;
    j["record"] = {
      {"cid", r.cid}, {"pid", r.pid}, {"price", r.price}, {"amount", r.amount},
      {"meeting", meeting(r.meeting)}, {"confirmedAt", r.confirmedAt},
    };
  }
  if (!a.reason.empty()) {
    j["reason"] = a.reason;
  }
  return j.dump();
}

ConfirmationAck
decodeAck(const std::string& text)
{
  return decoding(text, "confirmation", [] (const json& j) {
    ConfirmationAck a;
    a.confirmed = j.at("confirmed").get<bool>();
    if (j.contains("record")) {
      const json& r = j.at("record");
      a.record = TransactionRecord{
        r.at("cid").get<std::string>(), r.at("pid").get<std::string>(), r.at("price").get<double>(),
        r.at("amount").get<double>(), toMeeting(r.at("meeting")), r.at("confirmedAt").get<double>(),
      };
    }
    a.reason = j.value("reason", "");
    return a;
  });
}

} // namespace v2vcc::protocol
