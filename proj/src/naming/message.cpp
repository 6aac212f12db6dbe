#include "v2vcc/naming/message.hpp"
#include "v2vcc/common/decimal.hpp"

#include <array>
#include <charconv>

namespace v2vcc::naming {

namespace {

constexpr std::string_view KW_DISCOVERY = "Discovery";
constexpr std::string_view KW_VERIFICATION = "Verification";
constexpr std::string_view KW_NEGOTIATION = "Negotiation";
constexpr std::string_view KW_COORDINATION = "Coordination";
constexpr std::string_view KW_SPATIAL = "Spatial";
constexpr std::string_view KW_TEMPORAL = "Temporal";

constexpr int PRICE_MIN_FRACTION = 2;

// ---- encoding helpers ----

std::string
encodePrice(double price)
{
  return decimal::format(price, PRICE_MIN_FRACTION);
}

std::string
encodePoint(Vec2 p)
{
  return decimal::format(p.x) + "," + decimal::format(p.y);
}

std::string
encodeArea(const std::optional<SearchArea>& area)
{
  if (!area) {
    return std::string(ABSENT);
  }
  return encodePoint(area->center) + "+" + decimal::shiftPoint(decimal::format(area->radiusMeters), 3) + "km";
}

template<typename T, typename F>
std::string
encodeOptional(const std::optional<T>& v, F&& fmt)
{
  return v ? fmt(*v) : std::string(ABSENT);
}

std::string
encodeWindow(const MeetingProposal& m)
{
  return m.windowStart.toString() + "-" + m.windowEnd.toString();
}

// ---- decoding helpers ----

[[noreturn]] void
malformed(const Name& name, const std::string& why)
{
  throw MalformedName("malformed name " + name.toUri() + ": " + why);
}

double
decodeNumber(const Name& name, const std::string& text, const char* field)
{
  auto v = decimal::parse(text);
  if (!v) {
    malformed(name, std::string("bad ") + field + " '" + text + "'");
  }
  return *v;
}

std::optional<double>
decodeOptionalNumber(const Name& name, const std::string& text, const char* field)
{
  if (text == ABSENT) {
    return std::nullopt;
  }
  return decodeNumber(name, text, field);
}

std::uint64_t
decodeTimestamp(const Name& name, const std::string& text)
{
  std::uint64_t ts = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), ts);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    malformed(name, "bad timestamp '" + text + "'");
  }
  return ts;
}

ClockTime
decodeClock(const Name& name, std::string_view text)
{
  auto t = ClockTime::parse(text);
  if (!t) {
    malformed(name, "bad clock time '" + std::string(text) + "'");
  }
  return *t;
}

std::optional<ClockTime>
decodeOptionalClock(const Name& name, const std::string& text)
{
  if (text == ABSENT) {
    return std::nullopt;
  }
  return decodeClock(name, text);
}

Vec2
decodePoint(const Name& name, std::string_view text)
{
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    malformed(name, "bad location '" + std::string(text) + "'");
  }
  std::string xs(text.substr(0, comma));
  std::string ys(text.substr(comma + 1));
  return {decodeNumber(name, xs, "x"), decodeNumber(name, ys, "y")};
}

std::optional<Vec2>
decodeOptionalPoint(const Name& name, const std::string& text)
{
  if (text == ABSENT) {
    return std::nullopt;
  }
  return decodePoint(name, text);
}

std::optional<SearchArea>
decodeArea(const Name& name, const std::string& text)
{
  if (text == ABSENT) {
    return std::nullopt;
  }
  auto plus = text.find('+');
  if (plus == std::string::npos || text.size() < plus + 4 || text.compare(text.size() - 2, 2, "km") != 0) {
    malformed(name, "bad search area '" + text + "'");
  }
  std::string km = text.substr(plus + 1, text.size() - plus - 3);
  std::string meters;
  try {
    meters = decimal::shiftPoint(km, -3);
  }
  catch (const std::invalid_argument&) {
    malformed(name, "bad radius '" + km + "'");
  }
  SearchArea area;
  area.center = decodePoint(name, std::string_view(text).substr(0, plus));
  area.radiusMeters = decodeNumber(name, meters, "radius");
  return area;
}

std::pair<ClockTime, ClockTime>
decodeWindow(const Name& name, const std::string& text)
{
  if (text.size() != 9 || text[4] != '-') {
    malformed(name, "bad time frame '" + text + "'");
  }
  std::string_view sv(text);
  return {decodeClock(name, sv.substr(0, 4)), decodeClock(name, sv.substr(5))};
}

void
requireCount(const Name& name, size_t expected, size_t withOptional)
{
  if (name.size() != expected && name.size() != withOptional) {
    malformed(name, "expected " + std::to_string(expected) + " or " + std::to_string(withOptional) +
                    " components, got " + std::to_string(name.size()));
  }
}

std::optional<std::string>
trailingIdentifier(const Name& name, size_t index)
{
  if (name.size() <= index) {
    return std::nullopt;
  }
  try {
    validateIdentifier(name.at(index));
  }
  catch (const std::invalid_argument& e) {
    malformed(name, e.what());
  }
  return name.at(index);
}

Offer
decodeOffer(const Name& name, const std::string& price, const std::string& amount)
{
  Offer o;
  o.pricePerKwh = decodeNumber(name, price, "price");
  o.amountKwh = decodeNumber(name, amount, "amount");
  if (!(o.pricePerKwh > 0.0) || !(o.amountKwh > 0.0)) {
    malformed(name, "offer price and amount must be positive");
  }
  return o;
}

ParsedMessage
parseDiscovery(const Name& name)
{
  requireCount(name, 9, 10);
  ParsedMessage msg;
  msg.phase = Phase::Discovery;
  DiscoveryFilter f;
  f.area = decodeArea(name, name.at(2));
  f.maxPricePerKwh = decodeOptionalNumber(name, name.at(3), "max price");
  f.minEnergy = decodeOptionalNumber(name, name.at(4), "min energy");
  f.minReputation = decodeOptionalNumber(name, name.at(5), "min reputation");
  f.windowStart = decodeOptionalClock(name, name.at(6));
  f.windowEnd = decodeOptionalClock(name, name.at(7));
  try {
    f.validate();
  }
  catch (const std::invalid_argument& e) {
    malformed(name, e.what());
  }
  msg.filter = f;
  msg.timestamp = decodeTimestamp(name, name.at(8));
  msg.pid = trailingIdentifier(name, 9);
  return msg;
}

ParsedMessage
parseCoordinationFamily(const Name& name, ParsedMessage msg)
{
  if (name.size() >= 5 && name.at(3) == KW_SPATIAL && name.at(4) == KW_TEMPORAL) {
    requireCount(name, 8, 9);
    msg.phase = Phase::Coordination;
    auto [from, to] = decodeWindow(name, name.at(5));
    if (from > to) {
      malformed(name, "reversed time frame");
    }
    msg.meeting = MeetingProposal{from, to, decodeOptionalPoint(name, name.at(6))};
    msg.timestamp = decodeTimestamp(name, name.at(7));
    msg.cid = trailingIdentifier(name, 8);
    return msg;
  }

  // confirmation: recognised by the Negotiation keyword after the coordination fields
  if (name.size() < 6 || name.at(5) != KW_NEGOTIATION) {
    malformed(name, "coordination name matches neither the proposal nor the confirmation template");
  }
  requireCount(name, 10, 11);
  msg.phase = Phase::Confirmation;
  auto [from, to] = decodeWindow(name, name.at(3));
  if (from > to) {
    malformed(name, "reversed time frame");
  }
  msg.meeting = MeetingProposal{from, to, decodePoint(name, name.at(4))};
  msg.offer = decodeOffer(name, name.at(6), name.at(7));
  const std::string& digest = name.at(8);
  if (digest == ABSENT) {
    malformed(name, "confirmation without agreement digest");
  }
  msg.agreementDigest = digest;
  msg.timestamp = decodeTimestamp(name, name.at(9));
  msg.cid = trailingIdentifier(name, 10);
  return msg;
}

} // namespace

std::string_view
toString(Phase phase)
{
  switch (phase) {
    case Phase::Discovery:
      return "Discovery";
    case Phase::Verification:
      return "Verification";
    case Phase::Negotiation:
      return "Negotiation";
    case Phase::Coordination:
      return "Coordination";
    case Phase::Confirmation:
      return "Confirmation";
  }
  return "?";
}

void
validateIdentifier(std::string_view id)
{
  if (id.empty() || id.find('/') != std::string_view::npos || id == ABSENT) {
    throw std::invalid_argument("invalid identifier '" + std::string(id) + "'");
  }
  static constexpr std::array<std::string_view, 6> reserved = {
    ROOT, KW_DISCOVERY, KW_VERIFICATION, KW_NEGOTIATION, KW_COORDINATION, KW_SPATIAL};
  for (auto kw : reserved) {
    if (id == kw) {
      throw std::invalid_argument("identifier collides with keyword '" + std::string(id) + "'");
    }
  }
}

void
ParsedMessage::validate() const
{
  auto require = [] (bool ok, const char* what) {
    if (!ok) {
      throw std::invalid_argument(std::string("invalid message: ") + what);
    }
  };
  const bool isDiscovery = phase == Phase::Discovery;
  const bool hasOffer = phase == Phase::Negotiation || phase == Phase::Confirmation;
  const bool hasMeeting = phase == Phase::Coordination || phase == Phase::Confirmation;

  require(filter.has_value() == isDiscovery, "filter present iff Discovery");
  require(offer.has_value() == hasOffer, "offer present iff Negotiation or Confirmation");
  require(meeting.has_value() == hasMeeting, "meeting present iff Coordination or Confirmation");
  require(agreementDigest.has_value() == (phase == Phase::Confirmation), "digest present iff Confirmation");
  require(isDiscovery || pid.has_value(), "pid required outside Discovery");
  require(!cid || (phase != Phase::Discovery && phase != Phase::Verification),
          "cid only scopes negotiation, coordination and confirmation");

  if (pid) {
    validateIdentifier(*pid);
  }
  if (cid) {
    validateIdentifier(*cid);
  }
  if (agreementDigest) {
    validateIdentifier(*agreementDigest);
  }
  if (filter) {
    filter->validate();
  }
  if (offer) {
    require(offer->pricePerKwh > 0.0 && offer->amountKwh > 0.0, "offer price and amount must be positive");
  }
  if (meeting) {
    require(meeting->windowStart <= meeting->windowEnd, "meeting window reversed");
    require(phase != Phase::Confirmation || meeting->location.has_value(),
            "confirmation needs a resolved meeting location");
  }
}

Name
encodeName(const ParsedMessage& msg)
{
  msg.validate();
  std::vector<std::string> c{std::string(ROOT)};
  const std::string ts = std::to_string(msg.timestamp);

  switch (msg.phase) {
    case Phase::Discovery: {
      const auto& f = *msg.filter;
      auto plain = [] (double v) { return decimal::format(v); };
      auto clock = [] (ClockTime t) { return t.toString(); };
      c.emplace_back(KW_DISCOVERY);
      c.push_back(encodeArea(f.area));
      c.push_back(encodeOptional(f.maxPricePerKwh, encodePrice));
      c.push_back(encodeOptional(f.minEnergy, plain));
      c.push_back(encodeOptional(f.minReputation, plain));
      c.push_back(encodeOptional(f.windowStart, clock));
      c.push_back(encodeOptional(f.windowEnd, clock));
      c.push_back(ts);
      if (msg.pid) {
        c.push_back(*msg.pid);
      }
      return Name(std::move(c));
    }
    case Phase::Verification:
      c.push_back(*msg.pid);
      c.emplace_back(KW_VERIFICATION);
      c.push_back(ts);
      return Name(std::move(c));
    case Phase::Negotiation:
      c.push_back(*msg.pid);
      c.emplace_back(KW_NEGOTIATION);
      c.push_back(encodePrice(msg.offer->pricePerKwh));
      c.push_back(decimal::format(msg.offer->amountKwh));
      c.push_back(ts);
      break;
    case Phase::Coordination:
      c.push_back(*msg.pid);
      c.emplace_back(KW_COORDINATION);
      c.emplace_back(KW_SPATIAL);
      c.emplace_back(KW_TEMPORAL);
      c.push_back(encodeWindow(*msg.meeting));
      c.push_back(encodeOptional(msg.meeting->location, encodePoint));
      c.push_back(ts);
      break;
    case Phase::Confirmation:
      c.push_back(*msg.pid);
      c.emplace_back(KW_COORDINATION);
      c.push_back(encodeWindow(*msg.meeting));
      c.push_back(encodePoint(*msg.meeting->location));
      c.emplace_back(KW_NEGOTIATION);
      c.push_back(encodePrice(msg.offer->pricePerKwh));
      c.push_back(decimal::format(msg.offer->amountKwh));
      c.push_back(*msg.agreementDigest);
      c.push_back(ts);
      break;
  }
  if (msg.cid) {
    c.push_back(*msg.cid);
  }
  return Name(std::move(c));
}

ParsedMessage
parseName(const Name& name)
{
  if (name.at(0) != ROOT) {
    malformed(name, "does not start with /" + std::string(ROOT));
  }
  if (name.size() < 2) {
    malformed(name, "missing phase keyword");
  }
  if (name.at(1) == KW_DISCOVERY) {
    return parseDiscovery(name);
  }
  if (name.size() < 3) {
    malformed(name, "missing phase keyword");
  }

  ParsedMessage msg;
  try {
    validateIdentifier(name.at(1));
  }
  catch (const std::invalid_argument& e) {
    malformed(name, e.what());
  }
  msg.pid = name.at(1);

  const std::string& keyword = name.at(2);
  if (keyword == KW_VERIFICATION) {
    requireCount(name, 4, 4);
    msg.phase = Phase::Verification;
    msg.timestamp = decodeTimestamp(name, name.at(3));
    return msg;
  }
  if (keyword == KW_NEGOTIATION) {
    requireCount(name, 6, 7);
    msg.phase = Phase::Negotiation;
    msg.offer = decodeOffer(name, name.at(3), name.at(4));
    msg.timestamp = decodeTimestamp(name, name.at(5));
    msg.cid = trailingIdentifier(name, 6);
    return msg;
  }
  if (keyword == KW_COORDINATION) {
    return parseCoordinationFamily(name, std::move(msg));
  }
  malformed(name, "unknown phase keyword '" + keyword + "'");
}

Name
dataNameFor(const Name& interestName, const std::string& pid)
{
  ParsedMessage msg = parseName(interestName);
  if (msg.phase == Phase::Discovery) {
    if (msg.pid) {
      throw MalformedName("discovery name already carries a responder: " + interestName.toUri());
    }
    try {
      validateIdentifier(pid);
    }
    catch (const std::invalid_argument& e) {
      throw MalformedName(e.what());
    }
    return interestName.append(pid);
  }
  if (msg.pid != pid) {
    throw MalformedName("name " + interestName.toUri() + " is addressed to " + msg.pid.value_or("?") +
                        ", not " + pid);
  }
  return interestName;
}

} // namespace v2vcc::naming
