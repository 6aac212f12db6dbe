#include "v2vcc/ndn/event-log.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace v2vcc::ndn {

std::string_view
toString(EventKind kind)
{
  switch (kind) {
    case EventKind::Send:
      return "SEND";
    case EventKind::Recv:
      return "RECV";
    case EventKind::Drop:
      return "DROP";
    case EventKind::CacheHit:
      return "CACHE_HIT";
    case EventKind::Aggregate:
      return "AGGREGATE";
    case EventKind::Timeout:
      return "TIMEOUT";
  }
  return "?";
}

std::string
formatEvent(const EventRecord& r)
{
  char time[32];
  std::snprintf(time, sizeof(time), "%.6f", r.time);
  std::string line = time;
  line += ',';
  line += r.node;
  line += ',';
  line += toString(r.kind);
  line += ',';
  line += r.name;
  line += ',';
  line += r.nonce ? std::to_string(*r.nonce) : "-";
  return line;
}

EventRecord
parseEvent(std::string_view line)
{
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    size_t comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  // names may themselves contain commas (locations), so the name is
  // everything between the third and the last separator
  if (fields.size() < 5) {
    throw std::invalid_argument("event line has too few fields: " + std::string(line));
  }
  EventRecord r;
  r.time = std::stod(std::string(fields[0]));
  r.node = std::string(fields[1]);
  std::string_view kind = fields[2];
  static constexpr EventKind kinds[] = {EventKind::Send, EventKind::Recv, EventKind::Drop,
                                        EventKind::CacheHit, EventKind::Aggregate, EventKind::Timeout};
  bool known = false;
  for (auto k : kinds) {
    if (toString(k) == kind) {
      r.kind = k;
      known = true;
    }
  }
  if (!known) {
    throw std::invalid_argument("unknown event kind: " + std::string(kind));
  }
  size_t nameStart = fields[0].size() + fields[1].size() + fields[2].size() + 3;
  size_t lastComma = line.rfind(',');
  r.name = std::string(line.substr(nameStart, lastComma - nameStart));
  std::string_view nonce = line.substr(lastComma + 1);
  if (nonce != "-") {
    Nonce n = 0;
    auto [ptr, ec] = std::from_chars(nonce.data(), nonce.data() + nonce.size(), n);
    if (ec != std::errc{} || ptr != nonce.data() + nonce.size()) {
      throw std::invalid_argument("bad nonce in event line: " + std::string(line));
    }
    r.nonce = n;
  }
  return r;
}

void
EventLog::write(std::ostream& os) const
{
  for (const auto& r : m_records) {
    os << formatEvent(r) << '\n';
  }
}

} // namespace v2vcc::ndn
