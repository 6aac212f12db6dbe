#ifndef V2VCC_NDN_EVENT_LOG_HPP
#define V2VCC_NDN_EVENT_LOG_HPP

#include "v2vcc/ndn/packet.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace v2vcc::ndn {

enum class EventKind {
  Send,
  Recv,
  Drop,
  CacheHit,
  Aggregate,
  Timeout,
};

std::string_view
toString(EventKind kind);

/// One line of the event log: `time_ms,node_id,event,name,nonce`.
/// Data packets carry no nonce and render "-".
struct EventRecord
{
  Time time = 0.0;
  std::string node;
  EventKind kind = EventKind::Send;
  std::string name;
  std::optional<Nonce> nonce;
};

std::string
formatEvent(const EventRecord& record);

/// @throw std::invalid_argument on a malformed line
EventRecord
parseEvent(std::string_view line);

class EventLog
{
public:
  void
  record(Time time, std::string_view node, EventKind kind, std::string name, std::optional<Nonce> nonce)
  {
    m_records.push_back({time, std::string(node), kind, std::move(name), nonce});
  }

  const std::vector<EventRecord>&
  records() const
  {
    return m_records;
  }

  void
  write(std::ostream& os) const;

private:
  std::vector<EventRecord> m_records;
};

} // namespace v2vcc::ndn

#endif // V2VCC_NDN_EVENT_LOG_HPP
