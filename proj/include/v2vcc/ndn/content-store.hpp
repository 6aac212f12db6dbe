#ifndef V2VCC_NDN_CONTENT_STORE_HPP
#define V2VCC_NDN_CONTENT_STORE_HPP

#include "v2vcc/ndn/packet.hpp"

#include <list>
#include <map>
#include <optional>

namespace v2vcc::ndn {

struct CsEntry
{
  Data data;
  Time insertedAt = 0.0;

  bool
  isFresh(Time now) const
  {
    return now <= insertedAt + data.freshness;
  }
};

/**
 * @brief Data cache with freshness expiry and LRU eviction.
 *
 * Prefix lookups return the fresh, non-excluded entry with the smallest name.
 */
class ContentStore
{
public:
  explicit
  ContentStore(std::size_t capacity = 64);

  void
  insert(const Data& data, Time now);

  std::optional<CsEntry>
  find(const Interest& interest, Time now);

  std::size_t
  size() const
  {
    return m_table.size();
  }

  std::size_t
  capacity() const
  {
    return m_capacity;
  }

private:
  void
  erase(std::map<Name, CsEntry>::iterator it);

  void
  touch(const Name& name);

private:
  std::size_t m_capacity;
  std::map<Name, CsEntry> m_table;
  std::list<Name> m_lru; ///< most recently used first
  std::map<Name, std::list<Name>::iterator> m_lruIndex;
};

} // namespace v2vcc::ndn

#endif // V2VCC_NDN_CONTENT_STORE_HPP
