#include "v2vcc/ndn/content-store.hpp"

#include <stdexcept>

namespace v2vcc::ndn {

ContentStore::ContentStore(std::size_t capacity)
  : m_capacity(capacity)
{
  if (capacity == 0) {
    throw std::invalid_argument("content store capacity must be positive");
  }
}

void
ContentStore::erase(std::map<Name, CsEntry>::iterator it)
{
  auto idx = m_lruIndex.find(it->first);
  m_lru.erase(idx->second);
  m_lruIndex.erase(idx);
  m_table.erase(it);
}

void
ContentStore::touch(const Name& name)
{
  auto idx = m_lruIndex.find(name);
  m_lru.splice(m_lru.begin(), m_lru, idx->second);
}

void
ContentStore::insert(const Data& data, Time now)
{
  for (auto it = m_table.begin(); it != m_table.end();) {
    auto next = std::next(it);
    if (!it->second.isFresh(now)) {
      erase(it);
    }
    it = next;
  }

  auto existing = m_table.find(data.name);
  if (existing != m_table.end()) {
    existing->second = CsEntry{data, now};
    touch(data.name);
    return;
  }

  m_table.emplace(data.name, CsEntry{data, now});
  m_lru.push_front(data.name);
  m_lruIndex.emplace(data.name, m_lru.begin());

  while (m_table.size() > m_capacity) {
    erase(m_table.find(m_lru.back()));
  }
}

std::optional<CsEntry>
ContentStore::find(const Interest& interest, Time now)
{
  auto it = m_table.lower_bound(interest.name);
  while (it != m_table.end() && interest.name.isPrefixOf(it->first)) {
    auto next = std::next(it);
    if (!it->second.isFresh(now)) {
      erase(it);
    }
    else if (interest.matches(it->first)) {
      touch(it->first);
      return it->second;
    }
    if (!interest.canBePrefix) {
      break;
    }
    it = next;
  }
  return std::nullopt;
}

} // namespace v2vcc::ndn
