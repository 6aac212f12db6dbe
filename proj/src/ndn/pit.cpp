#include "v2vcc/ndn/pit.hpp"

#include <algorithm>

namespace v2vcc::ndn {

PitEntry*
Pit::find(const Interest& interest, Time now)
{
  auto [first, last] = m_entries.equal_range(interest.name);
  for (auto it = first; it != last; ++it) {
    if (it->second.isLive(now) && it->second.interest.sameRequest(interest)) {
      return &it->second;
    }
  }
  return nullptr;
}

PitEntry&
Pit::insert(const Interest& interest, Time now)
{
  PitEntry entry{interest, {}, {}, {}, now + interest.lifetime};
  entry.interest.nonce = 0;
  return m_entries.emplace(interest.name, std::move(entry))->second;
}

std::vector<PitEntry>
Pit::extractMatching(const Name& dataName, FaceId ingressFace, Time now)
{
  std::vector<PitEntry> out;
  // only names that are prefixes of dataName can be satisfied by it
  for (size_t len = 1; len <= dataName.size(); ++len) {
    auto [first, last] = m_entries.equal_range(dataName.prefix(len));
    for (auto it = first; it != last;) {
      const PitEntry& e = it->second;
      if (e.isLive(now) && e.upstreams.count(ingressFace) > 0 && e.interest.matches(dataName)) {
        out.push_back(std::move(it->second));
        it = m_entries.erase(it);
      }
      else {
        ++it;
      }
    }
  }
  return out;
}

void
Pit::purgeExpired(Time now)
{
  std::erase_if(m_entries, [now] (const auto& kv) { return !kv.second.isLive(now); });
}

std::vector<const PitEntry*>
Pit::entries() const
{
  std::vector<const PitEntry*> out;
  out.reserve(m_entries.size());
  for (const auto& kv : m_entries) {
    out.push_back(&kv.second);
  }
  return out;
}

} // namespace v2vcc::ndn
