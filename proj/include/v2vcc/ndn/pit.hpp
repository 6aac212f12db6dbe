#ifndef V2VCC_NDN_PIT_HPP
#define V2VCC_NDN_PIT_HPP

#include "v2vcc/ndn/packet.hpp"
#include "v2vcc/sim/medium.hpp"

#include <map>
#include <set>
#include <vector>

namespace v2vcc::ndn {

/// Where a packet came from: the face plus, on the shared broadcast face, the
/// neighbour that sent it.
struct Downstream
{
  FaceId face = 0;
  sim::NodeId peer = 0;

  friend auto
  operator<=>(const Downstream&, const Downstream&) = default;
};

struct PitEntry
{
  Interest interest; ///< name and selectors of the pending request
  std::set<Downstream> downstreams;
  std::set<FaceId> upstreams; ///< faces the interest was forwarded to
  std::set<Nonce> nonces;
  Time expiry = 0.0;

  bool
  isLive(Time now) const
  {
    return now < expiry;
  }
};

/// Pending Interest Table. Entries are unique per (name, selectors).
class Pit
{
public:
  /// Live entry for the same request as @p interest, or nullptr.
  PitEntry*
  find(const Interest& interest, Time now);

  /// Inserts a fresh entry; the caller guarantees no live entry exists.
  PitEntry&
  insert(const Interest& interest, Time now);

  /// Removes and returns every live entry that Data named @p dataName,
  /// arriving on @p ingressFace, satisfies. Entries never forwarded to that
  /// face are left alone.
  std::vector<PitEntry>
  extractMatching(const Name& dataName, FaceId ingressFace, Time now);

  void
  purgeExpired(Time now);

  std::size_t
  size() const
  {
    return m_entries.size();
  }

  /// All stored entries, including any not yet purged.
  std::vector<const PitEntry*>
  entries() const;

private:
  std::multimap<Name, PitEntry> m_entries;
};

} // namespace v2vcc::ndn

#endif // V2VCC_NDN_PIT_HPP
