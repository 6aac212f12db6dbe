#ifndef V2VCC_NDN_FORWARDER_HPP
#define V2VCC_NDN_FORWARDER_HPP

#include "v2vcc/ndn/content-store.hpp"
#include "v2vcc/ndn/pit.hpp"

#include <deque>
#include <optional>
#include <unordered_set>
#include <variant>
#include <vector>

namespace v2vcc::ndn {

/// Remembers the most recent nonces, oldest evicted first.
class NonceMemory
{
public:
  explicit
  NonceMemory(std::size_t capacity = 1000)
    : m_capacity(capacity)
  {
  }

  bool
  contains(Nonce nonce) const
  {
    return m_set.count(nonce) > 0;
  }

  void
  remember(Nonce nonce);

private:
  std::size_t m_capacity;
  std::deque<Nonce> m_order;
  std::unordered_set<Nonce> m_set;
};

struct ForwardingAction
{
  FaceId face = 0;
  Packet packet;
};

enum class InterestDisposition {
  Forwarded,
  Aggregated,
  CacheHit,
  DuplicateNonce,
  NoRoute,
};

struct InterestResult
{
  InterestDisposition disposition = InterestDisposition::NoRoute;
  bool retransmission = false;
  std::vector<ForwardingAction> actions;
  std::optional<CsEntry> cacheEntry; ///< set on CacheHit
};

struct DataResult
{
  bool solicited = false;
  std::size_t satisfiedEntries = 0;
  std::vector<ForwardingAction> actions;
};

struct ForwarderConfig
{
  std::size_t csCapacity = 64;
  std::size_t nonceMemory = 1000;
};

/**
 * @brief Forwarding state of one node: PIT, content store, nonce memory and a
 *        minimal prefix-to-face route list.
 *
 * Pure state machine: the caller delivers packets with their ingress and
 * performs the returned actions. Data is never sent back out of its ingress face.
 */
class Forwarder
{
public:
  explicit
  Forwarder(ForwarderConfig config = {});

  void
  addRoute(Name prefix, FaceId face);

  InterestResult
  onInterest(const Interest& interest, Downstream ingress, Time now);

  DataResult
  onData(const Data& data, Downstream ingress, Time now);

  const Pit&
  pit() const
  {
    return m_pit;
  }

  Pit&
  pit()
  {
    return m_pit;
  }

  const ContentStore&
  cs() const
  {
    return m_cs;
  }

private:
  std::vector<FaceId>
  nextHops(const Name& name, FaceId ingressFace) const;

private:
  Pit m_pit;
  ContentStore m_cs;
  NonceMemory m_nonces;
  std::vector<std::pair<Name, FaceId>> m_routes;
};

} // namespace v2vcc::ndn

#endif // V2VCC_NDN_FORWARDER_HPP
