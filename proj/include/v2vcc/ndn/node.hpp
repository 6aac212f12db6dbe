#ifndef V2VCC_NDN_NODE_HPP
#define V2VCC_NDN_NODE_HPP

#include "v2vcc/ndn/event-log.hpp"
#include "v2vcc/ndn/forwarder.hpp"
#include "v2vcc/sim/medium.hpp"
#include "v2vcc/sim/random.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

namespace v2vcc::ndn {

class Node;

/**
 * @brief Application-side handle of a node, in the style of a client Face.
 *
 * Consumers call expressInterest(); producers install an interest handler and
 * answer with putData().
 */
class AppFace
{
public:
  using DataCallback = std::function<void(const Interest&, const Data&)>;
  using TimeoutCallback = std::function<void(const Interest&)>;
  using InterestHandler = std::function<void(const Interest&)>;
  using PendingId = std::uint64_t;

  struct ExpressOptions
  {
    Time timeout = 30.0;
    int maxRetx = 3;
    bool canBePrefix = false;
    std::set<std::string> excludePids;
  };

  explicit
  AppFace(Node& node)
    : m_node(node)
  {
  }

  /**
   * Sends an interest and waits @p opts.timeout for matching data. On expiry
   * the interest is re-expressed with a fresh nonce, up to opts.maxRetx times;
   * @p onTimeout fires when the last attempt expires.
   */
  PendingId
  expressInterest(const Name& name, ExpressOptions opts, DataCallback onData, TimeoutCallback onTimeout);

  void
  cancel(PendingId id);

  void
  setInterestHandler(InterestHandler handler)
  {
    m_interestHandler = std::move(handler);
  }

  void
  putData(Data data);

  std::uint64_t
  retransmissions() const
  {
    return m_retransmissions;
  }

  std::uint64_t
  timeouts() const
  {
    return m_timeouts;
  }

private:
  friend class Node;

  void
  deliverData(const Data& data);

  void
  deliverInterest(const Interest& interest);

  void
  sendAttempt(PendingId id);

  void
  onTimer(PendingId id);

private:
  struct Pending
  {
    Interest interest;
    ExpressOptions opts;
    int attempts = 0;
    sim::EventId timer = 0;
    DataCallback onData;
    TimeoutCallback onTimeout;
  };

  Node& m_node;
  PendingId m_nextId = 1;
  std::map<PendingId, Pending> m_pending;
  InterestHandler m_interestHandler;
  std::uint64_t m_retransmissions = 0;
  std::uint64_t m_timeouts = 0;
};

struct NodeConfig
{
  ForwarderConfig forwarder;
  std::size_t packetBytes = 256;
  /// Skip re-sending Data that is already queued or on the air on the
  /// broadcast face; every neighbour hears that copy anyway.
  bool suppressInFlightDuplicates = true;
};

struct NodeCounters
{
  std::uint64_t malformedDropped = 0;
  std::uint64_t unsolicitedDropped = 0;
  std::uint64_t duplicateNonceDropped = 0;
  std::uint64_t noRouteDropped = 0;
  std::uint64_t aggregated = 0;
  std::uint64_t cacheHits = 0;
  std::uint64_t suppressedDuplicates = 0;
  std::uint64_t channelLosses = 0;
};

/**
 * @brief A vehicle: one forwarder with an application face and one ad hoc
 *        broadcast face on the shared medium.
 */
class Node : public sim::MediumEndpoint
{
public:
  static constexpr FaceId APP_FACE = 0;
  static constexpr FaceId BROADCAST_FACE = 1;

  Node(std::string label, sim::Kernel& kernel, sim::Medium& medium, sim::MobilityState mobility,
       std::uint64_t seed, EventLog* log, NodeConfig config = {});

  Node(const Node&) = delete;
  Node&
  operator=(const Node&) = delete;

  const std::string&
  label() const
  {
    return m_label;
  }

  sim::NodeId
  id() const
  {
    return m_id;
  }

  Vec2
  position() const
  {
    return m_medium.positionOf(m_id);
  }

  double
  speedMph() const
  {
    return m_medium.mobilityOf(m_id).speedMph;
  }

  AppFace&
  appFace()
  {
    return m_app;
  }

  const Forwarder&
  forwarder() const
  {
    return m_forwarder;
  }

  sim::Kernel&
  kernel()
  {
    return m_kernel;
  }

  const NodeCounters&
  counters() const
  {
    return m_counters;
  }

  Nonce
  newNonce();

  /// Interests from the application go out on the broadcast face.
  void
  routeToBroadcast(const Name& prefix)
  {
    m_forwarder.addRoute(prefix, BROADCAST_FACE);
  }

  /// Interests heard on the broadcast face are handed to the local producer.
  void
  routeToApp(const Name& prefix)
  {
    m_forwarder.addRoute(prefix, APP_FACE);
  }

  void
  onReceive(const sim::Wire& wire, sim::NodeId from) override;

  void
  onLost(const sim::Wire& wire, sim::NodeId from) override;

private:
  friend class AppFace;

  void
  processInterest(const Interest& interest, Downstream ingress);

  void
  processData(const Data& data, Downstream ingress);

  void
  execute(std::vector<ForwardingAction>& actions);

  void
  log(EventKind kind, const Name& name, std::optional<Nonce> nonce);

private:
  std::string m_label;
  sim::Kernel& m_kernel;
  sim::Medium& m_medium;
  sim::NodeId m_id;
  sim::Rng m_rng;
  EventLog* m_log;
  NodeConfig m_config;
  Forwarder m_forwarder;
  AppFace m_app;
  NodeCounters m_counters;
  std::map<Name, Time> m_dataOnAir; ///< data name -> end of its latest broadcast
};

} // namespace v2vcc::ndn

#endif // V2VCC_NDN_NODE_HPP
