#ifndef V2VCC_SIM_KERNEL_HPP
#define V2VCC_SIM_KERNEL_HPP

#include "v2vcc/sim/time.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_map>
#include <vector>

namespace v2vcc::sim {

using EventId = std::uint64_t;

/**
 * @brief Single-threaded discrete-event scheduler.
 *
 * Events fire in (fireAt, insertion sequence) order, so equal-time events run
 * FIFO. Cancelled events are skipped lazily.
 */
class Kernel
{
public:
  using Action = std::function<void()>;

  Time
  now() const
  {
    return m_now;
  }

  /// @throw std::invalid_argument if @p delay is negative or not finite
  EventId
  schedule(Time delay, Action action);

  /// Returns false if the event already fired or was cancelled.
  bool
  cancel(EventId id);

  /// Runs until no events remain.
  void
  run();

  /// Runs events with fireAt <= @p limit, then advances the clock to @p limit.
  void
  runUntil(Time limit);

  size_t
  pendingCount() const
  {
    return m_actions.size();
  }

  std::uint64_t
  executedCount() const
  {
    return m_executed;
  }

private:
  bool
  step(Time limit);

private:
  struct Scheduled
  {
    Time fireAt;
    EventId id;

    bool
    operator>(const Scheduled& o) const
    {
      return fireAt != o.fireAt ? fireAt > o.fireAt : id > o.id;
    }
  };

  Time m_now = 0.0;
  EventId m_nextId = 1;
  std::uint64_t m_executed = 0;
  std::priority_queue<Scheduled, std::vector<Scheduled>, std::greater<>> m_queue;
  std::unordered_map<EventId, Action> m_actions;
};

} // namespace v2vcc::sim

#endif // V2VCC_SIM_KERNEL_HPP
