#include "v2vcc/sim/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace v2vcc::sim {

EventId
Kernel::schedule(Time delay, Action action)
{
  if (!(delay >= 0.0) || !std::isfinite(delay)) {
    throw std::invalid_argument("cannot schedule with negative or non-finite delay");
  }
  EventId id = m_nextId++;
  m_queue.push({m_now + delay, id});
  m_actions.emplace(id, std::move(action));
  return id;
}

bool
Kernel::cancel(EventId id)
{
  return m_actions.erase(id) > 0;
}

bool
Kernel::step(Time limit)
{
  while (!m_queue.empty()) {
    Scheduled next = m_queue.top();
    if (next.fireAt > limit) {
      return false;
    }
    m_queue.pop();
    auto it = m_actions.find(next.id);
    if (it == m_actions.end()) {
      continue; // cancelled
    }
    Action action = std::move(it->second);
    m_actions.erase(it);
    m_now = next.fireAt;
    ++m_executed;
    action();
    return true;
  }
  return false;
}

void
Kernel::run()
{
  while (step(INFINITY)) {
  }
}

void
Kernel::runUntil(Time limit)
{
  while (step(limit)) {
  }
  if (limit > m_now) {
    m_now = limit;
  }
}

} // namespace v2vcc::sim
