#include "v2vcc/sim/random.hpp"

#include <stdexcept>

namespace v2vcc::sim {

std::uint64_t
deriveSeed(std::uint64_t base, std::uint64_t stream)
{
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t
Rng::uniformInt(std::int64_t lo, std::int64_t hi)
{
  if (lo > hi) {
    throw std::invalid_argument("uniformInt: empty range");
  }
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) {
    return static_cast<std::int64_t>(m_engine());
  }
  // rejection sampling keeps the draw unbiased
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = m_engine();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

} // namespace v2vcc::sim
