#ifndef V2VCC_SIM_RANDOM_HPP
#define V2VCC_SIM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace v2vcc::sim {

/// SplitMix64 finaliser; derives independent stream seeds from one scenario seed.
std::uint64_t
deriveSeed(std::uint64_t base, std::uint64_t stream);

/**
 * @brief Deterministic random stream.
 *
 * Floating-point draws are built from raw engine bits rather than
 * <random> distributions, whose algorithms are implementation-defined, so
 * identical seeds give identical draws on every standard library.
 */
class Rng
{
public:
  explicit
  Rng(std::uint64_t seed)
    : m_engine(seed)
  {
  }

  std::uint64_t
  next64()
  {
    return m_engine();
  }

  /// Uniform in [0, 1).
  double
  uniform()
  {
    return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double
  uniform(double lo, double hi)
  {
    return lo + (hi - lo) * uniform();
  }

  /// Uniform integer in [lo, hi].
  std::int64_t
  uniformInt(std::int64_t lo, std::int64_t hi);

  bool
  bernoulli(double p)
  {
    return uniform() < p;
  }

private:
  std::mt19937_64 m_engine;
};

} // namespace v2vcc::sim

#endif // V2VCC_SIM_RANDOM_HPP
