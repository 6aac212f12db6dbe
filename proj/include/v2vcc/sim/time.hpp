#ifndef V2VCC_SIM_TIME_HPP
#define V2VCC_SIM_TIME_HPP

namespace v2vcc::sim {

/// Simulation time in milliseconds; fractional values are allowed.
using Time = double;

inline constexpr Time MS_PER_SECOND = 1000.0;

} // namespace v2vcc::sim

#endif // V2VCC_SIM_TIME_HPP
