#ifndef V2VCC_COMMON_CLOCK_TIME_HPP
#define V2VCC_COMMON_CLOCK_TIME_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace v2vcc {

/**
 * @brief Time of day with minute resolution.
 *
 * Stored as minutes since midnight. The textual form used in names is the
 * four-digit wall-clock rendering, so 14:00 is "1400".
 */
class ClockTime
{
public:
  static constexpr int MINUTES_PER_DAY = 24 * 60;

  constexpr ClockTime() = default;

  /// @throw std::out_of_range unless 0 <= minutes < 1440
  static ClockTime
  fromMinutes(int minutes);

  /// @throw std::out_of_range on an invalid hour or minute
  static ClockTime
  fromHhmm(int hhmm);

  static std::optional<ClockTime>
  parse(std::string_view text);

  constexpr int
  minutes() const
  {
    return m_minutes;
  }

  int
  hhmm() const
  {
    return (m_minutes / 60) * 100 + m_minutes % 60;
  }

  std::string
  toString() const;

  friend constexpr auto
  operator<=>(const ClockTime&, const ClockTime&) = default;

private:
  int m_minutes = 0;
};

} // namespace v2vcc

#endif // V2VCC_COMMON_CLOCK_TIME_HPP
