#include "v2vcc/common/clock-time.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace v2vcc {

ClockTime
ClockTime::fromMinutes(int minutes)
{
  if (minutes < 0 || minutes >= MINUTES_PER_DAY) {
    throw std::out_of_range("minutes-of-day out of range: " + std::to_string(minutes));
  }
  ClockTime t;
  t.m_minutes = minutes;
  return t;
}

ClockTime
ClockTime::fromHhmm(int hhmm)
{
  int hours = hhmm / 100;
  int mins = hhmm % 100;
  if (hhmm < 0 || hours > 23 || mins > 59) {
    throw std::out_of_range("invalid HHMM clock value: " + std::to_string(hhmm));
  }
  return fromMinutes(hours * 60 + mins);
}

std::optional<ClockTime>
ClockTime::parse(std::string_view text)
{
  if (text.size() != 4) {
    return std::nullopt;
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (value / 100 > 23 || value % 100 > 59) {
    return std::nullopt;
  }
  return fromHhmm(value);
}

std::string
ClockTime::toString() const
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d%02d", m_minutes / 60, m_minutes % 60);
  return buf;
}

} // namespace v2vcc
