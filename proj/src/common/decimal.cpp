#include "v2vcc/common/decimal.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace v2vcc::decimal {

std::string
format(double value)
{
  if (!std::isfinite(value)) {
    throw std::invalid_argument("cannot format a non-finite decimal");
  }
  // Fixed notation of DBL_MAX needs ~310 digits.
  std::array<char, 512> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  if (ec != std::errc{}) {
    throw std::runtime_error("decimal formatting failed");
  }
  return std::string(buf.data(), ptr);
}

std::string
format(double value, int minFraction)
{
  std::string s = format(value);
  auto dot = s.find('.');
  int fraction = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
  if (fraction >= minFraction) {
    return s;
  }
  if (dot == std::string::npos) {
    s += '.';
  }
  s.append(static_cast<size_t>(minFraction - fraction), '0');
  return s;
}

std::optional<double>
parse(std::string_view text)
{
  if (text.empty()) {
    return std::nullopt;
  }
  size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool sawDigit = false;
  bool sawDot = false;
  for (size_t j = i; j < text.size(); ++j) {
    char c = text[j];
    if (c >= '0' && c <= '9') {
      sawDigit = true;
    }
    else if (c == '.' && !sawDot) {
      sawDot = true;
    }
    else {
      return std::nullopt;
    }
  }
  if (!sawDigit) {
    return std::nullopt;
  }
  // from_chars does not accept a leading '+'
  std::string_view body = text[0] == '+' ? text.substr(1) : text;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value,
                                   std::chars_format::fixed);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    return std::nullopt;
  }
  return value;
}

std::string
shiftPoint(std::string_view text, int places)
{
  bool negative = !text.empty() && text[0] == '-';
  if (negative || (!text.empty() && text[0] == '+')) {
    text.remove_prefix(1);
  }

  std::string digits;
  int pointPos = -1;
  for (char c : text) {
    if (c == '.') {
      if (pointPos >= 0) {
        throw std::invalid_argument("two decimal points in '" + std::string(text) + "'");
      }
      pointPos = static_cast<int>(digits.size());
    }
    else if (c >= '0' && c <= '9') {
      digits += c;
    }
    else {
      throw std::invalid_argument("not a fixed-notation decimal: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) {
    throw std::invalid_argument("empty decimal");
  }
  if (pointPos < 0) {
    pointPos = static_cast<int>(digits.size());
  }

  pointPos -= places;
  if (pointPos <= 0) {
    digits.insert(0, static_cast<size_t>(1 - pointPos), '0');
    pointPos = 1;
  }
  else if (pointPos > static_cast<int>(digits.size())) {
    digits.append(static_cast<size_t>(pointPos) - digits.size(), '0');
  }

  std::string intPart = digits.substr(0, static_cast<size_t>(pointPos));
  std::string fracPart = digits.substr(static_cast<size_t>(pointPos));
  auto firstNonZero = intPart.find_first_not_of('0');
  intPart = firstNonZero == std::string::npos ? "0" : intPart.substr(firstNonZero);
  auto lastNonZero = fracPart.find_last_not_of('0');
  fracPart = lastNonZero == std::string::npos ? "" : fracPart.substr(0, lastNonZero + 1);

  std::string out = negative ? "-" : "";
  out += intPart;
  if (!fracPart.empty()) {
    out += '.';
    out += fracPart;
  }
  return out;
}

} // namespace v2vcc::decimal
