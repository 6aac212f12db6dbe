#ifndef V2VCC_COMMON_DECIMAL_HPP
#define V2VCC_COMMON_DECIMAL_HPP

#include <optional>
#include <string>
#include <string_view>

namespace v2vcc::decimal {

/// Shortest fixed-notation text that parses back to exactly @p value.
std::string
format(double value);

/// Like format(), padded to at least @p minFraction digits after the point.
std::string
format(double value, int minFraction);

/// Strict parse of an optionally signed fixed-notation decimal. Rejects
/// exponents, "inf", "nan", empty strings and trailing garbage.
std::optional<double>
parse(std::string_view text);

/// Moves the decimal point of a fixed-notation string @p places to the left
/// (negative values move it right), without going through binary floating
/// point. "2000" shifted by 3 is "2", "1500" is "1.5".
std::string
shiftPoint(std::string_view text, int places);

} // namespace v2vcc::decimal

#endif // V2VCC_COMMON_DECIMAL_HPP
