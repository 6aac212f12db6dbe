#ifndef V2VCC_COMMON_GEOMETRY_HPP
#define V2VCC_COMMON_GEOMETRY_HPP

#include <cmath>

namespace v2vcc {

/// Point or displacement in the flat simulation plane, meters.
struct Vec2
{
  double x = 0.0;
  double y = 0.0;

  friend bool
  operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2
operator+(Vec2 a, Vec2 b)
{
  return {a.x + b.x, a.y + b.y};
}

inline Vec2
operator-(Vec2 a, Vec2 b)
{
  return {a.x - b.x, a.y - b.y};
}

inline Vec2
operator*(Vec2 a, double k)
{
  return {a.x * k, a.y * k};
}

inline double
norm(Vec2 v)
{
  return std::hypot(v.x, v.y);
}

inline double
distance(Vec2 a, Vec2 b)
{
  return norm(a - b);
}

inline Vec2
midpoint(Vec2 a, Vec2 b)
{
  return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
}

} // namespace v2vcc

#endif // V2VCC_COMMON_GEOMETRY_HPP
