#ifndef V2VCC_NAMING_NAME_HPP
#define V2VCC_NAMING_NAME_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace v2vcc::naming {

/**
 * @brief Hierarchical name: a non-empty sequence of non-empty text components.
 *
 * The canonical rendering joins components with '/' and starts with '/'.
 * Components never contain '/'.
 */
class Name
{
public:
  class Error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// @throw Error if @p components is empty or any component is invalid
  explicit
  Name(std::vector<std::string> components);

  /// Parses the canonical "/a/b/c" rendering.
  /// @throw Error on an empty name, a missing leading '/', or an empty component
  static Name
  fromUri(std::string_view uri);

  std::string
  toUri() const;

  const std::vector<std::string>&
  components() const
  {
    return m_components;
  }

  size_t
  size() const
  {
    return m_components.size();
  }

  const std::string&
  at(size_t i) const
  {
    return m_components.at(i);
  }

  /// Returns a copy with @p component appended.
  Name
  append(std::string component) const;

  /// Returns the first @p n components. @throw Error if n is 0 or exceeds size()
  Name
  prefix(size_t n) const;

  /// True when every component of *this matches the leading components of @p other.
  /// A name is a prefix of itself.
  bool
  isPrefixOf(const Name& other) const;

  friend bool
  operator==(const Name&, const Name&) = default;

  friend std::strong_ordering
  operator<=>(const Name& a, const Name& b)
  {
    return a.m_components <=> b.m_components;
  }

  static void
  validateComponent(std::string_view component);

private:
  std::vector<std::string> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

} // namespace v2vcc::naming

#endif // V2VCC_NAMING_NAME_HPP
