#include "v2vcc/naming/name.hpp"

#include <ostream>

namespace v2vcc::naming {

void
Name::validateComponent(std::string_view component)
{
  if (component.empty()) {
    throw Error("empty name component");
  }
  if (component.find('/') != std::string_view::npos) {
    throw Error("name component contains '/': " + std::string(component));
  }
}

Name::Name(std::vector<std::string> components)
  : m_components(std::move(components))
{
  if (m_components.empty()) {
    throw Error("name has no components");
  }
  for (const auto& c : m_components) {
    validateComponent(c);
  }
}

Name
Name::fromUri(std::string_view uri)
{
  if (uri.empty() || uri.front() != '/') {
    throw Error("name must start with '/': " + std::string(uri));
  }
  std::vector<std::string> parts;
  size_t pos = 1;
  while (true) {
    size_t next = uri.find('/', pos);
    std::string_view part = uri.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (part.empty()) {
      throw Error("empty component in name: " + std::string(uri));
    }
    parts.emplace_back(part);
    if (next == std::string_view::npos) {
      break;
    }
    pos = next + 1;
  }
  return Name(std::move(parts));
}

std::string
Name::toUri() const
{
  std::string out;
  for (const auto& c : m_components) {
    out += '/';
    out += c;
  }
  return out;
}

Name
Name::append(std::string component) const
{
  validateComponent(component);
  Name copy = *this;
  copy.m_components.push_back(std::move(component));
  return copy;
}

Name
Name::prefix(size_t n) const
{
  if (n == 0 || n > m_components.size()) {
    throw Error("invalid prefix length " + std::to_string(n));
  }
  return Name(std::vector<std::string>(m_components.begin(), m_components.begin() + n));
}

bool
Name::isPrefixOf(const Name& other) const
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  for (size_t i = 0; i < m_components.size(); ++i) {
    if (m_components[i] != other.m_components[i]) {
      return false;
    }
  }
  return true;
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

} // namespace v2vcc::naming
