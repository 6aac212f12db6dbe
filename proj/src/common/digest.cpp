#include "v2vcc/common/digest.hpp"

#include <cstdio>

namespace v2vcc {

namespace {

constexpr std::uint64_t FNV_OFFSET = 0xcbf29ce484222325ULL;
constexpr std::uint64_t FNV_PRIME = 0x100000001b3ULL;
constexpr unsigned char FIELD_SEPARATOR = 0x1F;

} // namespace

std::uint64_t
stubDigest(std::initializer_list<std::string_view> fields)
{
  std::uint64_t h = FNV_OFFSET;
  for (std::string_view field : fields) {
    for (unsigned char c : field) {
      h ^= c;
      h *= FNV_PRIME;
    }
    h ^= FIELD_SEPARATOR;
    h *= FNV_PRIME;
  }
  return h;
}

std::string
stubDigestHex(std::initializer_list<std::string_view> fields)
{
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(stubDigest(fields)));
  return buf;
}

} // namespace v2vcc
