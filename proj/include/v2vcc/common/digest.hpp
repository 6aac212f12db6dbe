#ifndef V2VCC_COMMON_DIGEST_HPP
#define V2VCC_COMMON_DIGEST_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace v2vcc {

/// 64-bit FNV-1a over the given fields, each followed by a 0x1F separator byte.
/// Not cryptographic; used as the signature and agreement-digest stub.
std::uint64_t
stubDigest(std::initializer_list<std::string_view> fields);

/// Lower-case, zero-padded 16 character hex rendering of stubDigest().
std::string
stubDigestHex(std::initializer_list<std::string_view> fields);

} // namespace v2vcc

#endif // V2VCC_COMMON_DIGEST_HPP
