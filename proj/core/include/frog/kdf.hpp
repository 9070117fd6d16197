#pragma once

#include <array>
#include <cstdint>

#include "frog/bytes.hpp"

namespace frog {

std::array<std::uint8_t, 32> sha256(ByteView data);

std::array<std::uint8_t, 32> hmac_sha256(ByteView key, ByteView data);

// RFC 5869 extract-then-expand over HMAC-SHA-256.
Bytes hkdf_sha256(ByteView ikm, ByteView salt, ByteView info, std::size_t out_len);

}  // namespace frog
