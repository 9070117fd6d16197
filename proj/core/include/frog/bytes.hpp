#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frog {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument on bad input

inline Bytes ascii_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

// Branch-free byte comparison; returns true iff equal. Runs in time
// dependent only on the lengths.
bool ct_equal(ByteView a, ByteView b);

}  // namespace frog
