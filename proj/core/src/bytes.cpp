#include "frog/bytes.hpp"

#include <stdexcept>

namespace frog {

std::string to_hex(ByteView data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * data.size());
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2) throw std::invalid_argument("hex string has odd length");
    auto nibble = [](char c) -> std::uint8_t {
        if (c >= '0' && c <= '9') return std::uint8_t(c - '0');
        if (c >= 'a' && c <= 'f') return std::uint8_t(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return std::uint8_t(c - 'A' + 10);
        throw std::invalid_argument("invalid hex digit");
    };
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::uint8_t(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    return out;
}

bool ct_equal(ByteView a, ByteView b) {
    if (a.size() != b.size()) return false;
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc |= a[i] ^ b[i];
    return acc == 0;
}

}  // namespace frog
