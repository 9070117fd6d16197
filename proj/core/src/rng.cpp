#include "frog/rng.hpp"

#include <openssl/rand.h>

#include "frog/blake3.hpp"
#include "frog/errors.hpp"

namespace frog {

void SystemRng::fill(std::span<std::uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), int(out.size())) != 1)
        throw RngError("system randomness source failed");
}

void DeterministicRng::fill(std::span<std::uint8_t> out) {
    std::size_t off = 0;
    while (off < out.size()) {
        Bytes input(16);
        for (int i = 0; i < 8; ++i) {
            input[i] = std::uint8_t(seed_ >> (8 * (7 - i)));
            input[8 + i] = std::uint8_t(counter_ >> (8 * (7 - i)));
        }
        ++counter_;
        const Bytes block = blake3_hash(input, 64);
        const std::size_t take = std::min(block.size(), out.size() - off);
        std::copy_n(block.begin(), take, out.begin() + off);
        off += take;
    }
}

}  // namespace frog
