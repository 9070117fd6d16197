#pragma once

#include <cstdint>
#include <span>

#include "frog/bytes.hpp"

namespace frog {

class Rng {
public:
    virtual ~Rng() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        fill(out);
        return out;
    }
};

// Process-wide CSPRNG (OpenSSL RAND_bytes). Throws RngError on failure.
class SystemRng final : public Rng {
public:
    void fill(std::span<std::uint8_t> out) override;
};

// BLAKE3-XOF counter stream from a 64-bit seed. For tests and reproducible
// benchmark scalar schedules only, never for keys.
class DeterministicRng final : public Rng {
public:
    explicit DeterministicRng(std::uint64_t seed) : seed_(seed) {}
    void fill(std::span<std::uint8_t> out) override;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace frog
