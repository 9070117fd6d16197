#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "frog/bytes.hpp"

namespace frog {

// Portable BLAKE3 (plain hash mode) with extendable output. Matches the
// official test vectors; see tests/test_blake3.cpp for the frozen set.
class Blake3 {
public:
    Blake3();

    void update(ByteView data);

    // Squeeze `out.size()` bytes of root output. May be called once per
    // hasher after all updates.
    void finalize_xof(std::span<std::uint8_t> out) const;

    Bytes finalize(std::size_t out_len = 32) const;

private:
    struct ChunkState {
        std::array<std::uint32_t, 8> cv;
        std::uint64_t chunk_counter = 0;
        std::array<std::uint8_t, 64> buf{};
        std::uint8_t buf_len = 0;
        std::uint8_t blocks_compressed = 0;
    };

    struct Output {
        std::array<std::uint32_t, 8> input_cv;
        std::array<std::uint8_t, 64> block;
        std::uint8_t block_len;
        std::uint64_t counter;
        std::uint32_t flags;
    };

    Output root_output() const;
    void add_chunk_cv(std::array<std::uint32_t, 8> cv, std::uint64_t total_chunks);

    ChunkState chunk_;
    std::vector<std::array<std::uint32_t, 8>> cv_stack_;
};

Bytes blake3_hash(ByteView input, std::size_t out_len = 32);

}  // namespace frog
