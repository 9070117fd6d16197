#include "frog/blake3.hpp"

#include <bit>
#include <cstring>

namespace frog {

namespace {

constexpr std::uint32_t CHUNK_START = 1u << 0;
constexpr std::uint32_t CHUNK_END = 1u << 1;
constexpr std::uint32_t PARENT = 1u << 2;
constexpr std::uint32_t ROOT = 1u << 3;

constexpr std::size_t BLOCK_LEN = 64;
constexpr std::size_t CHUNK_LEN = 1024;

constexpr std::array<std::uint32_t, 8> IV = {0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
                                             0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19};

constexpr std::array<std::uint8_t, 16> MSG_PERM = {2, 6,  3,  10, 7, 0,  4,  13,
                                                   1, 11, 12, 5,  9, 14, 15, 8};

inline std::uint32_t load32_le(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
           std::uint32_t(p[3]) << 24;
}

inline void store32_le(std::uint8_t* p, std::uint32_t w) {
    p[0] = std::uint8_t(w);
    p[1] = std::uint8_t(w >> 8);
    p[2] = std::uint8_t(w >> 16);
    p[3] = std::uint8_t(w >> 24);
}

inline void g(std::uint32_t* v, unsigned a, unsigned b, unsigned c, unsigned d,
              std::uint32_t mx, std::uint32_t my) {
    v[a] = v[a] + v[b] + mx;
    v[d] = std::rotr(v[d] ^ v[a], 16);
    v[c] = v[c] + v[d];
    v[b] = std::rotr(v[b] ^ v[c], 12);
    v[a] = v[a] + v[b] + my;
    v[d] = std::rotr(v[d] ^ v[a], 8);
    v[c] = v[c] + v[d];
    v[b] = std::rotr(v[b] ^ v[c], 7);
}

// Core compression; returns the full 16-word output (CV = words 0..7,
// the extra 8 words feed the XOF).
std::array<std::uint32_t, 16> compress(const std::array<std::uint32_t, 8>& cv,
                                       const std::array<std::uint8_t, 64>& block,
                                       std::uint8_t block_len, std::uint64_t counter,
                                       std::uint32_t flags) {
    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) m[i] = load32_le(block.data() + 4 * i);

    std::uint32_t v[16] = {cv[0],
                           cv[1],
                           cv[2],
                           cv[3],
                           cv[4],
                           cv[5],
                           cv[6],
                           cv[7],
                           IV[0],
                           IV[1],
                           IV[2],
                           IV[3],
                           std::uint32_t(counter),
                           std::uint32_t(counter >> 32),
                           block_len,
                           flags};

    for (int round = 0; round < 7; ++round) {
        g(v, 0, 4, 8, 12, m[0], m[1]);
        g(v, 1, 5, 9, 13, m[2], m[3]);
        g(v, 2, 6, 10, 14, m[4], m[5]);
        g(v, 3, 7, 11, 15, m[6], m[7]);
        g(v, 0, 5, 10, 15, m[8], m[9]);
        g(v, 1, 6, 11, 12, m[10], m[11]);
        g(v, 2, 7, 8, 13, m[12], m[13]);
        g(v, 3, 4, 9, 14, m[14], m[15]);
        if (round < 6) {
            std::uint32_t permuted[16];
            for (int i = 0; i < 16; ++i) permuted[i] = m[MSG_PERM[i]];
            std::memcpy(m, permuted, sizeof m);
        }
    }

    std::array<std::uint32_t, 16> out;
    for (int i = 0; i < 8; ++i) {
        out[i] = v[i] ^ v[i + 8];
        out[i + 8] = v[i + 8] ^ cv[i];
    }
    return out;
}

std::array<std::uint32_t, 8> parent_cv(const std::array<std::uint32_t, 8>& left,
                                       const std::array<std::uint32_t, 8>& right) {
    std::array<std::uint8_t, 64> block;
    for (int i = 0; i < 8; ++i) store32_le(block.data() + 4 * i, left[i]);
    for (int i = 0; i < 8; ++i) store32_le(block.data() + 32 + 4 * i, right[i]);
    const auto full = compress(IV, block, BLOCK_LEN, 0, PARENT);
    std::array<std::uint32_t, 8> cv;
    std::copy_n(full.begin(), 8, cv.begin());
    return cv;
}

}  // namespace

Blake3::Blake3() {
    chunk_.cv = IV;
}

void Blake3::update(ByteView data) {
    std::size_t off = 0;
    while (off < data.size()) {
        // Flush a completed chunk only when more input arrives; the final
        // chunk must stay buffered so the root can be identified.
        const std::size_t consumed =
            std::size_t(chunk_.blocks_compressed) * BLOCK_LEN + chunk_.buf_len;
        if (consumed == CHUNK_LEN) {
            std::uint32_t flags = chunk_.blocks_compressed == 0 ? CHUNK_START : 0;
            const auto full =
                compress(chunk_.cv, chunk_.buf, BLOCK_LEN, chunk_.chunk_counter, flags | CHUNK_END);
            std::array<std::uint32_t, 8> cv;
            std::copy_n(full.begin(), 8, cv.begin());
            const std::uint64_t counter = chunk_.chunk_counter;
            add_chunk_cv(cv, counter + 1);
            chunk_ = ChunkState{};
            chunk_.cv = IV;
            chunk_.chunk_counter = counter + 1;
        }
        if (chunk_.buf_len == BLOCK_LEN &&
            std::size_t(chunk_.blocks_compressed + 1) * BLOCK_LEN < CHUNK_LEN) {
            std::uint32_t flags = chunk_.blocks_compressed == 0 ? CHUNK_START : 0;
            const auto full =
                compress(chunk_.cv, chunk_.buf, BLOCK_LEN, chunk_.chunk_counter, flags);
            std::copy_n(full.begin(), 8, chunk_.cv.begin());
            ++chunk_.blocks_compressed;
            chunk_.buf_len = 0;
        }
        const std::size_t want = BLOCK_LEN - chunk_.buf_len;
        const std::size_t take = std::min(want, data.size() - off);
        std::memcpy(chunk_.buf.data() + chunk_.buf_len, data.data() + off, take);
        chunk_.buf_len = std::uint8_t(chunk_.buf_len + take);
        off += take;
    }
}

// Merge a finished chunk CV into the stack. total_chunks is the number of
// chunks fully processed so far; its trailing one-bits tell how many merges
// complete a subtree at this point.
void Blake3::add_chunk_cv(std::array<std::uint32_t, 8> cv, std::uint64_t total_chunks) {
    std::uint64_t n = total_chunks;
    while ((n & 1) == 0) {
        cv = parent_cv(cv_stack_.back(), cv);
        cv_stack_.pop_back();
        n >>= 1;
    }
    cv_stack_.push_back(cv);
}

Blake3::Output Blake3::root_output() const {
    // Finish the buffered chunk.
    std::uint32_t flags = (chunk_.blocks_compressed == 0 ? CHUNK_START : 0) | CHUNK_END;
    std::array<std::uint32_t, 8> cv = chunk_.cv;
    std::array<std::uint8_t, 64> block = chunk_.buf;
    std::memset(block.data() + chunk_.buf_len, 0, BLOCK_LEN - chunk_.buf_len);

    if (cv_stack_.empty()) {
        return Output{cv, block, chunk_.buf_len, chunk_.chunk_counter, flags};
    }

    // Reduce: the final chunk joins the stack from the right; the topmost
    // merge becomes the root.
    auto full = compress(cv, block, chunk_.buf_len, chunk_.chunk_counter, flags);
    std::array<std::uint32_t, 8> right;
    std::copy_n(full.begin(), 8, right.begin());
    for (std::size_t i = cv_stack_.size(); i-- > 1;) {
        right = parent_cv(cv_stack_[i], right);
    }
    Output out;
    out.input_cv = IV;
    for (int i = 0; i < 8; ++i) store32_le(out.block.data() + 4 * i, cv_stack_[0][i]);
    for (int i = 0; i < 8; ++i) store32_le(out.block.data() + 32 + 4 * i, right[i]);
    out.block_len = BLOCK_LEN;
    out.counter = 0;
    out.flags = PARENT;
    return out;
}

void Blake3::finalize_xof(std::span<std::uint8_t> out) const {
    const Output root = root_output();
    std::size_t off = 0;
    std::uint64_t t = 0;
    while (off < out.size()) {
        const auto words =
            compress(root.input_cv, root.block, root.block_len, t, root.flags | ROOT);
        std::uint8_t bytes[64];
        for (int i = 0; i < 16; ++i) store32_le(bytes + 4 * i, words[i]);
        const std::size_t take = std::min<std::size_t>(64, out.size() - off);
        std::memcpy(out.data() + off, bytes, take);
        off += take;
        ++t;
    }
}

Bytes Blake3::finalize(std::size_t out_len) const {
    Bytes out(out_len);
    finalize_xof(out);
    return out;
}

Bytes blake3_hash(ByteView input, std::size_t out_len) {
    Blake3 h;
    h.update(input);
    return h.finalize(out_len);
}

}  // namespace frog
