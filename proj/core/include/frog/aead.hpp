#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>

#include "frog/bytes.hpp"

namespace frog {

inline constexpr std::size_t kGcmNonceLen = 12;
inline constexpr std::size_t kGcmTagLen = 16;

// AES-256-GCM, one-shot. Output is ciphertext || 16-byte tag.
Bytes aes256gcm_seal(ByteView key32, ByteView nonce12, ByteView aad, ByteView plaintext);

// Returns the plaintext only when the tag verifies; empty optional otherwise.
std::optional<Bytes> aes256gcm_open(ByteView key32, ByteView nonce12, ByteView aad,
                                    ByteView ciphertext_and_tag);

// Incremental encryption producing one GCM stream and a single tag; lets
// callers seal large inputs chunk by chunk.
class Aes256GcmSealer {
public:
    Aes256GcmSealer(ByteView key32, ByteView nonce12, ByteView aad);
    ~Aes256GcmSealer();
    Aes256GcmSealer(const Aes256GcmSealer&) = delete;
    Aes256GcmSealer& operator=(const Aes256GcmSealer&) = delete;

    Bytes update(ByteView chunk);
    std::array<std::uint8_t, kGcmTagLen> finish();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace frog
