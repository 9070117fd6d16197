#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "frog/curve.hpp"
#include "frog/rng.hpp"

namespace frog {

// .frog container header, 218 bytes:
//   magic "FROG522\0" (8) || version 0x01 (1) || param_hash (32) ||
//   ephemeral_pub (133, uncompressed point) || salt (32) || nonce (12)
// The whole header is the AEAD associated data, so any header tamper fails
// authentication even before the explicit field checks.
inline constexpr std::size_t kHeaderMagicLen = 8;
inline constexpr std::uint8_t kHeaderVersion = 0x01;
inline constexpr std::size_t kEphemeralPubLen = 133;
inline constexpr std::size_t kSaltLen = 32;
inline constexpr std::size_t kNonceLen = 12;
inline constexpr std::size_t kHeaderLen =
    kHeaderMagicLen + 1 + 32 + kEphemeralPubLen + kSaltLen + kNonceLen;  // 218
inline constexpr std::size_t kTagLen = 16;

extern const std::array<std::uint8_t, kHeaderMagicLen> kHeaderMagic;  // "FROG522\0"

// HKDF info prefix; the curve's parameter hash is appended.
inline constexpr const char* kKdfInfoPrefix = "HippoFrog-v1";

struct KeyPair {
    BigUint d;  // secret scalar in [1, n-1]
    Point q;    // d * G
};

// Uniform d in [1, n-1] by rejection sampling on field-width byte draws;
// Q computed on the constant-time path.
KeyPair keygen(const Curve& curve, Rng& rng);

// Big-endian x-coordinate of d * peer (field-width bytes). The peer point
// must already have passed decode_point's on-curve check. Throws
// DegenerateSharedSecret if the product is the identity.
Bytes ecdh_shared_x(const Curve& curve, const BigUint& d, const Point& peer);

// HKDF-SHA-256(salt, ikm = shared_x, info = "HippoFrog-v1" || param_hash).
std::array<std::uint8_t, 32> derive_file_key(ByteView shared_x, ByteView salt,
                                             ByteView param_hash);

// Stream in, single header + GCM stream + one tag out.
void encrypt_stream(const Curve& curve, const Point& recipient_pub, std::istream& in,
                    std::ostream& out, Rng& rng);

// Validates magic/version/length/param-hash and decodes the ephemeral point
// before any key derivation; FormatError for structural problems, AuthError
// when the tag fails. No plaintext is emitted on either.
void decrypt_stream(const Curve& curve, const BigUint& d, std::istream& in,
                    std::ostream& out);

Bytes encrypt_bytes(const Curve& curve, const Point& recipient_pub, ByteView plaintext,
                    Rng& rng);
Bytes decrypt_bytes(const Curve& curve, const BigUint& d, ByteView blob);

// Key files: secret scalar as field-width big-endian bytes (0600), public
// key as the 133-byte point encoding.
void write_secret_key(const std::string& path, const Curve& curve, const BigUint& d);
BigUint read_secret_key(const std::string& path, const Curve& curve);
void write_public_key(const std::string& path, const Curve& curve, const Point& q);
Point read_public_key(const std::string& path, const Curve& curve);

}  // namespace frog
