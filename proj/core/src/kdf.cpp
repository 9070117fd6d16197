#include "frog/kdf.hpp"

#include <openssl/hmac.h>
#include <openssl/sha.h>

#include "frog/errors.hpp"

namespace frog {

std::array<std::uint8_t, 32> sha256(ByteView data) {
    std::array<std::uint8_t, 32> out;
    SHA256(data.data(), data.size(), out.data());
    return out;
}

std::array<std::uint8_t, 32> hmac_sha256(ByteView key, ByteView data) {
    std::array<std::uint8_t, 32> out;
    unsigned int len = 0;
    if (!HMAC(EVP_sha256(), key.data(), int(key.size()), data.data(), data.size(),
              out.data(), &len) ||
        len != 32) {
        throw Error("HMAC-SHA-256 failed");
    }
    return out;
}

Bytes hkdf_sha256(ByteView ikm, ByteView salt, ByteView info, std::size_t out_len) {
    if (out_len > 255 * 32) throw DomainError("HKDF output longer than 255 blocks");
    static const std::uint8_t kZeroSalt[32] = {0};
    const auto prk =
        hmac_sha256(salt.empty() ? ByteView(kZeroSalt, 32) : salt, ikm);

    Bytes okm;
    okm.reserve(out_len);
    Bytes block;
    std::uint8_t counter = 1;
    while (okm.size() < out_len) {
        Bytes input = block;
        input.insert(input.end(), info.begin(), info.end());
        input.push_back(counter++);
        const auto t = hmac_sha256(prk, input);
        block.assign(t.begin(), t.end());
        const std::size_t take = std::min(block.size(), out_len - okm.size());
        okm.insert(okm.end(), block.begin(), block.begin() + take);
    }
    return okm;
}

}  // namespace frog
