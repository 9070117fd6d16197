#include "frog/aead.hpp"

#include <openssl/evp.h>

#include <memory>

#include "frog/errors.hpp"

namespace frog {

namespace {

struct CipherCtxFree {
    void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree>;

CipherCtx make_ctx() {
    CipherCtx ctx(EVP_CIPHER_CTX_new());
    if (!ctx) throw Error("EVP_CIPHER_CTX_new failed");
    return ctx;
}

}  // namespace

Bytes aes256gcm_seal(ByteView key32, ByteView nonce12, ByteView aad, ByteView plaintext) {
    if (key32.size() != 32 || nonce12.size() != kGcmNonceLen)
        throw DomainError("AES-256-GCM requires a 32-byte key and 12-byte nonce");
    auto ctx = make_ctx();
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                           nonce12.data()) != 1)
        throw Error("GCM encrypt init failed");

    int len = 0;
    if (!aad.empty() &&
        EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(), int(aad.size())) != 1)
        throw Error("GCM AAD failed");

    Bytes out(plaintext.size() + kGcmTagLen);
    int written = 0;
    if (!plaintext.empty()) {
        if (EVP_EncryptUpdate(ctx.get(), out.data(), &written, plaintext.data(),
                              int(plaintext.size())) != 1)
            throw Error("GCM encrypt failed");
    }
    int fin = 0;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + written, &fin) != 1)
        throw Error("GCM encrypt finalize failed");
    written += fin;
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kGcmTagLen,
                            out.data() + written) != 1)
        throw Error("GCM tag extraction failed");
    out.resize(std::size_t(written) + kGcmTagLen);
    return out;
}

std::optional<Bytes> aes256gcm_open(ByteView key32, ByteView nonce12, ByteView aad,
                                    ByteView ciphertext_and_tag) {
    if (key32.size() != 32 || nonce12.size() != kGcmNonceLen)
        throw DomainError("AES-256-GCM requires a 32-byte key and 12-byte nonce");
    if (ciphertext_and_tag.size() < kGcmTagLen) return std::nullopt;
    const std::size_t ct_len = ciphertext_and_tag.size() - kGcmTagLen;

    auto ctx = make_ctx();
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                           nonce12.data()) != 1)
        throw Error("GCM decrypt init failed");

    int len = 0;
    if (!aad.empty() &&
        EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(), int(aad.size())) != 1)
        throw Error("GCM AAD failed");

    Bytes out(ct_len);
    int written = 0;
    if (ct_len) {
        if (EVP_DecryptUpdate(ctx.get(), out.data(), &written, ciphertext_and_tag.data(),
                              int(ct_len)) != 1)
            return std::nullopt;
    }
    std::uint8_t tag[kGcmTagLen];
    std::copy_n(ciphertext_and_tag.data() + ct_len, kGcmTagLen, tag);
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kGcmTagLen, tag) != 1)
        throw Error("GCM tag set failed");
    int fin = 0;
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + written, &fin) != 1)
        return std::nullopt;  // authentication failure
    out.resize(std::size_t(written) + fin);
    return out;
}

}  // namespace frog

namespace frog {

struct Aes256GcmSealer::Impl {
    CipherCtx ctx;
};

Aes256GcmSealer::Aes256GcmSealer(ByteView key32, ByteView nonce12, ByteView aad)
    : impl_(new Impl{make_ctx()}) {
    if (key32.size() != 32 || nonce12.size() != kGcmNonceLen)
        throw DomainError("AES-256-GCM requires a 32-byte key and 12-byte nonce");
    if (EVP_EncryptInit_ex(impl_->ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                           nonce12.data()) != 1)
        throw Error("GCM encrypt init failed");
    int len = 0;
    if (!aad.empty() &&
        EVP_EncryptUpdate(impl_->ctx.get(), nullptr, &len, aad.data(), int(aad.size())) != 1)
        throw Error("GCM AAD failed");
}

Aes256GcmSealer::~Aes256GcmSealer() = default;

Bytes Aes256GcmSealer::update(ByteView chunk) {
    Bytes out(chunk.size());
    int written = 0;
    if (!chunk.empty()) {
        if (EVP_EncryptUpdate(impl_->ctx.get(), out.data(), &written, chunk.data(),
                              int(chunk.size())) != 1)
            throw Error("GCM encrypt failed");
    }
    out.resize(std::size_t(written));
    return out;
}

std::array<std::uint8_t, kGcmTagLen> Aes256GcmSealer::finish() {
    std::uint8_t tail[16];
    int fin = 0;
    if (EVP_EncryptFinal_ex(impl_->ctx.get(), tail, &fin) != 1 || fin != 0)
        throw Error("GCM encrypt finalize failed");
    std::array<std::uint8_t, kGcmTagLen> tag;
    if (EVP_CIPHER_CTX_ctrl(impl_->ctx.get(), EVP_CTRL_GCM_GET_TAG, kGcmTagLen,
                            tag.data()) != 1)
        throw Error("GCM tag extraction failed");
    return tag;
}

}  // namespace frog
