#include <doctest.h>

#include "frog/aead.hpp"
#include "frog/kdf.hpp"
#include "frog/rng.hpp"
#include "frozen_vectors.hpp"

using frog::Bytes;

TEST_CASE("SHA-256 standard vectors") {
    CHECK(frog::to_hex(frog::sha256(frog::ascii_bytes("abc"))) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(frog::to_hex(frog::sha256({}))
          == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("HKDF-SHA-256 matches RFC 5869") {
    // test case 1
    const Bytes ikm1(22, 0x0b);
    const Bytes salt1 = frog::from_hex("000102030405060708090a0b0c");
    const Bytes info1 = frog::from_hex("f0f1f2f3f4f5f6f7f8f9");
    CHECK(frog::to_hex(frog::hkdf_sha256(ikm1, salt1, info1, 42)) == frozen::kHkdfTc1);

    // test case 2: longer inputs/outputs
    Bytes ikm2, salt2, info2;
    for (int i = 0x00; i <= 0x4f; ++i) ikm2.push_back(std::uint8_t(i));
    for (int i = 0x60; i <= 0xaf; ++i) salt2.push_back(std::uint8_t(i));
    for (int i = 0xb0; i <= 0xff; ++i) info2.push_back(std::uint8_t(i));
    CHECK(frog::to_hex(frog::hkdf_sha256(ikm2, salt2, info2, 82)) == frozen::kHkdfTc2);

    // test case 3: empty salt and info
    CHECK(frog::to_hex(frog::hkdf_sha256(ikm1, {}, {}, 42)) == frozen::kHkdfTc3);
}

TEST_CASE("AES-256-GCM matches the independent oracle") {
    const Bytes key = frog::from_hex(frozen::kGcmKey);
    const Bytes nonce = frog::from_hex(frozen::kGcmNonce);
    const Bytes aad = frog::from_hex(frozen::kGcmAad);
    const Bytes pt = frog::from_hex(frozen::kGcmPlain);

    const Bytes sealed = frog::aes256gcm_seal(key, nonce, aad, pt);
    CHECK(frog::to_hex(sealed) == frozen::kGcmSealed);

    const auto opened = frog::aes256gcm_open(key, nonce, aad, sealed);
    REQUIRE(opened.has_value());
    CHECK(*opened == pt);

    CHECK(frog::to_hex(frog::aes256gcm_seal(key, nonce, aad, {})) == frozen::kGcmSealedEmpty);
}

TEST_CASE("GCM authentication failures") {
    const Bytes key = frog::from_hex(frozen::kGcmKey);
    const Bytes nonce = frog::from_hex(frozen::kGcmNonce);
    const Bytes aad = frog::from_hex(frozen::kGcmAad);
    const Bytes pt = frog::from_hex(frozen::kGcmPlain);
    const Bytes sealed = frog::aes256gcm_seal(key, nonce, aad, pt);

    for (std::size_t i = 0; i < sealed.size(); ++i) {
        Bytes bad = sealed;
        bad[i] ^= 0x01;
        CHECK(!frog::aes256gcm_open(key, nonce, aad, bad).has_value());
    }
    Bytes bad_aad = aad;
    bad_aad[0] ^= 0x80;
    CHECK(!frog::aes256gcm_open(key, nonce, bad_aad, sealed).has_value());
    CHECK(!frog::aes256gcm_open(key, nonce, aad, Bytes(8, 0)).has_value());  // too short
}

TEST_CASE("streaming sealer equals one-shot") {
    frog::DeterministicRng rng(55);
    const Bytes key = rng.bytes(32);
    const Bytes nonce = rng.bytes(12);
    const Bytes aad = rng.bytes(37);
    const Bytes pt = rng.bytes(200000);

    const Bytes oneshot = frog::aes256gcm_seal(key, nonce, aad, pt);

    frog::Aes256GcmSealer sealer(key, nonce, aad);
    Bytes streamed;
    for (std::size_t off = 0; off < pt.size(); off += 65536) {
        const std::size_t take = std::min<std::size_t>(65536, pt.size() - off);
        const Bytes chunk = sealer.update(frog::ByteView(pt.data() + off, take));
        streamed.insert(streamed.end(), chunk.begin(), chunk.end());
    }
    const auto tag = sealer.finish();
    streamed.insert(streamed.end(), tag.begin(), tag.end());
    CHECK(streamed == oneshot);
}

TEST_CASE("deterministic rng is reproducible, system rng differs per draw") {
    frog::DeterministicRng a(99), b(99), c(100);
    CHECK(a.bytes(64) == b.bytes(64));
    CHECK(a.bytes(64) == b.bytes(64));  // stays in lockstep
    CHECK(frog::DeterministicRng(99).bytes(64) != c.bytes(64));

    frog::SystemRng sys;
    CHECK(sys.bytes(32) != sys.bytes(32));
}
