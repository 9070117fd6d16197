#include "frog/hippo.hpp"

#include <sys/stat.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "frog/aead.hpp"
#include "frog/errors.hpp"
#include "frog/kdf.hpp"
#include "frog/params.hpp"

namespace frog {

const std::array<std::uint8_t, kHeaderMagicLen> kHeaderMagic = {'F', 'R', 'O', 'G',
                                                                '5', '2', '2', '\0'};

namespace {

// GCM caps the payload at 2^32 - 2 blocks of 16 bytes.
constexpr std::uint64_t kMaxPlaintext = (std::uint64_t(1) << 32) * 16 - 32;

Bytes read_all(std::istream& in) {
    Bytes data;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        data.insert(data.end(), buf, buf + in.gcount());
        if (in.eof()) break;
    }
    return data;
}

}  // namespace

KeyPair keygen(const Curve& curve, Rng& rng) {
    const std::size_t width = curve.field_bytes();
    const BigUint& n = curve.params().n;
    BigUint d;
    do {
        d = BigUint::from_bytes_be(rng.bytes(width));
    } while (d.is_zero() || d >= n);
    Point q = curve.scalar_mul(d, curve.generator(), ScalarSecrecy::secret);
    return KeyPair{std::move(d), std::move(q)};
}

Bytes ecdh_shared_x(const Curve& curve, const BigUint& d, const Point& peer) {
    if (d.is_zero() || d >= curve.params().n)
        throw DomainError("ECDH scalar must lie in [1, n-1]");
    const Point shared = curve.scalar_mul(d, peer, ScalarSecrecy::secret);
    const auto affine = curve.to_affine(shared);
    if (!affine) throw DegenerateSharedSecret();
    return affine->x.to_bytes_be(curve.field_bytes());
}

std::array<std::uint8_t, 32> derive_file_key(ByteView shared_x, ByteView salt,
                                             ByteView param_hash) {
    Bytes info = ascii_bytes(kKdfInfoPrefix);
    info.insert(info.end(), param_hash.begin(), param_hash.end());
    const Bytes okm = hkdf_sha256(shared_x, salt, info, 32);
    std::array<std::uint8_t, 32> key;
    std::copy_n(okm.begin(), 32, key.begin());
    return key;
}

void encrypt_stream(const Curve& curve, const Point& recipient_pub, std::istream& in,
                    std::ostream& out, Rng& rng) {
    if (!curve.is_on_curve(recipient_pub) || recipient_pub.is_identity())
        throw DomainError("recipient public key is not a valid curve point");

    const KeyPair ephemeral = keygen(curve, rng);
    const Bytes shared = ecdh_shared_x(curve, ephemeral.d, recipient_pub);

    Bytes header;
    header.reserve(kHeaderLen);
    header.insert(header.end(), kHeaderMagic.begin(), kHeaderMagic.end());
    header.push_back(kHeaderVersion);
    const auto ph = param_hash(curve.params());
    header.insert(header.end(), ph.begin(), ph.end());
    const Bytes eph = curve.encode_point(ephemeral.q);
    if (eph.size() != kEphemeralPubLen)
        throw DomainError("curve does not produce 133-byte point encodings");
    header.insert(header.end(), eph.begin(), eph.end());
    const Bytes salt = rng.bytes(kSaltLen);
    header.insert(header.end(), salt.begin(), salt.end());
    const Bytes nonce = rng.bytes(kNonceLen);
    header.insert(header.end(), nonce.begin(), nonce.end());

    const auto key = derive_file_key(shared, salt, ByteView(ph.data(), ph.size()));
    out.write(reinterpret_cast<const char*>(header.data()), std::streamsize(header.size()));

    Aes256GcmSealer sealer(key, nonce, header);
    std::uint64_t total = 0;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::size_t got = std::size_t(in.gcount());
        total += got;
        if (total > kMaxPlaintext) throw DomainError("plaintext exceeds the GCM size limit");
        const Bytes ct =
            sealer.update(ByteView(reinterpret_cast<const std::uint8_t*>(buf), got));
        out.write(reinterpret_cast<const char*>(ct.data()), std::streamsize(ct.size()));
        if (in.eof()) break;
    }
    const auto tag = sealer.finish();
    out.write(reinterpret_cast<const char*>(tag.data()), std::streamsize(tag.size()));
    if (!out) throw Error("write failed");
}

void decrypt_stream(const Curve& curve, const BigUint& d, std::istream& in,
                    std::ostream& out) {
    const Bytes blob = read_all(in);
    if (blob.size() < kHeaderLen + kTagLen)
        throw FormatError("container is shorter than header + tag");

    const ByteView header(blob.data(), kHeaderLen);
    std::size_t off = 0;
    if (!std::equal(kHeaderMagic.begin(), kHeaderMagic.end(), header.begin()))
        throw FormatError("bad magic");
    off += kHeaderMagicLen;
    if (header[off] != kHeaderVersion) throw FormatError("unsupported version");
    off += 1;
    const ByteView stored_hash = header.subspan(off, 32);
    const auto local_hash = param_hash(curve.params());
    if (!ct_equal(stored_hash, ByteView(local_hash.data(), local_hash.size())))
        throw FormatError("parameter hash does not match the local curve");
    off += 32;
    Point ephemeral;
    try {
        ephemeral = curve.decode_point(header.subspan(off, kEphemeralPubLen));
    } catch (const DecodeError& e) {
        throw FormatError(std::string("ephemeral point rejected: ") + e.what());
    }
    if (ephemeral.is_identity()) throw FormatError("ephemeral point is the identity");
    off += kEphemeralPubLen;
    const ByteView salt = header.subspan(off, kSaltLen);
    off += kSaltLen;
    const ByteView nonce = header.subspan(off, kNonceLen);

    const Bytes shared = ecdh_shared_x(curve, d, ephemeral);
    const auto key = derive_file_key(shared, salt, stored_hash);

    const ByteView sealed(blob.data() + kHeaderLen, blob.size() - kHeaderLen);
    const auto plaintext = aes256gcm_open(key, nonce, header, sealed);
    if (!plaintext) throw AuthError("authentication failed");

    out.write(reinterpret_cast<const char*>(plaintext->data()),
              std::streamsize(plaintext->size()));
    if (!out) throw Error("write failed");
}

Bytes encrypt_bytes(const Curve& curve, const Point& recipient_pub, ByteView plaintext,
                    Rng& rng) {
    std::istringstream in(std::string(plaintext.begin(), plaintext.end()));
    std::ostringstream out;
    encrypt_stream(curve, recipient_pub, in, out, rng);
    const std::string s = out.str();
    return Bytes(s.begin(), s.end());
}

Bytes decrypt_bytes(const Curve& curve, const BigUint& d, ByteView blob) {
    std::istringstream in(std::string(blob.begin(), blob.end()));
    std::ostringstream out;
    decrypt_stream(curve, d, in, out);
    const std::string s = out.str();
    return Bytes(s.begin(), s.end());
}

void write_secret_key(const std::string& path, const Curve& curve, const BigUint& d) {
    const Bytes bytes = d.to_bytes_be(curve.field_bytes());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open secret key file for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    out.close();
    if (::chmod(path.c_str(), 0600) != 0)
        throw Error("cannot restrict secret key permissions: " + path);
}

BigUint read_secret_key(const std::string& path, const Curve& curve) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open secret key file: " + path);
    Bytes bytes = read_all(in);
    if (bytes.size() != curve.field_bytes())
        throw FormatError("secret key file has wrong length");
    BigUint d = BigUint::from_bytes_be(bytes);
    if (d.is_zero() || d >= curve.params().n)
        throw FormatError("secret key is out of range");
    return d;
}

void write_public_key(const std::string& path, const Curve& curve, const Point& q) {
    const Bytes bytes = curve.encode_point(q);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open public key file for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

Point read_public_key(const std::string& path, const Curve& curve) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open public key file: " + path);
    const Bytes bytes = read_all(in);
    return curve.decode_point(bytes);  // throws DecodeError off-curve
}

}  // namespace frog
