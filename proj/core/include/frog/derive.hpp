#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "frog/biguint.hpp"
#include "frog/curve.hpp"

namespace frog {

enum class IndexEncoding {
    ascii_decimal,  // "1294798"
    be8,            // 8-byte big-endian
    le8,            // 8-byte little-endian
};

std::string index_encoding_name(IndexEncoding enc);
std::optional<IndexEncoding> index_encoding_from_name(std::string_view name);

// Byte-level layout of the BLAKE3 derivation input:
//   seed || sep || tag || sep || encode(index)
// The published rule fixes the formula but not the encoding, so the
// concatenation is configurable; the config behind any derived value is
// echoed in reports.
struct DerivationConfig {
    Bytes seed = ascii_bytes("ECCFrog522PP|v1");
    Bytes tag_b = {'b'};
    Bytes tag_g = {'G'};
    std::size_t digest_len = 64;
    IndexEncoding index_encoding = IndexEncoding::be8;
    Bytes separator{};

    bool operator==(const DerivationConfig&) const = default;
};

// The config that reproduces the published constants: ascii-decimal index,
// "|" separator (the seed string itself is pipe-delimited).
DerivationConfig publication_config();

Bytes encode_index(IndexEncoding enc, std::uint64_t index);

// BLAKE3 digest of the assembled input, read as a big-endian integer.
BigUint derive_candidate(const DerivationConfig& cfg, ByteView tag, std::uint64_t index);

// Coefficient rule: (candidate mod (p - 3)) + 2, confining b to [2, p-2].
BigUint derive_b(const DerivationConfig& cfg, std::uint64_t i, const BigUint& p);

// Base-point rule: candidate mod p.
BigUint derive_gx(const DerivationConfig& cfg, std::uint64_t j, const BigUint& p);

// Lift x to a curve point when x^3 + ax + b is a residue. Root selection:
// prefer_y when it matches one of the two roots (pinning the published Gy),
// otherwise min(y, p - y).
std::optional<AffinePoint> recover_basepoint(const BigUint& x, const Curve& curve,
                                             const std::optional<BigUint>& prefer_y = {});

// Exhaustive group-order count for toy fields (sum of Legendre characters);
// p must fit the toy bound.
inline constexpr std::uint64_t kMaxExhaustiveField = 1u << 22;
std::uint64_t count_points_exhaustive(std::uint64_t p, std::uint64_t a_mod_p,
                                      std::uint64_t b);

struct SearchCriteria {
    bool require_nonsingular = true;
    // Exhaustive point count must be prime (toy fields only).
    bool require_prime_order = true;
    // 0 disables; otherwise p^k mod N != 1 must hold for k = 1..anti_mov_kmax.
    unsigned anti_mov_kmax = 0;
    unsigned mr_rounds = 64;
};

struct CurveSearchResult {
    std::uint64_t index;
    BigUint b;
    BigUint order;  // exhaustive count when require_prime_order, else 0
};

struct BasepointSearchResult {
    std::uint64_t index;
    BigUint gx, gy;
};

// Smallest index in [start, max] whose derived b satisfies the criteria;
// empty when the range is exhausted. Order counting restricts p to the toy
// bound (DomainError otherwise).
std::optional<CurveSearchResult> search_curve(const DerivationConfig& cfg, const BigUint& p,
                                              const BigInt& a, std::uint64_t start_index,
                                              std::uint64_t max_index,
                                              const SearchCriteria& criteria);

// Smallest index whose derived x lifts to a point of exact order n on
// y^2 = x^3 + ax + b (n must be prime; n*G = O and G != O are verified).
std::optional<BasepointSearchResult> search_basepoint(const DerivationConfig& cfg,
                                                      const BigUint& p, const BigInt& a,
                                                      const BigUint& b, const BigUint& n,
                                                      std::uint64_t start_index,
                                                      std::uint64_t max_index);

// Scan the supported encoding space ({ascii,be8,le8} x separators {"", "|"})
// for a config that rederives both b (at coeff_index) and gx (at
// basepoint_index) from the params' seed. Empty when none reproduces.
std::optional<DerivationConfig> find_matching_encoding(const CurveParams& params);

}  // namespace frog
