#include "frog/derive.hpp"

#include "frog/blake3.hpp"
#include "frog/errors.hpp"
#include "frog/numtheory.hpp"

namespace frog {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

std::string index_encoding_name(IndexEncoding enc) {
    switch (enc) {
        case IndexEncoding::ascii_decimal: return "ascii-decimal";
        case IndexEncoding::be8: return "be8";
        case IndexEncoding::le8: return "le8";
    }
    return "?";
}

std::optional<IndexEncoding> index_encoding_from_name(std::string_view name) {
    if (name == "ascii-decimal" || name == "ascii") return IndexEncoding::ascii_decimal;
    if (name == "be8") return IndexEncoding::be8;
    if (name == "le8") return IndexEncoding::le8;
    return std::nullopt;
}

DerivationConfig publication_config() {
    DerivationConfig cfg;
    cfg.index_encoding = IndexEncoding::ascii_decimal;
    cfg.separator = {'|'};
    return cfg;
}

Bytes encode_index(IndexEncoding enc, std::uint64_t index) {
    switch (enc) {
        case IndexEncoding::ascii_decimal:
            return ascii_bytes(std::to_string(index));
        case IndexEncoding::be8: {
            Bytes out(8);
            for (int i = 0; i < 8; ++i) out[i] = std::uint8_t(index >> (8 * (7 - i)));
            return out;
        }
        case IndexEncoding::le8: {
            Bytes out(8);
            for (int i = 0; i < 8; ++i) out[i] = std::uint8_t(index >> (8 * i));
            return out;
        }
    }
    throw DomainError("unknown index encoding");
}

BigUint derive_candidate(const DerivationConfig& cfg, ByteView tag, std::uint64_t index) {
    if (cfg.digest_len < 64)
        throw DomainError("derivation digest must be at least 64 bytes");
    Bytes input = cfg.seed;
    input.insert(input.end(), cfg.separator.begin(), cfg.separator.end());
    input.insert(input.end(), tag.begin(), tag.end());
    input.insert(input.end(), cfg.separator.begin(), cfg.separator.end());
    const Bytes idx = encode_index(cfg.index_encoding, index);
    input.insert(input.end(), idx.begin(), idx.end());
    return BigUint::from_bytes_be(blake3_hash(input, cfg.digest_len));
}

BigUint derive_b(const DerivationConfig& cfg, std::uint64_t i, const BigUint& p) {
    if (p <= BigUint(5)) throw DomainError("derive_b requires p > 5");
    return derive_candidate(cfg, cfg.tag_b, i) % (p - BigUint(3)) + BigUint(2);
}

BigUint derive_gx(const DerivationConfig& cfg, std::uint64_t j, const BigUint& p) {
    if (p < BigUint(2)) throw DomainError("derive_gx requires p >= 2");
    return derive_candidate(cfg, cfg.tag_g, j) % p;
}

std::optional<AffinePoint> recover_basepoint(const BigUint& x, const Curve& curve,
                                             const std::optional<BigUint>& prefer_y) {
    const auto field = curve.field();
    const FieldElement fx = field->from_biguint(x);
    const FieldElement rhs =
        fx.square() * fx + curve.coeff_a() * fx + curve.coeff_b();
    const auto root = rhs.sqrt();
    if (!root) return std::nullopt;
    const BigUint y0 = root->to_biguint();            // canonical min(r, p-r)
    const BigUint y1 = (-*root).to_biguint();
    if (prefer_y && (*prefer_y == y0 || *prefer_y == y1))
        return AffinePoint{x, *prefer_y};
    return AffinePoint{x, y0};
}

std::uint64_t count_points_exhaustive(std::uint64_t p, std::uint64_t a_mod_p,
                                      std::uint64_t b) {
    if (p > kMaxExhaustiveField)
        throw DomainError("exhaustive point counting is limited to toy fields");
    // #E = p + 1 + sum_x chi(x^3 + ax + b), chi via Euler's criterion.
    std::uint64_t count = p + 1;
    const std::uint64_t exp = (p - 1) / 2;
    for (std::uint64_t x = 0; x < p; ++x) {
        const u64 rhs = (mulmod_u64(mulmod_u64(x, x, p), x, p) + mulmod_u64(a_mod_p, x, p) + b) % p;
        if (rhs == 0) continue;
        if (powmod_u64(rhs, exp, p) == 1)
            ++count;
        else
            --count;
    }
    return count;
}

namespace {

bool anti_mov_clear(const BigUint& p, const BigUint& n, unsigned kmax) {
    BigUint x(1);
    const BigUint base = p % n;
    for (unsigned k = 1; k <= kmax; ++k) {
        x = (x * base) % n;
        if (x.is_one()) return false;
    }
    return true;
}

}  // namespace

std::optional<CurveSearchResult> search_curve(const DerivationConfig& cfg, const BigUint& p,
                                              const BigInt& a, std::uint64_t start_index,
                                              std::uint64_t max_index,
                                              const SearchCriteria& criteria) {
    if (criteria.require_prime_order &&
        (!p.fits_u64() || p.to_u64() > kMaxExhaustiveField))
        throw DomainError("order-counting search requires a toy field");

    const BigUint a_mod = a.mod(p);
    for (std::uint64_t i = start_index; i <= max_index; ++i) {
        const BigUint b = derive_b(cfg, i, p);
        if (criteria.require_nonsingular) {
            // 4a^3 + 27b^2 mod p
            const BigUint d =
                (a_mod * a_mod % p * a_mod % p * BigUint(4) + b * b % p * BigUint(27)) % p;
            if (d.is_zero()) continue;
        }
        BigUint order;
        if (criteria.require_prime_order) {
            const std::uint64_t count =
                count_points_exhaustive(p.to_u64(), a_mod.to_u64(), b.to_u64());
            if (!is_probable_prime(BigUint(count), criteria.mr_rounds)) continue;
            order = BigUint(count);
            if (criteria.anti_mov_kmax && !anti_mov_clear(p, order, criteria.anti_mov_kmax))
                continue;
        }
        return CurveSearchResult{i, b, order};
    }
    return std::nullopt;
}

std::optional<BasepointSearchResult> search_basepoint(const DerivationConfig& cfg,
                                                      const BigUint& p, const BigInt& a,
                                                      const BigUint& b, const BigUint& n,
                                                      std::uint64_t start_index,
                                                      std::uint64_t max_index) {
    CurveParams shape;
    shape.name = "search";
    shape.p = p;
    shape.a = a;
    shape.b = b;
    shape.n = n;
    shape.h = BigUint(1);
    shape.gx = BigUint(0);
    shape.gy = BigUint(0);
    const CurvePtr curve = Curve::create_unchecked(shape);

    for (std::uint64_t j = start_index; j <= max_index; ++j) {
        const BigUint x = derive_gx(cfg, j, p);
        const auto pt = recover_basepoint(x, *curve);
        if (!pt) continue;
        const Point g = curve->from_affine(pt->x, pt->y);
        if (g.is_identity()) continue;
        // n prime and n*G = O force exact order n.
        if (!curve->scalar_mul(n, g).is_identity()) continue;
        return BasepointSearchResult{j, pt->x, pt->y};
    }
    return std::nullopt;
}

std::optional<DerivationConfig> find_matching_encoding(const CurveParams& params) {
    if (params.seed.empty()) return std::nullopt;
    const Bytes separators[] = {Bytes{}, Bytes{'|'}};
    for (IndexEncoding enc : {IndexEncoding::ascii_decimal, IndexEncoding::be8,
                              IndexEncoding::le8}) {
        for (const Bytes& sep : separators) {
            DerivationConfig cfg;
            cfg.seed = params.seed;
            cfg.index_encoding = enc;
            cfg.separator = sep;
            if (derive_b(cfg, params.coeff_index, params.p) != params.b) continue;
            if (derive_gx(cfg, params.basepoint_index, params.p) != params.gx) continue;
            return cfg;
        }
    }
    return std::nullopt;
}

}  // namespace frog
