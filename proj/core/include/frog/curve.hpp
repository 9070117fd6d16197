#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frog/bigint.hpp"
#include "frog/biguint.hpp"
#include "frog/field.hpp"

namespace frog {

// Immutable description of a short-Weierstrass curve y^2 = x^3 + ax + b
// over F_p with base point G of order n and cofactor h, plus the derivation
// metadata (seed and search indices) and optional published evidence used
// by the validation suite.
struct CurveParams {
    std::string name;
    BigUint p;
    BigInt a;
    BigUint b;
    BigUint gx, gy;
    BigUint n;
    BigUint h;
    Bytes seed;
    std::uint64_t coeff_index = 0;
    std::uint64_t basepoint_index = 0;

    // Published verification targets, when the source documents them.
    std::optional<BigInt> published_trace;
    std::optional<BigInt> published_discriminant;
    std::optional<BigUint> published_twist_order;
};

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

// Projective point (X : Y : Z); identity is (0 : 1 : 0). Coordinates live
// on a specific Curve; all group operations go through that Curve.
struct Point {
    FieldElement x, y, z;

    bool is_identity() const { return z.is_zero(); }
};

struct AffinePoint {
    BigUint x, y;
};

enum class ScalarSecrecy {
    public_input,  // variable-time path allowed
    secret,        // fixed-shape ladder, branch-free selects
};

class Curve : public std::enable_shared_from_this<Curve> {
public:
    // Full structural validation: p odd >= 5, non-singular, G on curve,
    // G != identity. Throws StructuralValidationError / DomainError.
    static CurvePtr create(CurveParams params);
    // Builds the arithmetic context but skips the structural checks, so the
    // validation suite can examine deliberately broken parameter sets.
    static CurvePtr create_unchecked(CurveParams params);

    const CurveParams& params() const { return params_; }
    const FieldCtxPtr& field() const { return field_; }
    std::size_t field_bytes() const { return field_->byte_width(); }

    Point identity() const;
    const Point& generator() const { return generator_; }

    bool is_on_curve(const Point& pt) const;
    bool is_nonsingular() const;  // 4a^3 + 27b^2 != 0

    // Complete addition (Renes-Costello-Batina): one branch-free formula
    // valid for every input pair on an odd-order curve, including identity,
    // doubling and inverse pairs.
    Point add(const Point& lhs, const Point& rhs) const;
    Point dbl(const Point& pt) const { return add(pt, pt); }
    Point negate(const Point& pt) const;

    // k * pt. The secret path runs a fixed-shape double-and-add-always over
    // the full limb width of k with masked selects; the public path is a
    // faster skip-leading-zeros loop.
    Point scalar_mul(const BigUint& k, const Point& pt,
                     ScalarSecrecy secrecy = ScalarSecrecy::public_input) const;
    // Fixed-base k * G through a lazily built windowed table.
    Point scalar_mul_base(const BigUint& k) const;

    bool point_eq(const Point& lhs, const Point& rhs) const;

    // Uncompressed wire format: 0x04 || x || y (fixed-width big-endian
    // coordinates); the identity is the single byte 0x00. decode validates
    // length, coordinate range and curve membership.
    Bytes encode_point(const Point& pt) const;
    Point decode_point(ByteView bytes) const;

    std::optional<AffinePoint> to_affine(const Point& pt) const;  // empty for identity
    Point from_affine(const BigUint& x, const BigUint& y) const;  // checks membership

    const FieldElement& coeff_a() const { return a_; }
    const FieldElement& coeff_b() const { return b_; }

private:
    Curve() = default;
    static CurvePtr build(CurveParams params, bool validate);

    Point mul_public(const BigUint& k, const Point& pt) const;
    Point mul_secret(const BigUint& k, const Point& pt) const;
    void build_base_table() const;

    CurveParams params_;
    FieldCtxPtr field_;
    FieldElement a_, b_, b3_;
    Point generator_;

    // Windowed fixed-base table: table_[w][d-1] = d * 2^(4w) * G.
    mutable std::once_flag table_once_;
    mutable std::vector<std::array<Point, 15>> base_table_;
};

}  // namespace frog
