#include "frog/curve.hpp"

#include <algorithm>

#include "frog/errors.hpp"

namespace frog {

CurvePtr Curve::build(CurveParams params, bool validate) {
    auto curve = std::shared_ptr<Curve>(new Curve());
    if (params.p < BigUint(5))
        throw DomainError("curve modulus must be >= 5");
    curve->field_ = FieldContext::create(params.p);
    curve->a_ = curve->field_->from_biguint(params.a.mod(params.p));
    curve->b_ = curve->field_->from_biguint(params.b);
    curve->b3_ = curve->b_ + curve->b_ + curve->b_;
    curve->generator_ = Point{curve->field_->from_biguint(params.gx),
                              curve->field_->from_biguint(params.gy),
                              curve->field_->one()};
    curve->params_ = std::move(params);

    if (validate) {
        if (!curve->is_nonsingular())
            throw StructuralValidationError("curve is singular (4a^3 + 27b^2 = 0)");
        if (curve->generator_.is_identity() || !curve->is_on_curve(curve->generator_))
            throw StructuralValidationError("base point is not on the curve");
        if (curve->params_.n.is_zero() || curve->params_.h.is_zero())
            throw StructuralValidationError("order and cofactor must be nonzero");
    }
    return curve;
}

CurvePtr Curve::create(CurveParams params) { return build(std::move(params), true); }

CurvePtr Curve::create_unchecked(CurveParams params) { return build(std::move(params), false); }

Point Curve::identity() const {
    return Point{field_->zero(), field_->one(), field_->zero()};
}

bool Curve::is_nonsingular() const {
    const FieldElement a3 = a_ * a_ * a_;
    const FieldElement b2 = b_ * b_;
    return !(a3.mul_small(4) + b2.mul_small(27)).is_zero();
}

bool Curve::is_on_curve(const Point& pt) const {
    if (pt.is_identity()) return true;
    // Projective form: Y^2 Z = X^3 + a X Z^2 + b Z^3.
    const FieldElement lhs = pt.y.square() * pt.z;
    const FieldElement z2 = pt.z.square();
    const FieldElement rhs = pt.x.square() * pt.x + a_ * pt.x * z2 + b_ * z2 * pt.z;
    return lhs == rhs;
}

// Renes-Costello-Batina 2016, algorithm 1 (arbitrary a). Complete on curves
// of odd prime order; no case analysis, which is what lets the secret-scalar
// ladder run without data-dependent branching.
Point Curve::add(const Point& lhs, const Point& rhs) const {
    const FieldElement &x1 = lhs.x, &y1 = lhs.y, &z1 = lhs.z;
    const FieldElement &x2 = rhs.x, &y2 = rhs.y, &z2 = rhs.z;

    FieldElement t0 = x1 * x2;
    FieldElement t1 = y1 * y2;
    FieldElement t2 = z1 * z2;
    FieldElement t3 = x1 + y1;
    FieldElement t4 = x2 + y2;
    t3 = t3 * t4;
    t4 = t0 + t1;
    t3 = t3 - t4;
    t4 = x1 + z1;
    FieldElement t5 = x2 + z2;
    t4 = t4 * t5;
    t5 = t0 + t2;
    t4 = t4 - t5;
    t5 = y1 + z1;
    FieldElement x3 = y2 + z2;
    t5 = t5 * x3;
    x3 = t1 + t2;
    t5 = t5 - x3;
    FieldElement z3 = a_ * t4;
    x3 = b3_ * t2;
    z3 = x3 + z3;
    x3 = t1 - z3;
    z3 = t1 + z3;
    FieldElement y3 = x3 * z3;
    t1 = t0 + t0;
    t1 = t1 + t0;
    t2 = a_ * t2;
    t4 = b3_ * t4;
    t1 = t1 + t2;
    t2 = t0 - t2;
    t2 = a_ * t2;
    t4 = t4 + t2;
    t0 = t1 * t4;
    y3 = y3 + t0;
    t0 = t5 * t4;
    x3 = t3 * x3;
    x3 = x3 - t0;
    t0 = t3 * t1;
    z3 = t5 * z3;
    z3 = z3 + t0;

    return Point{x3, y3, z3};
}

Point Curve::negate(const Point& pt) const {
    return Point{pt.x, -pt.y, pt.z};
}

bool Curve::point_eq(const Point& lhs, const Point& rhs) const {
    // Cross-multiplied projective comparison; identities compare equal.
    if (lhs.is_identity() || rhs.is_identity())
        return lhs.is_identity() == rhs.is_identity();
    if (!(lhs.x * rhs.z == rhs.x * lhs.z)) return false;
    return lhs.y * rhs.z == rhs.y * lhs.z;
}

Point Curve::mul_public(const BigUint& k, const Point& pt) const {
    Point acc = identity();
    for (std::size_t i = k.bit_length(); i-- > 0;) {
        acc = add(acc, acc);
        if (k.bit(i)) acc = add(acc, pt);
    }
    return acc;
}

Point Curve::mul_secret(const BigUint& k, const Point& pt) const {
    // Fixed shape: the scan width comes from the curve order (not from the
    // scalar's magnitude), every iteration performs the same double and add,
    // and the result is folded in with a masked select keyed on the scalar
    // bit. No secret-dependent branch or index anywhere below.
    Point acc = identity();
    const std::size_t order_limbs = (params_.n.bit_length() + 63) / 64;
    const std::size_t bits = 64 * std::max(k.limb_count(), order_limbs);
    for (std::size_t i = bits; i-- > 0;) {
        acc = add(acc, acc);
        const Point sum = add(acc, pt);
        const std::uint64_t bit_mask = ~std::uint64_t(0) * ((k.limb(i / 64) >> (i % 64)) & 1);
        acc.x = FieldElement::ct_select(bit_mask, sum.x, acc.x);
        acc.y = FieldElement::ct_select(bit_mask, sum.y, acc.y);
        acc.z = FieldElement::ct_select(bit_mask, sum.z, acc.z);
    }
    return acc;
}

Point Curve::scalar_mul(const BigUint& k, const Point& pt, ScalarSecrecy secrecy) const {
    return secrecy == ScalarSecrecy::secret ? mul_secret(k, pt) : mul_public(k, pt);
}

void Curve::build_base_table() const {
    const std::size_t windows = (params_.n.bit_length() + 3) / 4 + 1;
    base_table_.resize(windows);
    Point window_base = generator_;  // 2^(4w) * G
    for (std::size_t w = 0; w < windows; ++w) {
        Point acc = window_base;
        for (std::size_t d = 0; d < 15; ++d) {
            base_table_[w][d] = acc;
            acc = add(acc, window_base);
        }
        window_base = acc;  // 16 * window_base
    }
}

Point Curve::scalar_mul_base(const BigUint& k) const {
    std::call_once(table_once_, [this] { build_base_table(); });
    // Reduce once so every 4-bit digit has a table entry.
    const BigUint scalar = k % params_.n;
    Point acc = identity();
    const std::size_t digits = std::min(base_table_.size(), (scalar.bit_length() + 3) / 4);
    for (std::size_t w = 0; w < digits; ++w) {
        const std::uint64_t d = (scalar.limb((4 * w) / 64) >> ((4 * w) % 64)) & 0xF;
        if (d) acc = add(acc, base_table_[w][d - 1]);
    }
    return acc;
}

Bytes Curve::encode_point(const Point& pt) const {
    if (pt.is_identity()) return Bytes{0x00};
    const auto affine = to_affine(pt);
    Bytes out;
    out.reserve(1 + 2 * field_bytes());
    out.push_back(0x04);
    const Bytes xb = affine->x.to_bytes_be(field_bytes());
    const Bytes yb = affine->y.to_bytes_be(field_bytes());
    out.insert(out.end(), xb.begin(), xb.end());
    out.insert(out.end(), yb.begin(), yb.end());
    return out;
}

Point Curve::decode_point(ByteView bytes) const {
    if (bytes.size() == 1 && bytes[0] == 0x00) return identity();
    const std::size_t fb = field_bytes();
    if (bytes.size() != 1 + 2 * fb)
        throw DecodeError("point encoding has wrong length");
    if (bytes[0] != 0x04)
        throw DecodeError("point encoding has unknown type byte");
    FieldElement x, y;
    try {
        x = field_->decode(bytes.subspan(1, fb));
        y = field_->decode(bytes.subspan(1 + fb, fb));
    } catch (const DecodeError&) {
        throw DecodeError("point coordinate is out of range");
    }
    const Point pt{x, y, field_->one()};
    if (!is_on_curve(pt)) throw DecodeError("point is not on the curve");
    return pt;
}

std::optional<AffinePoint> Curve::to_affine(const Point& pt) const {
    if (pt.is_identity()) return std::nullopt;
    const FieldElement zinv = pt.z.inv();
    return AffinePoint{(pt.x * zinv).to_biguint(), (pt.y * zinv).to_biguint()};
}

Point Curve::from_affine(const BigUint& x, const BigUint& y) const {
    const Point pt{field_->from_biguint(x), field_->from_biguint(y), field_->one()};
    if (!is_on_curve(pt)) throw DomainError("coordinates do not satisfy the curve equation");
    return pt;
}

}  // namespace frog
