#include "frog/field.hpp"

#include <cstring>

#include "frog/errors.hpp"
#include "frog/numtheory.hpp"

namespace frog {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Limbs = std::array<u64, kMaxFieldLimbs>;

// -p^{-1} mod 2^64 by Newton iteration; p odd.
u64 mont_n0inv(u64 p0) {
    u64 inv = p0;  // 3 bits correct
    for (int i = 0; i < 5; ++i) inv *= 2 - p0 * inv;
    return ~inv + 1;  // negate
}

}  // namespace

FieldCtxPtr FieldContext::create(const BigUint& p) {
    if (!p.is_odd() || p < BigUint(3))
        throw DomainError("field modulus must be an odd integer >= 3");
    if (p.bit_length() > 64 * kMaxFieldLimbs)
        throw DomainError("field modulus exceeds the 1024-bit limit");

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->p_ = p;
    ctx->nw_ = (p.bit_length() + 63) / 64;
    ctx->bytes_ = (p.bit_length() + 7) / 8;
    for (std::size_t i = 0; i < ctx->nw_; ++i) ctx->p_limbs_[i] = p.limb(i);
    ctx->n0inv_ = mont_n0inv(ctx->p_limbs_[0]);

    // R^2 mod p and R mod p via BigUint (setup only, not a hot path).
    const BigUint r = BigUint::pow2(64 * ctx->nw_) % p;
    const BigUint r2 = (r * r) % p;
    for (std::size_t i = 0; i < ctx->nw_; ++i) {
        ctx->r2_[i] = r2.limb(i);
        ctx->mont_one_[i] = r.limb(i);
    }
    return ctx;
}

bool FieldContext::same_field(const FieldContext& other) const {
    return this == &other || p_ == other.p_;
}

// CIOS Montgomery multiplication with fixed nw_-bounded loops and a
// branch-free final subtraction.
void FieldContext::mont_mul(Limbs& out, const Limbs& a, const Limbs& b) const {
    const std::size_t nw = nw_;
    u64 t[kMaxFieldLimbs + 2] = {0};

    for (std::size_t i = 0; i < nw; ++i) {
        u64 carry = 0;
        const u64 ai = a[i];
        for (std::size_t j = 0; j < nw; ++j) {
            const u128 acc = u128(t[j]) + u128(ai) * b[j] + carry;
            t[j] = u64(acc);
            carry = u64(acc >> 64);
        }
        u128 acc = u128(t[nw]) + carry;
        t[nw] = u64(acc);
        t[nw + 1] += u64(acc >> 64);

        const u64 m = t[0] * n0inv_;
        acc = u128(t[0]) + u128(m) * p_limbs_[0];
        carry = u64(acc >> 64);
        for (std::size_t j = 1; j < nw; ++j) {
            acc = u128(t[j]) + u128(m) * p_limbs_[j] + carry;
            t[j - 1] = u64(acc);
            carry = u64(acc >> 64);
        }
        acc = u128(t[nw]) + carry;
        t[nw - 1] = u64(acc);
        carry = u64(acc >> 64);
        t[nw] = t[nw + 1] + carry;
        t[nw + 1] = 0;
    }

    // Subtract p unconditionally, keep the difference iff t >= p or overflow.
    u64 diff[kMaxFieldLimbs];
    u64 borrow = 0;
    for (std::size_t j = 0; j < nw; ++j) {
        const u128 sub = u128(p_limbs_[j]) + borrow;
        const u128 cur = t[j];
        diff[j] = u64(cur - sub);
        borrow = cur < sub ? 1 : 0;
    }
    const u64 need = t[nw] | (borrow ^ 1);
    const u64 mask = ~u64(0) * (need != 0);  // 0 or all-ones, no branch
    for (std::size_t j = 0; j < nw; ++j) {
        out[j] = (diff[j] & mask) | (t[j] & ~mask);
    }
    for (std::size_t j = nw; j < kMaxFieldLimbs; ++j) out[j] = 0;
}

void FieldContext::add(Limbs& out, const Limbs& a, const Limbs& b) const {
    const std::size_t nw = nw_;
    u64 sum[kMaxFieldLimbs];
    u64 carry = 0;
    for (std::size_t j = 0; j < nw; ++j) {
        const u128 s = u128(a[j]) + b[j] + carry;
        sum[j] = u64(s);
        carry = u64(s >> 64);
    }
    u64 diff[kMaxFieldLimbs];
    u64 borrow = 0;
    for (std::size_t j = 0; j < nw; ++j) {
        const u128 sub = u128(p_limbs_[j]) + borrow;
        const u128 cur = sum[j];
        diff[j] = u64(cur - sub);
        borrow = cur < sub ? 1 : 0;
    }
    const u64 need = carry | (borrow ^ 1);
    const u64 mask = ~u64(0) * (need != 0);
    for (std::size_t j = 0; j < nw; ++j) out[j] = (diff[j] & mask) | (sum[j] & ~mask);
    for (std::size_t j = nw; j < kMaxFieldLimbs; ++j) out[j] = 0;
}

void FieldContext::sub(Limbs& out, const Limbs& a, const Limbs& b) const {
    const std::size_t nw = nw_;
    u64 diff[kMaxFieldLimbs];
    u64 borrow = 0;
    for (std::size_t j = 0; j < nw; ++j) {
        const u128 sub_ = u128(b[j]) + borrow;
        const u128 cur = a[j];
        diff[j] = u64(cur - sub_);
        borrow = cur < sub_ ? 1 : 0;
    }
    // Add p back iff the subtraction borrowed.
    const u64 mask = ~u64(0) * (borrow != 0);
    u64 carry = 0;
    for (std::size_t j = 0; j < nw; ++j) {
        const u128 s = u128(diff[j]) + (p_limbs_[j] & mask) + carry;
        out[j] = u64(s);
        carry = u64(s >> 64);
    }
    for (std::size_t j = nw; j < kMaxFieldLimbs; ++j) out[j] = 0;
}

void FieldContext::neg(Limbs& out, const Limbs& a) const {
    // p - a, then zero iff a was zero: (p - 0) mod p must be 0.
    const std::size_t nw = nw_;
    u64 acc = 0;
    for (std::size_t j = 0; j < nw; ++j) acc |= a[j];
    const u64 keep = ~u64(0) * (acc != 0);  // all-ones iff a != 0
    u64 borrow = 0;
    for (std::size_t j = 0; j < nw; ++j) {
        const u128 sub_ = u128(a[j]) + borrow;
        const u128 cur = p_limbs_[j];
        out[j] = u64(cur - sub_) & keep;
        borrow = cur < sub_ ? 1 : 0;
    }
    for (std::size_t j = nw; j < kMaxFieldLimbs; ++j) out[j] = 0;
}

FieldElement FieldContext::zero() const {
    FieldElement e;
    e.ctx_ = shared_from_this();
    return e;
}

FieldElement FieldContext::one() const {
    FieldElement e;
    e.ctx_ = shared_from_this();
    e.v_ = mont_one_;
    return e;
}

FieldElement FieldContext::from_biguint(const BigUint& v) const {
    const BigUint reduced = v % p_;
    FieldElement e;
    e.ctx_ = shared_from_this();
    Limbs raw{};
    for (std::size_t i = 0; i < nw_; ++i) raw[i] = reduced.limb(i);
    mont_mul(e.v_, raw, r2_);  // into Montgomery form
    return e;
}

FieldElement FieldContext::decode(ByteView bytes) const {
    if (bytes.size() != bytes_)
        throw DecodeError("field element has wrong encoded length");
    const BigUint v = BigUint::from_bytes_be(bytes);
    if (v >= p_) throw DecodeError("field element encoding is >= the modulus");
    return from_biguint(v);
}

const FieldContext& FieldElement::checked_ctx(const FieldElement& other) const {
    if (!ctx_ || !other.ctx_) throw DomainError("uninitialized field element");
    if (!ctx_->same_field(*other.ctx_))
        throw DomainError("field elements belong to different moduli");
    return *ctx_;
}

BigUint FieldElement::to_biguint() const {
    if (!ctx_) throw DomainError("uninitialized field element");
    Limbs one{};
    one[0] = 1;
    Limbs value;
    ctx_->mont_mul(value, v_, one);  // out of Montgomery form
    const std::size_t nw = ctx_->nw_;
    Bytes be(nw * 8);
    for (std::size_t i = 0; i < nw; ++i) {
        for (int b = 0; b < 8; ++b)
            be[be.size() - 1 - (8 * i + b)] = std::uint8_t(value[i] >> (8 * b));
    }
    return BigUint::from_bytes_be(be);
}

Bytes FieldElement::encode() const {
    return to_biguint().to_bytes_be(ctx_->byte_width());
}

bool FieldElement::is_zero() const {
    for (u64 limb : v_)
        if (limb) return false;
    return true;
}

std::uint64_t FieldElement::ct_is_zero_mask() const {
    u64 acc = 0;
    for (u64 limb : v_) acc |= limb;
    return ~u64(0) * (acc == 0);
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const FieldContext& ctx = checked_ctx(rhs);
    FieldElement r;
    r.ctx_ = ctx_;
    ctx.add(r.v_, v_, rhs.v_);
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    const FieldContext& ctx = checked_ctx(rhs);
    FieldElement r;
    r.ctx_ = ctx_;
    ctx.sub(r.v_, v_, rhs.v_);
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const FieldContext& ctx = checked_ctx(rhs);
    FieldElement r;
    r.ctx_ = ctx_;
    ctx.mont_mul(r.v_, v_, rhs.v_);
    return r;
}

FieldElement FieldElement::operator-() const {
    if (!ctx_) throw DomainError("uninitialized field element");
    FieldElement r;
    r.ctx_ = ctx_;
    ctx_->neg(r.v_, v_);
    return r;
}

FieldElement FieldElement::mul_small(std::uint64_t k) const {
    if (!ctx_) throw DomainError("uninitialized field element");
    // Repeated doubling keeps this exact for any k without a second
    // Montgomery conversion; k is tiny (curve constants), so this is cheap.
    FieldElement acc = ctx_->zero();
    FieldElement base = *this;
    while (k) {
        if (k & 1) acc = acc + base;
        base = base + base;
        k >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inv() const {
    if (!ctx_) throw DomainError("uninitialized field element");
    if (is_zero()) throw DivisionByZero();
    // Fermat: a^(p-2); exponent is public.
    const BigUint e = ctx_->modulus() - BigUint(2);
    FieldElement result = ctx_->one();
    FieldElement base = *this;
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = result.square();
        if (e.bit(i)) result = result * base;
    }
    return result;
}

std::optional<FieldElement> FieldElement::sqrt() const {
    if (!ctx_) throw DomainError("uninitialized field element");
    const auto root = sqrt_mod_p(to_biguint(), ctx_->modulus());
    if (!root) return std::nullopt;
    return ctx_->from_biguint(*root);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    const FieldContext& ctx = checked_ctx(rhs);
    (void)ctx;
    return v_ == rhs.v_;
}

FieldElement FieldElement::ct_select(std::uint64_t mask, const FieldElement& if_set,
                                     const FieldElement& if_clear) {
    FieldElement r;
    r.ctx_ = if_set.ctx_;
    for (std::size_t i = 0; i < kMaxFieldLimbs; ++i)
        r.v_[i] = (if_set.v_[i] & mask) | (if_clear.v_[i] & ~mask);
    return r;
}

void FieldElement::ct_swap(std::uint64_t mask, FieldElement& a, FieldElement& b) {
    for (std::size_t i = 0; i < kMaxFieldLimbs; ++i) {
        const u64 d = (a.v_[i] ^ b.v_[i]) & mask;
        a.v_[i] ^= d;
        b.v_[i] ^= d;
    }
}

}  // namespace frog
