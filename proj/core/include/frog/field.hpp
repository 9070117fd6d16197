#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>

#include "frog/biguint.hpp"

namespace frog {

// Fixed inline limb storage: moduli up to 1024 bits, allocation-free
// elements, fixed-width loops for the constant-time paths.
inline constexpr std::size_t kMaxFieldLimbs = 16;

class FieldElement;

// Shared per-modulus context: Montgomery constants, limb/byte widths.
// Immutable after construction.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    // p must be odd and >= 3 (throws DomainError otherwise; primality is the
    // caller's concern).
    static std::shared_ptr<const FieldContext> create(const BigUint& p);

    const BigUint& modulus() const { return p_; }
    std::size_t limb_count() const { return nw_; }
    std::size_t byte_width() const { return bytes_; }  // ceil(bits(p)/8)

    FieldElement zero() const;
    FieldElement one() const;
    // Reduces v mod p.
    FieldElement from_biguint(const BigUint& v) const;
    // Strict decode of a byte_width()-byte big-endian encoding; rejects
    // wrong length and values >= p with DecodeError.
    FieldElement decode(ByteView bytes) const;

    bool same_field(const FieldContext& other) const;

private:
    friend class FieldElement;
    FieldContext() = default;

    using Limbs = std::array<std::uint64_t, kMaxFieldLimbs>;

    BigUint p_;
    std::size_t nw_ = 0;
    std::size_t bytes_ = 0;
    std::uint64_t n0inv_ = 0;  // -p^{-1} mod 2^64
    Limbs p_limbs_{};
    Limbs r2_{};       // R^2 mod p
    Limbs mont_one_{}; // R mod p

    void mont_mul(Limbs& out, const Limbs& a, const Limbs& b) const;
    void add(Limbs& out, const Limbs& a, const Limbs& b) const;
    void sub(Limbs& out, const Limbs& a, const Limbs& b) const;
    void neg(Limbs& out, const Limbs& a) const;
};

using FieldCtxPtr = std::shared_ptr<const FieldContext>;

// Element of F_p in Montgomery form. Value semantics; all arithmetic is
// exact and lands in canonical range. Mixing fields throws DomainError.
class FieldElement {
public:
    FieldElement() = default;  // unusable until assigned from a context

    BigUint to_biguint() const;
    Bytes encode() const;  // byte_width() big-endian bytes

    bool is_zero() const;
    const FieldCtxPtr& context() const { return ctx_; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement square() const { return *this * *this; }
    FieldElement mul_small(std::uint64_t k) const;  // k in [0, 2^32)

    // Fermat inverse; throws DivisionByZero for zero.
    FieldElement inv() const;
    // Canonical square root min(r, p-r); empty for non-residues.
    std::optional<FieldElement> sqrt() const;

    bool operator==(const FieldElement& rhs) const;

    // Branch-free select/swap keyed on mask (0 or ~0). Both elements must
    // share a context; no secret-dependent branching or indexing.
    static FieldElement ct_select(std::uint64_t mask, const FieldElement& if_set,
                                  const FieldElement& if_clear);
    static void ct_swap(std::uint64_t mask, FieldElement& a, FieldElement& b);
    // 0 or ~0 without data-dependent branches.
    std::uint64_t ct_is_zero_mask() const;

private:
    friend class FieldContext;
    FieldCtxPtr ctx_;
    FieldContext::Limbs v_{};  // Montgomery form

    const FieldContext& checked_ctx(const FieldElement& other) const;
};

}  // namespace frog
