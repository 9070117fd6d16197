#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "frog/biguint.hpp"

namespace frog {

// Signed magnitude integer; just enough for curve coefficients, traces and
// CM discriminants. Canonical: zero is never negative.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT: implicit by design
    BigInt(BigUint magnitude, bool negative = false);

    static BigInt from_decimal(std::string_view s);  // optional leading '-'

    const BigUint& magnitude() const { return mag_; }
    bool is_negative() const { return neg_; }
    bool is_zero() const { return mag_.is_zero(); }
    std::string to_decimal() const;

    BigInt operator-() const { return BigInt(mag_, !neg_); }
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    // Canonical residue in [0, m): throws DomainError if m < 2.
    BigUint mod(const BigUint& m) const;

private:
    BigUint mag_;
    bool neg_ = false;
};

inline BigInt to_signed(const BigUint& u) { return BigInt(u, false); }

// a - b as a signed value, for unsigned operands.
BigInt signed_diff(const BigUint& a, const BigUint& b);

}  // namespace frog
