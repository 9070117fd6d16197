#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frog/bytes.hpp"

namespace frog {

struct BigUintDivRem;

// Arbitrary-precision non-negative integer. Little-endian 64-bit limbs,
// canonical form (no trailing zero limbs; zero is the empty limb vector).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) { if (v) limbs_.push_back(v); }  // NOLINT: implicit by design

    static BigUint from_decimal(std::string_view s);  // throws std::invalid_argument
    static BigUint from_hex(std::string_view s);      // throws std::invalid_argument
    static BigUint from_bytes_be(ByteView bytes);
    static BigUint pow2(std::size_t k);

    std::string to_decimal() const;
    std::string to_hex() const;
    Bytes to_bytes_be() const;                   // minimal length; zero -> empty
    Bytes to_bytes_be(std::size_t width) const;  // fixed width; throws DomainError if too wide

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    std::size_t limb_count() const { return limbs_.size(); }
    std::uint64_t limb(std::size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }

    // Value must fit in 64 bits; throws DomainError otherwise.
    std::uint64_t to_u64() const;
    bool fits_u64() const { return limbs_.size() <= 1; }

    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) = default;

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b);  // throws DomainError on underflow
    friend BigUint operator*(const BigUint& a, const BigUint& b);
    friend BigUint operator/(const BigUint& a, const BigUint& b);  // throws DivisionByZero
    friend BigUint operator%(const BigUint& a, const BigUint& b);  // throws DivisionByZero
    friend BigUint operator<<(const BigUint& a, std::size_t k);
    friend BigUint operator>>(const BigUint& a, std::size_t k);

    BigUint& operator+=(const BigUint& b) { return *this = *this + b; }
    BigUint& operator-=(const BigUint& b) { return *this = *this - b; }
    BigUint& operator*=(const BigUint& b) { return *this = *this * b; }

    using DivRem = BigUintDivRem;
    static DivRem divrem(const BigUint& num, const BigUint& den);  // throws DivisionByZero

    // Single-limb fast paths (used by trial division and radix conversion).
    static DivRem divrem_u64(const BigUint& num, std::uint64_t den);
    std::uint64_t mod_u64(std::uint64_t den) const;

    BigUint mul_u64(std::uint64_t m) const;
    BigUint add_u64(std::uint64_t v) const;
    BigUint sub_u64(std::uint64_t v) const;  // throws DomainError on underflow

private:
    std::vector<std::uint64_t> limbs_;

    void trim();
    static BigUint from_limbs(std::vector<std::uint64_t> limbs);
    friend class FieldContext;
};

struct BigUintDivRem {
    BigUint quot;
    BigUint rem;
};

}  // namespace frog
