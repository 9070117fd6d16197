#include "frog/bigint.hpp"

#include <stdexcept>

#include "frog/errors.hpp"

namespace frog {

BigInt::BigInt(std::int64_t v)
    : mag_(v < 0 ? BigUint(std::uint64_t(-(v + 1)) + 1) : BigUint(std::uint64_t(v))),
      neg_(v < 0) {}

BigInt::BigInt(BigUint magnitude, bool negative)
    : mag_(std::move(magnitude)), neg_(negative && !mag_.is_zero()) {}

BigInt BigInt::from_decimal(std::string_view s) {
    if (!s.empty() && s[0] == '-')
        return BigInt(BigUint::from_decimal(s.substr(1)), true);
    return BigInt(BigUint::from_decimal(s), false);
}

std::string BigInt::to_decimal() const {
    return neg_ ? "-" + mag_.to_decimal() : mag_.to_decimal();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.neg_ == b.neg_) return BigInt(a.mag_ + b.mag_, a.neg_);
    if (a.mag_ >= b.mag_) return BigInt(a.mag_ - b.mag_, a.neg_);
    return BigInt(b.mag_ - a.mag_, b.neg_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    return BigInt(a.mag_ * b.mag_, a.neg_ != b.neg_);
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = a.mag_ <=> b.mag_;
    return a.neg_ ? 0 <=> c : c;
}

BigUint BigInt::mod(const BigUint& m) const {
    if (m < BigUint(2)) throw DomainError("modulus must be >= 2");
    BigUint r = mag_ % m;
    if (neg_ && !r.is_zero()) r = m - r;
    return r;
}

BigInt signed_diff(const BigUint& a, const BigUint& b) {
    if (a >= b) return BigInt(a - b, false);
    return BigInt(b - a, true);
}

}  // namespace frog
