#include "frog/biguint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "frog/errors.hpp"

namespace frog {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_limbs(std::vector<u64> limbs) {
    BigUint r;
    r.limbs_ = std::move(limbs);
    r.trim();
    return r;
}

BigUint BigUint::pow2(std::size_t k) {
    BigUint r;
    r.limbs_.assign(k / 64 + 1, 0);
    r.limbs_.back() = u64(1) << (k % 64);
    return r;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

bool BigUint::bit(std::size_t i) const {
    const std::size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1;
}

u64 BigUint::to_u64() const {
    if (limbs_.size() > 1) throw DomainError("BigUint does not fit in 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    std::vector<u64> r(x.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        u128 s = u128(x[i]) + (i < y.size() ? y[i] : 0) + carry;
        r[i] = u64(s);
        carry = u64(s >> 64);
    }
    r[x.size()] = carry;
    return BigUint::from_limbs(std::move(r));
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (a < b) throw DomainError("BigUint subtraction underflow");
    std::vector<u64> r(a.limbs_.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 x = u128(a.limbs_[i]);
        u128 y = u128(i < b.limbs_.size() ? b.limbs_[i] : 0) + borrow;
        r[i] = u64(x - y);
        borrow = x < y ? 1 : 0;
    }
    return BigUint::from_limbs(std::move(r));
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint{};
    std::vector<u64> r(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        const u64 ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 t = u128(ai) * b.limbs_[j] + r[i + j] + carry;
            r[i + j] = u64(t);
            carry = u64(t >> 64);
        }
        r[i + b.limbs_.size()] = carry;
    }
    return BigUint::from_limbs(std::move(r));
}

BigUint BigUint::mul_u64(u64 m) const {
    if (m == 0 || is_zero()) return BigUint{};
    std::vector<u64> r(limbs_.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 t = u128(limbs_[i]) * m + carry;
        r[i] = u64(t);
        carry = u64(t >> 64);
    }
    r[limbs_.size()] = carry;
    return from_limbs(std::move(r));
}

BigUint BigUint::add_u64(u64 v) const { return *this + BigUint(v); }

BigUint BigUint::sub_u64(u64 v) const { return *this - BigUint(v); }

BigUint operator<<(const BigUint& a, std::size_t k) {
    if (a.is_zero()) return BigUint{};
    const std::size_t words = k / 64, bits = k % 64;
    std::vector<u64> r(a.limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        r[i + words] |= bits ? (a.limbs_[i] << bits) : a.limbs_[i];
        if (bits) r[i + words + 1] |= a.limbs_[i] >> (64 - bits);
    }
    return BigUint::from_limbs(std::move(r));
}

BigUint operator>>(const BigUint& a, std::size_t k) {
    const std::size_t words = k / 64, bits = k % 64;
    if (words >= a.limbs_.size()) return BigUint{};
    std::vector<u64> r(a.limbs_.size() - words, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = a.limbs_[i + words] >> bits;
        if (bits && i + words + 1 < a.limbs_.size())
            r[i] |= a.limbs_[i + words + 1] << (64 - bits);
    }
    return BigUint::from_limbs(std::move(r));
}

// Knuth algorithm D with 64-bit limbs: normalized divisor, 128-bit trial
// quotient refined by the two-limb test, at most one add-back per step.
BigUint::DivRem BigUint::divrem(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num < den) return {BigUint{}, num};
    if (den.limbs_.size() == 1) {
        return divrem_u64(num, den.limbs_[0]);
    }

    // Normalize so the top divisor limb has its high bit set.
    const unsigned shift = std::countl_zero(den.limbs_.back());
    const BigUint u = num << shift;
    const BigUint v = den << shift;
    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() - n;

    std::vector<u64> un(u.limbs_);
    un.push_back(0);  // dividend gets m+n+1 limbs during the loop
    const std::vector<u64>& vn = v.limbs_;
    std::vector<u64> q(m + 1, 0);

    const u64 vtop = vn[n - 1];
    const u64 vsecond = vn[n - 2];
    constexpr u128 kBase = u128(1) << 64;

    for (std::size_t j = m + 1; j-- > 0;) {
        const u128 top = (u128(un[j + n]) << 64) | un[j + n - 1];
        u128 qhat = top / vtop;
        u128 rhat = top % vtop;
        while (qhat >= kBase ||
               u128(u64(qhat)) * vsecond > ((rhat << 64) | un[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        const u64 qh = u64(qhat);

        // un[j .. j+n] -= qh * vn
        u64 mul_carry = 0, borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const u128 prod = u128(qh) * vn[i] + mul_carry;
            mul_carry = u64(prod >> 64);
            const u128 sub = u128(u64(prod)) + borrow;
            const u128 cur = un[i + j];
            un[i + j] = u64(cur - sub);
            borrow = cur < sub ? 1 : 0;
        }
        const u128 sub_top = u128(mul_carry) + borrow;
        const u128 cur_top = un[j + n];
        un[j + n] = u64(cur_top - sub_top);
        const bool went_negative = cur_top < sub_top;

        if (went_negative) {
            // Trial quotient was one too large: add the divisor back.
            q[j] = qh - 1;
            u64 carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const u128 s = u128(un[i + j]) + vn[i] + carry;
                un[i + j] = u64(s);
                carry = u64(s >> 64);
            }
            un[j + n] += carry;
        } else {
            q[j] = qh;
        }
    }

    BigUint rem = from_limbs(std::vector<u64>(un.begin(), un.begin() + n));
    return {from_limbs(std::move(q)), rem >> shift};
}

BigUint::DivRem BigUint::divrem_u64(const BigUint& num, u64 den) {
    if (den == 0) throw DivisionByZero();
    std::vector<u64> q(num.limbs_.size(), 0);
    u64 rem = 0;
    for (std::size_t i = num.limbs_.size(); i-- > 0;) {
        u128 cur = (u128(rem) << 64) | num.limbs_[i];
        q[i] = u64(cur / den);
        rem = u64(cur % den);
    }
    return {from_limbs(std::move(q)), BigUint(rem)};
}

u64 BigUint::mod_u64(u64 den) const {
    if (den == 0) throw DivisionByZero();
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = u64(((u128(rem) << 64) | limbs_[i]) % den);
    }
    return rem;
}

BigUint operator/(const BigUint& a, const BigUint& b) { return BigUint::divrem(a, b).quot; }
BigUint operator%(const BigUint& a, const BigUint& b) { return BigUint::divrem(a, b).rem; }

BigUint BigUint::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    BigUint r;
    std::size_t i = 0;
    // Chunks of 19 digits fit in a u64 (10^19 < 2^64).
    while (i < s.size()) {
        const std::size_t take = std::min<std::size_t>(19, s.size() - i);
        u64 chunk = 0, scale = 1;
        for (std::size_t k = 0; k < take; ++k, ++i) {
            const char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal digit");
            chunk = chunk * 10 + u64(c - '0');
            scale *= 10;
        }
        r = r.mul_u64(scale).add_u64(chunk);
    }
    return r;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    constexpr u64 kChunk = 10'000'000'000'000'000'000ull;  // 10^19
    std::vector<u64> groups;
    BigUint n = *this;
    while (!n.is_zero()) {
        auto [q, r] = divrem_u64(n, kChunk);
        groups.push_back(r.is_zero() ? 0 : r.limbs_[0]);
        n = std::move(q);
    }
    std::string out = std::to_string(groups.back());
    char buf[20];
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(groups[i]));
        out += buf;
    }
    return out;
}

BigUint BigUint::from_hex(std::string_view s) {
    if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
    if (s.empty()) throw std::invalid_argument("empty hex string");
    BigUint r;
    for (char c : s) {
        u64 d;
        if (c >= '0' && c <= '9') d = u64(c - '0');
        else if (c >= 'a' && c <= 'f') d = u64(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') d = u64(c - 'A' + 10);
        else throw std::invalid_argument("invalid hex digit");
        r = (r << 4).add_u64(d);
    }
    return r;
}

std::string BigUint::to_hex() const {
    if (is_zero()) return "0";
    std::string out;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(limbs_.back()));
    out = buf;
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(limbs_[i]));
        out += buf;
    }
    return out;
}

BigUint BigUint::from_bytes_be(ByteView bytes) {
    std::vector<u64> limbs((bytes.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        const std::size_t bit = 8 * (bytes.size() - 1 - i);
        limbs[bit / 64] |= u64(bytes[i]) << (bit % 64);
    }
    return from_limbs(std::move(limbs));
}

Bytes BigUint::to_bytes_be() const {
    return to_bytes_be((bit_length() + 7) / 8);
}

Bytes BigUint::to_bytes_be(std::size_t width) const {
    if (bit_length() > 8 * width)
        throw DomainError("value does not fit in requested byte width");
    Bytes out(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        const std::size_t bit = 8 * (width - 1 - i);
        out[i] = std::uint8_t(limb(bit / 64) >> (bit % 64));
    }
    return out;
}

}  // namespace frog
