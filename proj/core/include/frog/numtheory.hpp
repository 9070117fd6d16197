#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frog/biguint.hpp"

namespace frog {

// base^exponent mod modulus. Square-and-multiply with exact reduction; works
// for any modulus >= 2 (throws DomainError below that).
BigUint mod_pow(const BigUint& base, const BigUint& exponent, const BigUint& modulus);

// Modular inverse via extended Euclid; empty when gcd(a, modulus) != 1.
std::optional<BigUint> mod_inv(const BigUint& a, const BigUint& modulus);

BigUint gcd(BigUint a, BigUint b);

// Jacobi symbol (a / n) for odd n >= 1; throws DomainError for even n.
int jacobi(const BigUint& a, const BigUint& n);

// Square root mod an odd prime p (general Tonelli-Shanks, all residue class
// structures). Returns the canonical root min(r, p - r); empty for
// non-residues. Throws DomainError when p is even or < 3.
std::optional<BigUint> sqrt_mod_p(const BigUint& a, const BigUint& p);

// Baillie-PSW (MR base 2 + strong Lucas, Selfridge parameters) followed by
// mr_rounds Miller-Rabin rounds with bases expanded deterministically from n
// by hash-counter, so repeated runs agree bit for bit.
bool is_probable_prime(const BigUint& n, unsigned mr_rounds = 64);

// floor(sqrt(n)), exact.
BigUint isqrt(const BigUint& n);

// Smallest d <= bound with d_abs = d * s^2 for integer s; empty if none.
// The minimal such d is automatically square-free.
std::optional<BigUint> squarefree_part_below(const BigUint& d_abs, std::uint64_t bound);

struct TrialDivision {
    std::vector<std::pair<std::uint64_t, unsigned>> factors;  // (prime, multiplicity)
    BigUint cofactor;                                         // no prime factor <= bound
};

// Remove all prime factors <= bound from n (n >= 1, bound >= 2).
TrialDivision trial_divide(const BigUint& n, std::uint64_t bound);

}  // namespace frog
