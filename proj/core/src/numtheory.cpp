#include "frog/numtheory.hpp"

#include <array>

#include "frog/bigint.hpp"
#include "frog/blake3.hpp"
#include "frog/errors.hpp"

namespace frog {

namespace {

const BigUint kOne(1);
const BigUint kTwo(2);

BigUint mod_mul(const BigUint& a, const BigUint& b, const BigUint& m) {
    return (a * b) % m;
}

// Primes below 1024; covers exact classification of every n < 1021^2.
constexpr std::array<std::uint16_t, 172> kSmallPrimes = {
    2,    3,    5,    7,    11,   13,   17,   19,   23,   29,   31,   37,   41,   43,
    47,   53,   59,   61,   67,   71,   73,   79,   83,   89,   97,   101,  103,  107,
    109,  113,  127,  131,  137,  139,  149,  151,  157,  163,  167,  173,  179,  181,
    191,  193,  197,  199,  211,  223,  227,  229,  233,  239,  241,  251,  257,  263,
    269,  271,  277,  281,  283,  293,  307,  311,  313,  317,  331,  337,  347,  349,
    353,  359,  367,  373,  379,  383,  389,  397,  401,  409,  419,  421,  431,  433,
    439,  443,  449,  457,  461,  463,  467,  479,  487,  491,  499,  503,  509,  521,
    523,  541,  547,  557,  563,  569,  571,  577,  587,  593,  599,  601,  607,  613,
    617,  619,  631,  641,  643,  647,  653,  659,  661,  673,  677,  683,  691,  701,
    709,  719,  727,  733,  739,  743,  751,  757,  761,  769,  773,  787,  797,  809,
    811,  821,  823,  827,  829,  839,  853,  857,  859,  863,  877,  881,  883,  887,
    907,  911,  919,  929,  937,  941,  947,  953,  967,  971,  977,  983,  991,  997,
    1009, 1013, 1019, 1021};

// One Miller-Rabin round; true means "probably prime for this base".
bool miller_rabin_round(const BigUint& n, const BigUint& base,
                        const BigUint& d, std::size_t s) {
    BigUint x = mod_pow(base, d, n);
    const BigUint n_minus_1 = n - kOne;
    if (x == kOne || x == n_minus_1) return true;
    for (std::size_t i = 1; i < s; ++i) {
        x = mod_mul(x, x, n);
        if (x == n_minus_1) return true;
        if (x == kOne) return false;
    }
    return false;
}

// Deterministic base for round `round`: hash-counter expansion of n.
BigUint deterministic_mr_base(const BigUint& n, std::uint64_t round) {
    Bytes input = n.to_bytes_be();
    for (int i = 7; i >= 0; --i) input.push_back(std::uint8_t(round >> (8 * i)));
    const Bytes digest = blake3_hash(input, input.size() + 16);
    // n >= 5 here, so n-3 >= 2 and base lands in [2, n-2].
    return BigUint::from_bytes_be(digest) % (n - BigUint(3)) + kTwo;
}

BigUint half_mod(const BigUint& x, const BigUint& n) {
    return x.is_odd() ? (x + n) >> 1 : x >> 1;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice
// (P = 1, first D in 5, -7, 9, -11, ... with (D/n) = -1).
bool strong_lucas_round(const BigUint& n) {
    BigInt d_signed(5);
    for (int attempt = 0;; ++attempt) {
        const int j = jacobi(d_signed.mod(n), n);
        if (j == -1) break;
        if (j == 0) return false;  // |D| < n here, so gcd(D, n) is a proper factor
        if (attempt == 5) {
            const BigUint r = isqrt(n);
            if (r * r == n) return false;  // squares admit no D with (D/n) = -1
        }
        d_signed = d_signed.is_negative() ? BigInt(d_signed.magnitude() + kTwo, false)
                                          : BigInt(d_signed.magnitude() + kTwo, true);
    }
    const BigUint d_mod = d_signed.mod(n);
    // Q = (1 - D) / 4; D = 1 (mod 4) by construction so this is exact.
    const BigInt q_signed = BigInt(1) - d_signed;
    const BigUint q_mod =
        BigInt(q_signed.magnitude() / BigUint(4), q_signed.is_negative()).mod(n);

    // n + 1 = t * 2^s, t odd
    BigUint t = n + kOne;
    std::size_t s = 0;
    while (!t.is_odd()) {
        t = t >> 1;
        ++s;
    }

    // Left-to-right binary chain for U_t, V_t, Q^t (P = 1).
    BigUint u = kOne, v = kOne, qk = q_mod;  // U_1, V_1, Q^1
    for (std::size_t i = t.bit_length() - 1; i-- > 0;) {
        // double: k -> 2k
        u = mod_mul(u, v, n);
        v = mod_mul(v, v, n);
        v = ((v + n + n) - (qk + qk)) % n;  // V^2 - 2Q^k
        qk = mod_mul(qk, qk, n);
        if (t.bit(i)) {
            // increment: 2k -> 2k+1 (P = 1)
            const BigUint u_next = half_mod((u + v) % n, n);
            const BigUint v_next = half_mod((mod_mul(d_mod, u, n) + v) % n, n);
            u = u_next;
            v = v_next;
            qk = mod_mul(qk, q_mod, n);
        }
    }

    if (u.is_zero() || v.is_zero()) return true;
    // V_{t*2^r} for r = 1 .. s-1
    for (std::size_t r = 1; r < s; ++r) {
        v = mod_mul(v, v, n);
        v = ((v + n + n) - (qk + qk)) % n;
        qk = mod_mul(qk, qk, n);
        if (v.is_zero()) return true;
    }
    return false;
}

}  // namespace

BigUint mod_pow(const BigUint& base, const BigUint& exponent, const BigUint& modulus) {
    if (modulus < kTwo) throw DomainError("mod_pow requires modulus >= 2");
    BigUint b = base % modulus;
    BigUint result = kOne % modulus;
    if (exponent.is_zero()) return result;
    for (std::size_t i = exponent.bit_length(); i-- > 0;) {
        result = mod_mul(result, result, modulus);
        if (exponent.bit(i)) result = mod_mul(result, b, modulus);
    }
    return result;
}

std::optional<BigUint> mod_inv(const BigUint& a, const BigUint& modulus) {
    if (modulus < kTwo) throw DomainError("mod_inv requires modulus >= 2");
    BigInt old_r = to_signed(a % modulus), r = to_signed(modulus);
    BigInt old_s(1), s(0);
    while (!r.is_zero()) {
        const BigUint q = old_r.magnitude() / r.magnitude();  // both non-negative here
        BigInt tmp_r = old_r - BigInt(q, false) * r;
        old_r = r;
        r = tmp_r;
        BigInt tmp_s = old_s - BigInt(q, false) * s;
        old_s = s;
        s = tmp_s;
    }
    if (old_r != BigInt(1)) return std::nullopt;
    return old_s.mod(modulus);
}

BigUint gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int jacobi(const BigUint& a_in, const BigUint& n_in) {
    if (!n_in.is_odd()) throw DomainError("jacobi requires odd n");
    BigUint a = a_in % n_in;
    BigUint n = n_in;
    int result = 1;
    while (!a.is_zero()) {
        while (!a.is_odd()) {
            a = a >> 1;
            const std::uint64_t r = n.mod_u64(8);
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a.mod_u64(4) == 3 && n.mod_u64(4) == 3) result = -result;
        a = a % n;
    }
    return n.is_one() ? result : 0;
}

std::optional<BigUint> sqrt_mod_p(const BigUint& a_in, const BigUint& p) {
    if (!p.is_odd() || p < BigUint(3)) throw DomainError("sqrt_mod_p requires an odd prime p >= 3");
    const BigUint a = a_in % p;
    if (a.is_zero()) return BigUint{};
    if (jacobi(a, p) != 1) return std::nullopt;

    // p - 1 = q * 2^s with q odd
    BigUint q = p - kOne;
    std::size_t s = 0;
    while (!q.is_odd()) {
        q = q >> 1;
        ++s;
    }
    // Smallest quadratic non-residue as the generator. The scan is bounded
    // so a composite modulus (possible in validation of broken parameter
    // sets) cannot spin here; for genuine primes the first non-residue is
    // tiny.
    BigUint z = kTwo;
    for (std::uint64_t tries = 0; jacobi(z, p) != -1; ++tries) {
        if (tries > 100000)
            throw DomainError("no quadratic non-residue found; p is not prime");
        z = z + kOne;
    }

    std::size_t m = s;
    BigUint c = mod_pow(z, q, p);
    BigUint t = mod_pow(a, q, p);
    BigUint r = mod_pow(a, (q + kOne) >> 1, p);
    while (!t.is_one()) {
        // Least i with t^(2^i) = 1; i < m for prime p. Hitting m means the
        // 2-group structure is inconsistent, i.e. p is composite.
        std::size_t i = 0;
        BigUint t2 = t;
        while (!t2.is_one()) {
            t2 = mod_mul(t2, t2, p);
            if (++i >= m) return std::nullopt;
        }
        BigUint b = c;
        for (std::size_t k = 0; k + i + 1 < m; ++k) b = mod_mul(b, b, p);
        m = i;
        c = mod_mul(b, b, p);
        t = mod_mul(t, c, p);
        r = mod_mul(r, b, p);
    }
    const BigUint other = p - r;
    return r <= other ? r : other;
}

bool is_probable_prime(const BigUint& n, unsigned mr_rounds) {
    if (n < kTwo) return false;
    for (std::uint64_t sp : kSmallPrimes) {
        if (n == BigUint(sp)) return true;
        if (n.mod_u64(sp) == 0) return false;
    }
    if (n < BigUint(1021ull * 1021ull)) return true;  // fully sieved above

    // n - 1 = d * 2^s
    BigUint d = n - kOne;
    std::size_t s = 0;
    while (!d.is_odd()) {
        d = d >> 1;
        ++s;
    }

    if (!miller_rabin_round(n, kTwo, d, s)) return false;
    if (!strong_lucas_round(n)) return false;
    for (unsigned round = 0; round < mr_rounds; ++round) {
        if (!miller_rabin_round(n, deterministic_mr_base(n, round), d, s)) return false;
    }
    return true;
}

BigUint isqrt(const BigUint& n) {
    if (n < kTwo) return n;
    BigUint x = BigUint::pow2((n.bit_length() + 1) / 2);
    while (true) {
        BigUint y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

std::optional<BigUint> squarefree_part_below(const BigUint& d_abs, std::uint64_t bound) {
    if (d_abs.is_zero()) throw DomainError("squarefree_part_below requires d_abs >= 1");
    for (std::uint64_t d = 1; d <= bound; ++d) {
        if (d_abs.mod_u64(d) != 0) continue;
        const BigUint quotient = BigUint::divrem_u64(d_abs, d).quot;
        const BigUint root = isqrt(quotient);
        if (root * root == quotient) return BigUint(d);
    }
    return std::nullopt;
}

TrialDivision trial_divide(const BigUint& n, std::uint64_t bound) {
    if (n.is_zero()) throw DomainError("trial_divide requires n >= 1");
    if (bound < 2) throw DomainError("trial_divide requires bound >= 2");
    TrialDivision result;
    result.cofactor = n;
    auto extract = [&](std::uint64_t d) {
        unsigned mult = 0;
        while (result.cofactor.mod_u64(d) == 0) {
            result.cofactor = BigUint::divrem_u64(result.cofactor, d).quot;
            ++mult;
        }
        if (mult) result.factors.emplace_back(d, mult);
    };
    extract(2);
    for (std::uint64_t d = 3; d <= bound && result.cofactor > kOne; d += 2) extract(d);
    return result;
}

}  // namespace frog
