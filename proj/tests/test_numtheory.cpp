#include <doctest.h>

#include "frog/errors.hpp"
#include "frog/numtheory.hpp"
#include "frog/params.hpp"
#include "frog/rng.hpp"
#include "frozen_vectors.hpp"
#include "testsupport.hpp"

using frog::BigUint;

TEST_CASE("mod_pow basics") {
    CHECK(frog::mod_pow(BigUint(12345), BigUint{}, BigUint(77)) == BigUint(1));
    CHECK(frog::mod_pow(BigUint(2), BigUint(10), BigUint(1000)) == BigUint(24));
    CHECK_THROWS_AS((void)frog::mod_pow(BigUint(2), BigUint(2), BigUint(1)),
                    frog::DomainError);

    // Fermat on the published modulus.
    const auto& p = frog::ParamRegistry::builtin().get("ECCFROG522PP")->params().p;
    CHECK(frog::mod_pow(BigUint(2), p - BigUint(1), p) == BigUint(1));

    // agreement with the u64 oracle on random small inputs
    frog::DeterministicRng rng(21);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t b = testsupport::random_biguint(rng, 30).to_u64();
        const std::uint64_t e = testsupport::random_biguint(rng, 20).to_u64();
        const std::uint64_t m = testsupport::random_biguint(rng, 31).to_u64() | 2;
        CHECK(frog::mod_pow(BigUint(b), BigUint(e), BigUint(m)).to_u64() ==
              testsupport::powmod(b, e, m));
    }
}

TEST_CASE("mod_inv") {
    CHECK(frog::mod_inv(BigUint(1), BigUint(17)) == BigUint(1));
    // exhaustive oracle over Z_7
    for (std::uint64_t x = 1; x < 7; ++x) {
        std::uint64_t want = 0;
        for (std::uint64_t y = 1; y < 7; ++y)
            if (x * y % 7 == 1) want = y;
        CHECK(frog::mod_inv(BigUint(x), BigUint(7)) == BigUint(want));
    }
    CHECK(frog::mod_inv(BigUint(3), BigUint(7)) == BigUint(5));
    CHECK(!frog::mod_inv(BigUint(2), BigUint(4)).has_value());
    CHECK(!frog::mod_inv(BigUint{}, BigUint(5)).has_value());

    frog::DeterministicRng rng(22);
    const auto& n = frog::ParamRegistry::builtin().get("ECCFROG522PP")->params().n;
    for (int i = 0; i < 50; ++i) {
        const BigUint a = testsupport::random_biguint(rng, 300);
        const auto inv = frog::mod_inv(a, n);  // n prime, a < n
        REQUIRE(inv.has_value());
        CHECK((a * *inv) % n == BigUint(1));
    }

    // composite moduli: inverse exists exactly when gcd(a, m) = 1
    for (int i = 0; i < 100; ++i) {
        const BigUint m = testsupport::random_biguint(rng, 2 + (i * 7) % 250) + BigUint(2);
        const BigUint a = testsupport::random_biguint(rng, 1 + (i * 11) % 250);
        const auto inv = frog::mod_inv(a, m);
        if (frog::gcd(a, m).is_one()) {
            REQUIRE(inv.has_value());
            CHECK((a * *inv) % m == BigUint(1) % m);
        } else {
            CHECK(!inv.has_value());
        }
    }
}

TEST_CASE("sqrt_mod_p: exhaustive residue tables and canonical root") {
    CHECK(frog::sqrt_mod_p(BigUint{}, BigUint(7)) == BigUint{});
    CHECK(frog::sqrt_mod_p(BigUint(4), BigUint(7)) == BigUint(2));
    CHECK(!frog::sqrt_mod_p(BigUint(3), BigUint(7)).has_value());
    CHECK_THROWS_AS((void)frog::sqrt_mod_p(BigUint(1), BigUint(8)), frog::DomainError);

    // p = 97 (1 mod 4), p = 41 (1 mod 8), p = 7 (3 mod 4): all structures.
    for (std::uint64_t p : {7ull, 41ull, 97ull, 457ull}) {
        std::vector<bool> residue(p, false);
        for (std::uint64_t y = 0; y < p; ++y) residue[y * y % p] = true;
        for (std::uint64_t a = 0; a < p; ++a) {
            const auto root = frog::sqrt_mod_p(BigUint(a), BigUint(p));
            CHECK(root.has_value() == residue[a]);
            if (root) {
                const std::uint64_t r = root->to_u64();
                CHECK(r * r % p == a);
                CHECK(r <= p - r);  // canonical choice
            }
        }
    }

    // published field: root of gy^2 must come back as min(gy, p-gy)
    const auto& params = frog::ParamRegistry::builtin().get("ECCFROG522PP")->params();
    const BigUint gy2 = params.gy * params.gy % params.p;
    const auto root = frog::sqrt_mod_p(gy2, params.p);
    REQUIRE(root.has_value());
    const BigUint other = params.p - params.gy;
    CHECK((*root == params.gy || *root == other));
    CHECK(*root == (params.gy < other ? params.gy : other));
}

TEST_CASE("is_probable_prime agrees with the sieve below 10^6") {
    const auto sieve = testsupport::prime_sieve(1'000'000);
    for (std::uint64_t n = 0; n < 1'000'000; ++n) {
        if (frog::is_probable_prime(BigUint(n), 2) != sieve[n]) {
            CAPTURE(n);
            CHECK(false);
        }
    }
    CHECK(true);
}

TEST_CASE("is_probable_prime on known composites and published primes") {
    CHECK(!frog::is_probable_prime(BigUint(1)));
    // strong pseudoprime to bases 2..7 and a large Carmichael number
    CHECK(!frog::is_probable_prime(BigUint(3215031751ull)));
    CHECK(!frog::is_probable_prime(BigUint(3825123056546413051ull)));
    CHECK(frog::is_probable_prime(BigUint(18446744073709551557ull)));  // largest u64 prime

    const auto& params = frog::ParamRegistry::builtin().get("ECCFROG522PP")->params();
    CHECK(frog::is_probable_prime(params.p));
    CHECK(frog::is_probable_prime(params.n));
    CHECK(!frog::is_probable_prime(params.p * BigUint(2)));
    CHECK(!frog::is_probable_prime(params.p * params.n));
}

TEST_CASE("isqrt") {
    CHECK(frog::isqrt(BigUint{}).is_zero());
    CHECK(frog::isqrt(BigUint(15)) == BigUint(3));
    CHECK(frog::isqrt(BigUint(16)) == BigUint(4));
    frog::DeterministicRng rng(23);
    for (int i = 0; i < 300; ++i) {
        const BigUint n = testsupport::random_biguint(rng, 1 + (i * 17) % 1024);
        const BigUint r = frog::isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + BigUint(1)) * (r + BigUint(1)) > n);
    }
    const auto& p = frog::ParamRegistry::builtin().get("ECCFROG522PP")->params().p;
    const BigUint r = frog::isqrt(p);
    CHECK(r * r <= p);
    CHECK((r + BigUint(1)) * (r + BigUint(1)) > p);
}

TEST_CASE("squarefree_part_below") {
    CHECK(frog::squarefree_part_below(BigUint(12), 100) == BigUint(3));
    CHECK(frog::squarefree_part_below(BigUint(4), 100) == BigUint(1));
    CHECK(frog::squarefree_part_below(BigUint(49), 100) == BigUint(1));
    CHECK(!frog::squarefree_part_below(BigUint(7), 2).has_value());
    // d * s^2 constructions are found exactly
    CHECK(frog::squarefree_part_below(BigUint(3) * BigUint(25), 100) == BigUint(3));
    CHECK(frog::squarefree_part_below(BigUint(5) * BigUint(144), 100) == BigUint(5));
    CHECK_THROWS_AS((void)frog::squarefree_part_below(BigUint{}, 10), frog::DomainError);
}

TEST_CASE("trial_divide") {
    const auto empty = frog::trial_divide(BigUint(1), 10);
    CHECK(empty.factors.empty());
    CHECK(empty.cofactor.is_one());

    const auto twelve = frog::trial_divide(BigUint(12), 10);
    REQUIRE(twelve.factors.size() == 2);
    CHECK(twelve.factors[0] == std::pair<std::uint64_t, unsigned>{2, 2});
    CHECK(twelve.factors[1] == std::pair<std::uint64_t, unsigned>{3, 1});
    CHECK(twelve.cofactor.is_one());

    frog::DeterministicRng rng(24);
    for (int i = 0; i < 100; ++i) {
        const BigUint n = testsupport::random_biguint(rng, 1 + (i * 3) % 200);
        const auto td = frog::trial_divide(n, 1000);
        BigUint product = td.cofactor;
        for (const auto& [prime, mult] : td.factors) {
            CHECK(prime <= 1000);
            for (unsigned e = 0; e < mult; ++e) product = product.mul_u64(prime);
        }
        CHECK(product == n);
        CHECK(td.cofactor.mod_u64(2) != 0);
    }
}

TEST_CASE("jacobi symbol matches Euler's criterion on primes") {
    for (std::uint64_t p : {7ull, 41ull, 97ull, 1021ull}) {
        for (std::uint64_t a = 0; a < p; ++a) {
            const int j = frog::jacobi(BigUint(a), BigUint(p));
            const std::uint64_t e = testsupport::powmod(a, (p - 1) / 2, p);
            const int want = a % p == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(j == want);
        }
    }
    CHECK_THROWS_AS((void)frog::jacobi(BigUint(3), BigUint(10)), frog::DomainError);
}
