// Developer microbenchmarks for the arithmetic kernels. The product-facing
// throughput harness is `frogtool bench`; these exist to watch the inner
// loops while optimizing.

#include <benchmark/benchmark.h>

#include "frog/curve.hpp"
#include "frog/field.hpp"
#include "frog/numtheory.hpp"
#include "frog/params.hpp"
#include "frog/rng.hpp"

namespace {

const frog::CurvePtr& frog522() {
    static const frog::CurvePtr curve =
        frog::ParamRegistry::builtin().get("ECCFROG522PP");
    return curve;
}

frog::FieldElement random_element(frog::Rng& rng) {
    const auto field = frog522()->field();
    return field->from_biguint(frog::BigUint::from_bytes_be(rng.bytes(66)));
}

void BM_field_mul(benchmark::State& state) {
    frog::DeterministicRng rng(1);
    const frog::FieldElement a = random_element(rng);
    frog::FieldElement x = random_element(rng);
    for (auto _ : state) {
        x = x * a;
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_field_mul);

void BM_field_inv(benchmark::State& state) {
    frog::DeterministicRng rng(2);
    const frog::FieldElement a = random_element(rng);
    for (auto _ : state) {
        auto r = a.inv();
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_field_inv);

void BM_point_add(benchmark::State& state) {
    const auto& curve = frog522();
    const frog::Point g = curve->generator();
    frog::Point acc = curve->dbl(g);
    for (auto _ : state) {
        acc = curve->add(acc, g);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_point_add);

void BM_scalar_mul_ct(benchmark::State& state) {
    const auto& curve = frog522();
    frog::DeterministicRng rng(3);
    const frog::BigUint k = frog::BigUint::from_bytes_be(rng.bytes(65));
    for (auto _ : state) {
        auto r = curve->scalar_mul(k, curve->generator(), frog::ScalarSecrecy::secret);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_scalar_mul_ct);

void BM_modpow_522(benchmark::State& state) {
    const auto& params = frog522()->params();
    frog::DeterministicRng rng(4);
    const frog::BigUint base = frog::BigUint::from_bytes_be(rng.bytes(66)) % params.p;
    for (auto _ : state) {
        auto r = frog::mod_pow(base, params.p - frog::BigUint(2), params.p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_modpow_522);

}  // namespace

BENCHMARK_MAIN();
