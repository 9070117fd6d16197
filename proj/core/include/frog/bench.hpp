#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frog/curve.hpp"

namespace frog {

enum class BenchOp {
    scalar_mul_var,    // variable-base, variable-time path
    scalar_mul_fixed,  // fixed-base windowed table
    ecdh,              // constant-time path on a random public point
};

std::string bench_op_name(BenchOp op);
std::optional<BenchOp> bench_op_from_name(std::string_view name);

struct BenchResult {
    std::string curve;
    std::string op;
    std::uint64_t iterations = 0;
    std::uint64_t total_ns = 0;
    double ops_per_sec = 0.0;
};

struct BenchConfig {
    std::uint64_t iters = 100;
    std::uint64_t warmup = 10;
    std::uint64_t seed = 1;  // scalar schedule seed, so reruns are comparable
    bool parallel = false;   // one thread per (curve, op) cell
};

// Per (curve, op): scalars and base points are pre-generated outside the
// timed region, warmup iterations are discarded, timing uses the monotonic
// clock, every output is folded into a sink, and one sampled output is
// checked against an untimed recomputation so the timed work cannot be
// optimized away. Throws DomainError for empty inputs or iters = 0.
std::vector<BenchResult> run_bench(const std::vector<CurvePtr>& curves,
                                   const std::vector<BenchOp>& ops,
                                   const BenchConfig& config = {});

// Header `curve,op,iterations,total_ns,ops_per_sec`, one row per result, in
// the given result order.
std::string emit_csv(const std::vector<BenchResult>& results);
std::vector<BenchResult> parse_csv(const std::string& text);  // round-trip aid

}  // namespace frog
