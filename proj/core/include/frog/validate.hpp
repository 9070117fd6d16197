#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frog/curve.hpp"
#include "frog/derive.hpp"

namespace frog {

struct CheckResult {
    std::string id;
    bool pass = false;
    // Ordered (key, value) evidence; integers rendered as exact decimal strings.
    std::vector<std::pair<std::string, std::string>> evidence;
    double ms = 0.0;
};

struct ValidationOptions {
    unsigned mr_rounds = 64;
    unsigned anti_mov_kmax = 200;
    std::uint64_t cm_bound = 100000;
    std::uint64_t twist_trial_bound = std::uint64_t(1) << 20;
    unsigned twist_min_cofactor_bits = 500;
};

// Profile for validating toy-scale searched curves: the CM square-free scan
// and the 500-bit twist-cofactor floor are meaningless below ~100 bits, so
// they drop to their vacuous settings; everything else matches the published
// profile.
ValidationOptions toy_validation_options();

struct ValidationReport {
    std::string curve;
    DerivationConfig config;
    std::vector<CheckResult> checks;
    bool pass = false;
    std::string version;

    std::string to_json(int indent = 2) const;
};

// Individual checks. All failures are results, never exceptions.
CheckResult check_field_prime(const CurveParams& params, const ValidationOptions& opts = {});
CheckResult check_nonsingular(const CurveParams& params);
CheckResult check_on_curve(const CurveParams& params);
CheckResult check_order(const CurveParams& params, const ValidationOptions& opts = {});
CheckResult check_trace_and_discriminant(const CurveParams& params);
CheckResult check_anti_mov(const CurveParams& params, unsigned k_max = 200);
CheckResult check_twist(const CurveParams& params,
                        std::uint64_t trial_bound = std::uint64_t(1) << 20,
                        unsigned min_cofactor_bits = 500,
                        unsigned mr_rounds = 64);
CheckResult check_cm_sanity(const CurveParams& params, std::uint64_t bound = 100000);

// The full published checklist, in order: field prime, coefficient
// rederivation, non-singularity, base-point rederivation, on-curve, order,
// trace/discriminant, anti-MOV, twist, CM sanity.
ValidationReport run_full_validation(const CurveParams& params, const DerivationConfig& cfg,
                                     const ValidationOptions& opts = {});

}  // namespace frog
