#include "frog/validate.hpp"

#include <chrono>

#include <json.hpp>

#include "frog/errors.hpp"
#include "frog/numtheory.hpp"
#include "frog/params.hpp"
#include "frog/version.hpp"

namespace frog {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string primality_note(unsigned mr_rounds) {
    // "Proven prime" wording in the published material is downgraded here:
    // this tool only runs probabilistic tests.
    return "BPSW+MR" + std::to_string(mr_rounds) + " probable prime (not a primality proof)";
}

// Runs body() and fills timing; converts stray exceptions into failures so a
// single broken parameter never aborts the whole report.
template <typename F>
CheckResult timed_check(std::string id, F&& body) {
    CheckResult result;
    result.id = std::move(id);
    const auto start = Clock::now();
    try {
        body(result);
    } catch (const std::exception& e) {
        result.pass = false;
        result.evidence.emplace_back("error", e.what());
    }
    result.ms = ms_since(start);
    return result;
}

BigUint twist_order_of(const CurveParams& params) {
    // N' = 2(p + 1) - N, equivalently p + 1 + t.
    return (params.p + BigUint(1)) * BigUint(2) - params.n;
}

}  // namespace

ValidationOptions toy_validation_options() {
    ValidationOptions opts;
    opts.cm_bound = 0;
    opts.twist_min_cofactor_bits = 0;
    return opts;
}

CheckResult check_field_prime(const CurveParams& params, const ValidationOptions& opts) {
    return timed_check("field_prime", [&](CheckResult& r) {
        const bool prime = is_probable_prime(params.p, opts.mr_rounds);
        bool matches_registered = true;
        if (ParamRegistry::builtin().contains(params.name)) {
            const auto& registered = ParamRegistry::builtin().get(params.name)->params();
            matches_registered = registered.p == params.p;
            r.evidence.emplace_back("registered_match", matches_registered ? "true" : "false");
        }
        r.pass = prime && matches_registered;
        r.evidence.emplace_back("p", params.p.to_decimal());
        r.evidence.emplace_back("p_bits", std::to_string(params.p.bit_length()));
        r.evidence.emplace_back("primality", primality_note(opts.mr_rounds));
    });
}

CheckResult check_nonsingular(const CurveParams& params) {
    return timed_check("nonsingular", [&](CheckResult& r) {
        const BigUint a = params.a.mod(params.p);
        const BigUint disc =
            (a * a % params.p * a % params.p * BigUint(4) +
             params.b * params.b % params.p * BigUint(27)) %
            params.p;
        r.pass = !disc.is_zero();
        r.evidence.emplace_back("discriminant_term", disc.to_decimal());
    });
}

CheckResult check_on_curve(const CurveParams& params) {
    return timed_check("basepoint_on_curve", [&](CheckResult& r) {
        const BigUint lhs = params.gy * params.gy % params.p;
        const BigUint rhs = (params.gx * params.gx % params.p * params.gx +
                             params.a.mod(params.p) * params.gx + params.b) %
                            params.p;
        r.pass = params.gx < params.p && params.gy < params.p && lhs == rhs;
        r.evidence.emplace_back("gx", params.gx.to_decimal());
        r.evidence.emplace_back("gy", params.gy.to_decimal());
    });
}

CheckResult check_order(const CurveParams& params, const ValidationOptions& opts) {
    return timed_check("order_and_cofactor", [&](CheckResult& r) {
        const bool n_prime = is_probable_prime(params.n, opts.mr_rounds);

        const CurvePtr curve = Curve::create_unchecked(params);
        const Point g = curve->generator();
        const bool g_not_identity = !g.is_identity();
        const bool ng_identity = curve->scalar_mul(params.n, g).is_identity();

        const BigUint root = isqrt(params.p);
        const BigUint two_root = root + root;
        const BigInt trace = signed_diff(params.p + BigUint(1), params.n);
        const bool hasse = trace.magnitude() <= two_root;
        const bool n_large = params.n > two_root + two_root;  // N > 4*sqrt(p)
        const bool cofactor_one = params.h.is_one();

        // N prime, N*G = O, G != O and N inside a Hasse interval narrower
        // than N leave N itself as the only admissible multiple, hence the
        // full group order; the cofactor is forced to 1.
        r.pass = n_prime && g_not_identity && ng_identity && hasse && n_large && cofactor_one;
        r.evidence.emplace_back("n", params.n.to_decimal());
        r.evidence.emplace_back("n_bits", std::to_string(params.n.bit_length()));
        r.evidence.emplace_back("n_prime", n_prime ? "true" : "false");
        r.evidence.emplace_back("nG_is_identity", ng_identity ? "true" : "false");
        r.evidence.emplace_back("hasse_bound_holds", hasse ? "true" : "false");
        r.evidence.emplace_back("n_exceeds_4sqrt_p", n_large ? "true" : "false");
        r.evidence.emplace_back("derived_cofactor", r.pass ? "1" : "indeterminate");
        r.evidence.emplace_back("primality", primality_note(opts.mr_rounds));
    });
}

CheckResult check_trace_and_discriminant(const CurveParams& params) {
    return timed_check("trace_and_discriminant", [&](CheckResult& r) {
        const BigInt trace = signed_diff(params.p + BigUint(1), params.n);
        const BigInt disc = trace * trace - BigInt(params.p * BigUint(4), false);
        const BigUint two_root = isqrt(params.p).mul_u64(2);
        bool pass = trace.magnitude() <= two_root;
        if (params.published_trace) {
            pass = pass && trace == *params.published_trace;
            r.evidence.emplace_back("published_trace_match",
                                    trace == *params.published_trace ? "true" : "false");
        }
        if (params.published_discriminant) {
            pass = pass && disc == *params.published_discriminant;
            r.evidence.emplace_back("published_discriminant_match",
                                    disc == *params.published_discriminant ? "true" : "false");
        }
        r.pass = pass;
        r.evidence.emplace_back("trace", trace.to_decimal());
        r.evidence.emplace_back("discriminant", disc.to_decimal());
    });
}

CheckResult check_anti_mov(const CurveParams& params, unsigned k_max) {
    return timed_check("anti_mov", [&](CheckResult& r) {
        BigUint x(1);
        const BigUint base = params.p % params.n;
        std::optional<unsigned> hit;
        for (unsigned k = 1; k <= k_max; ++k) {
            x = (x * base) % params.n;
            if (x.is_one()) {
                hit = k;
                break;
            }
        }
        r.pass = !hit;  // k_max = 0 passes vacuously with bound 0 recorded
        r.evidence.emplace_back("verified_no_hit_for_k_le", std::to_string(hit ? 0 : k_max));
        if (hit) r.evidence.emplace_back("hit_at_k", std::to_string(*hit));
        // The source claims embedding degree lower bound 14 alongside the
        // k <= 200 scan; recorded verbatim, the tool reports only what it ran.
        r.evidence.emplace_back("paper_claimed_lower_bound", "14");
    });
}

CheckResult check_twist(const CurveParams& params, std::uint64_t trial_bound,
                        unsigned min_cofactor_bits, unsigned mr_rounds) {
    return timed_check("twist_order", [&](CheckResult& r) {
        const BigUint n_twist = twist_order_of(params);
        bool pass = true;
        if (params.published_twist_order) {
            const bool match = n_twist == *params.published_twist_order;
            r.evidence.emplace_back("published_twist_match", match ? "true" : "false");
            pass = pass && match;
        }
        const TrialDivision td = trial_divide(n_twist, trial_bound);
        std::string factor_list;
        for (const auto& [prime, mult] : td.factors) {
            if (!factor_list.empty()) factor_list += ", ";
            factor_list += std::to_string(prime);
            if (mult > 1) factor_list += "^" + std::to_string(mult);
        }
        const bool cofactor_prime =
            !td.cofactor.is_one() && is_probable_prime(td.cofactor, mr_rounds);
        if (td.cofactor.is_one()) {
            // fully factored below the trial bound (toy curves)
            pass = pass && min_cofactor_bits == 0;
        } else {
            pass = pass && cofactor_prime && td.cofactor.bit_length() >= min_cofactor_bits;
        }
        r.pass = pass;
        r.evidence.emplace_back("n_twist", n_twist.to_decimal());
        r.evidence.emplace_back("small_factors", factor_list.empty() ? "none" : factor_list);
        r.evidence.emplace_back("cofactor", td.cofactor.to_decimal());
        r.evidence.emplace_back("cofactor_bits", std::to_string(td.cofactor.bit_length()));
        r.evidence.emplace_back("cofactor_probable_prime", cofactor_prime ? "true" : "false");
        r.evidence.emplace_back("trial_bound", std::to_string(trial_bound));
        r.evidence.emplace_back("primality", primality_note(mr_rounds));
    });
}

CheckResult check_cm_sanity(const CurveParams& params, std::uint64_t bound) {
    return timed_check("cm_sanity", [&](CheckResult& r) {
        const BigInt trace = signed_diff(params.p + BigUint(1), params.n);
        const BigInt disc = trace * trace - BigInt(params.p * BigUint(4), false);
        if (!disc.is_negative()) {
            r.pass = false;
            r.evidence.emplace_back("anomaly", "discriminant is non-negative");
            r.evidence.emplace_back("discriminant", disc.to_decimal());
            return;
        }
        if (bound == 0) {
            r.pass = true;
            r.evidence.emplace_back("bound", "0");
            r.evidence.emplace_back("note", "vacuous pass, no d scanned");
            return;
        }
        const auto found = squarefree_part_below(disc.magnitude(), bound);
        r.pass = !found;
        r.evidence.emplace_back("d_abs", disc.magnitude().to_decimal());
        r.evidence.emplace_back("bound", std::to_string(bound));
        r.evidence.emplace_back("square_free_part_found",
                                found ? found->to_decimal() : "none <= bound");
    });
}

namespace {

CheckResult check_coefficient_rederivation(const CurveParams& params,
                                           const std::optional<DerivationConfig>& matched) {
    return timed_check("coefficient_rederivation", [&](CheckResult& r) {
        const bool in_range =
            params.b >= BigUint(2) && params.b <= params.p - BigUint(2);
        r.pass = in_range;
        r.evidence.emplace_back("b", params.b.to_decimal());
        r.evidence.emplace_back("b_in_range", in_range ? "true" : "false");
        r.evidence.emplace_back("coeff_index", std::to_string(params.coeff_index));
        if (matched) {
            r.evidence.emplace_back("status", "confirmed");
            r.evidence.emplace_back("matched_index_encoding",
                                    index_encoding_name(matched->index_encoding));
            r.evidence.emplace_back(
                "matched_separator",
                std::string(matched->separator.begin(), matched->separator.end()));
        } else {
            r.evidence.emplace_back("status", "unconfirmed (encoding unknown)");
        }
    });
}

CheckResult check_basepoint_rederivation(const CurveParams& params,
                                         const std::optional<DerivationConfig>& matched) {
    return timed_check("basepoint_rederivation", [&](CheckResult& r) {
        const CurvePtr curve = Curve::create_unchecked(params);
        const auto recovered = recover_basepoint(params.gx, *curve, params.gy);
        const bool recoverable = recovered.has_value();
        const bool y_matches = recoverable && recovered->y == params.gy;
        r.pass = recoverable && y_matches;
        r.evidence.emplace_back("basepoint_index", std::to_string(params.basepoint_index));
        r.evidence.emplace_back("x_lifts_to_point", recoverable ? "true" : "false");
        r.evidence.emplace_back("y_matches_declared", y_matches ? "true" : "false");
        r.evidence.emplace_back("status", matched ? "confirmed" : "unconfirmed (encoding unknown)");
    });
}

}  // namespace

ValidationReport run_full_validation(const CurveParams& params, const DerivationConfig& cfg,
                                     const ValidationOptions& opts) {
    ValidationReport report;
    report.curve = params.name;
    report.config = cfg;
    report.version = kVersion;

    std::optional<DerivationConfig> matched;
    try {
        matched = find_matching_encoding(params);
    } catch (const std::exception&) {
        matched.reset();
    }

    report.checks.push_back(check_field_prime(params, opts));
    report.checks.push_back(check_coefficient_rederivation(params, matched));
    report.checks.push_back(check_nonsingular(params));
    report.checks.push_back(check_basepoint_rederivation(params, matched));
    report.checks.push_back(check_on_curve(params));
    report.checks.push_back(check_order(params, opts));
    report.checks.push_back(check_trace_and_discriminant(params));
    report.checks.push_back(check_anti_mov(params, opts.anti_mov_kmax));
    report.checks.push_back(check_twist(params, opts.twist_trial_bound,
                                        opts.twist_min_cofactor_bits, opts.mr_rounds));
    report.checks.push_back(check_cm_sanity(params, opts.cm_bound));

    report.pass = true;
    for (const auto& check : report.checks) report.pass = report.pass && check.pass;
    return report;
}

std::string ValidationReport::to_json(int indent) const {
    nlohmann::json j;
    j["curve"] = curve;
    j["config"] = {
        {"seed", std::string(config.seed.begin(), config.seed.end())},
        {"tag_b", std::string(config.tag_b.begin(), config.tag_b.end())},
        {"tag_g", std::string(config.tag_g.begin(), config.tag_g.end())},
        {"digest_len", config.digest_len},
        {"index_encoding", index_encoding_name(config.index_encoding)},
        {"separator", std::string(config.separator.begin(), config.separator.end())},
    };
    j["checks"] = nlohmann::json::array();
    for (const auto& check : checks) {
        nlohmann::json evidence = nlohmann::json::object();
        for (const auto& [key, value] : check.evidence) evidence[key] = value;
        j["checks"].push_back({{"id", check.id},
                               {"pass", check.pass},
                               {"evidence", evidence},
                               {"ms", check.ms}});
    }
    j["verdict"] = pass ? "pass" : "fail";
    j["version"] = version;
    return j.dump(indent);
}

}  // namespace frog
