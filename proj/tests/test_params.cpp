#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "frog/errors.hpp"
#include "frog/params.hpp"
#include "frozen_vectors.hpp"

using frog::BigUint;
using frog::CurveParams;
using frog::ParamRegistry;

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "tests/data"
#endif

TEST_CASE("registry exposes the five built-ins, all structurally valid") {
    const auto& registry = ParamRegistry::builtin();
    REQUIRE(registry.names().size() == 5);
    for (const auto& name : registry.names()) {
        const auto curve = registry.get(name);
        CHECK(curve->is_on_curve(curve->generator()));
        CHECK(curve->is_nonsingular());
        CHECK(curve->params().h == BigUint(1));
    }
    CHECK(registry.contains("ECCFROG522PP"));
    CHECK_THROWS_AS((void)registry.get("nosuch"), frog::UnknownCurveError);
}

TEST_CASE("param_hash matches the frozen goldens and is deterministic") {
    for (const auto& [name, hex] : frozen::kParamHashes) {
        const auto& params = ParamRegistry::builtin().get(name)->params();
        CHECK(frog::to_hex(frog::param_hash(params)) == hex);
        CHECK(frog::param_hash(params) == frog::param_hash(params));
    }
}

TEST_CASE("param_hash golden file in the repository agrees") {
    std::ifstream golden(std::string(TEST_DATA_DIR) + "/eccfrog522pp_param_hash.golden");
    REQUIRE(golden.good());
    std::string expected;
    golden >> expected;
    const auto& params = ParamRegistry::builtin().get("ECCFROG522PP")->params();
    CHECK(frog::to_hex(frog::param_hash(params)) == expected);
}

TEST_CASE("param_hash reacts to any single field change") {
    CurveParams params = ParamRegistry::builtin().get("ECCFROG522PP")->params();
    const auto base = frog::param_hash(params);

    CurveParams mod = params;
    mod.b = params.b + BigUint(1);
    CHECK(frog::param_hash(mod) != base);
    mod = params;
    mod.name = "ECCFROG522PQ";
    CHECK(frog::param_hash(mod) != base);
    mod = params;
    mod.n = params.n + BigUint(2);
    CHECK(frog::param_hash(mod) != base);
    mod = params;
    mod.h = BigUint(2);
    CHECK(frog::param_hash(mod) != base);
    mod = params;
    mod.a = frog::BigInt(-8);
    CHECK(frog::param_hash(mod) != base);
}

TEST_CASE("parameter file format round-trips") {
    const auto& params = ParamRegistry::builtin().get("ECCFROG522PP")->params();
    const std::string text = frog::format_params_text(params);
    const CurveParams parsed = frog::parse_params_text(text);
    CHECK(parsed.name == params.name);
    CHECK(parsed.p == params.p);
    CHECK(parsed.a == params.a);
    CHECK(parsed.b == params.b);
    CHECK(parsed.gx == params.gx);
    CHECK(parsed.gy == params.gy);
    CHECK(parsed.n == params.n);
    CHECK(parsed.h == params.h);
    CHECK(parsed.seed == params.seed);
    CHECK(parsed.coeff_index == params.coeff_index);
    CHECK(parsed.basepoint_index == params.basepoint_index);
}

TEST_CASE("parameter file errors are reported distinctly") {
    CHECK_THROWS_AS((void)frog::parse_params_text("name = x\np = 5\n"),
                    frog::MalformedParamsError);  // missing keys
    CHECK_THROWS_AS((void)frog::parse_params_text(
                        "name = x\np = abc\na = 0\nb = 1\ngx = 0\ngy = 0\nn = 1\nh = 1\n"),
                    frog::MalformedParamsError);  // bad decimal
    CHECK_THROWS_AS((void)frog::load_params_file("/nonexistent/params.txt"),
                    frog::MalformedParamsError);

    // structurally broken: b+1 pushes G off the curve
    CurveParams broken = ParamRegistry::builtin().get("ECCFROG522PP")->params();
    broken.b = broken.b + BigUint(1);
    CHECK_THROWS_AS((void)frog::Curve::create(broken), frog::StructuralValidationError);
}

TEST_CASE("load_params consults FROG_CURVE_PATH for unknown names") {
    CurveParams toy;
    toy.name = "toy97";
    toy.p = BigUint(97);
    toy.a = frog::BigInt(-9);
    toy.b = BigUint(85);
    toy.gx = BigUint(31);
    toy.gy = BigUint(20);
    toy.n = BigUint(97);
    toy.h = BigUint(1);
    const std::string path = "/tmp/frog_test_toy97.params";
    {
        std::ofstream out(path);
        out << frog::format_params_text(toy);
    }
    ::setenv("FROG_CURVE_PATH", path.c_str(), 1);
    const auto curve = frog::load_params("toy97");
    CHECK(curve->params().p == BigUint(97));
    CHECK_THROWS_AS((void)frog::load_params("othername"), frog::UnknownCurveError);
    ::unsetenv("FROG_CURVE_PATH");
    CHECK_THROWS_AS((void)frog::load_params("toy97"), frog::UnknownCurveError);
    ::remove(path.c_str());
}

TEST_CASE("canonical serialization is injective across field boundaries") {
    // Same byte stream cannot arise from different (value, width) splits:
    // length prefixes pin each field.
    CurveParams a = ParamRegistry::builtin().get("ECCFROG522PP")->params();
    CurveParams b = a;
    // move one byte of information between adjacent fields: gx' = gx*256, gy' = gy/256
    b.gx = a.gx.mul_u64(256);
    b.gy = BigUint::divrem_u64(a.gy, 256).quot;
    CHECK(frog::param_hash(a) != frog::param_hash(b));
}
