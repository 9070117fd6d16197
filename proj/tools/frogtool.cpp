// frogtool: derivation, validation, benchmarking and file encryption for
// ECCFROG522PP and the bundled standard curves.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "frog/bench.hpp"
#include "frog/bigint.hpp"
#include "frog/derive.hpp"
#include "frog/errors.hpp"
#include "frog/hippo.hpp"
#include "frog/numtheory.hpp"
#include "frog/params.hpp"
#include "frog/rng.hpp"
#include "frog/validate.hpp"
#include "frog/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUsage = 64;

struct DeriveArgs {
    std::string what = "b";
    std::uint64_t index = 0;
    std::string curve;
    std::string field;
    std::string encoding = "be8";
    std::string separator;
    std::string seed = "ECCFrog522PP|v1";
};

frog::DerivationConfig make_config(const DeriveArgs& args) {
    frog::DerivationConfig cfg;
    cfg.seed = frog::ascii_bytes(args.seed);
    cfg.separator = frog::ascii_bytes(args.separator);
    const auto enc = frog::index_encoding_from_name(args.encoding);
    if (!enc) throw CLI::ValidationError("--encoding", "must be ascii-decimal, be8 or le8");
    cfg.index_encoding = *enc;
    return cfg;
}

int cmd_derive(const DeriveArgs& args) {
    frog::BigUint p;
    if (!args.curve.empty()) {
        p = frog::load_params(args.curve)->params().p;
    } else if (!args.field.empty()) {
        std::string dec = args.field;
        if (dec.rfind("toy", 0) == 0) dec = dec.substr(3);
        p = frog::BigUint::from_decimal(dec);
    } else {
        p = frog::ParamRegistry::builtin().get("ECCFROG522PP")->params().p;
    }
    const frog::DerivationConfig cfg = make_config(args);
    frog::BigUint value;
    if (args.what == "b") {
        value = frog::derive_b(cfg, args.index, p);
    } else if (args.what == "g") {
        value = frog::derive_gx(cfg, args.index, p);
    } else {
        throw CLI::ValidationError("--what", "must be b or g");
    }
    std::cout << value.to_decimal() << "\n";
    std::cerr << "seed=" << args.seed << " tag=" << (args.what == "b" ? "b" : "G")
              << " index=" << args.index
              << " encoding=" << frog::index_encoding_name(cfg.index_encoding)
              << " separator=\"" << args.separator << "\" digest_len=" << cfg.digest_len
              << " p=" << p.to_decimal() << "\n";
    return kExitOk;
}

frog::CurveParams resolve_params(const std::string& curve, const std::string& file) {
    if (!file.empty()) return frog::load_params_file(file);
    if (frog::ParamRegistry::builtin().contains(curve))
        return frog::ParamRegistry::builtin().get(curve)->params();
    return frog::load_params(curve)->params();  // consults FROG_CURVE_PATH
}

int cmd_verify(const std::string& curve, const std::string& file, bool json_requested,
               const std::string& json_path, bool toy_profile) {
    const frog::CurveParams params = resolve_params(curve, file);
    const frog::ValidationOptions opts =
        toy_profile ? frog::toy_validation_options() : frog::ValidationOptions{};
    const frog::DerivationConfig cfg =
        frog::find_matching_encoding(params).value_or(frog::DerivationConfig{});
    const frog::ValidationReport report = frog::run_full_validation(params, cfg, opts);

    for (const auto& check : report.checks)
        std::cerr << (check.pass ? "PASS " : "FAIL ") << check.id << "\n";
    std::cerr << "verdict: " << (report.pass ? "pass" : "fail") << "\n";

    if (json_requested) {
        if (json_path.empty()) {
            std::cout << report.to_json() << "\n";
        } else {
            std::ofstream out(json_path);
            if (!out) throw frog::Error("cannot open report path: " + json_path);
            out << report.to_json() << "\n";
            std::cerr << "report written to " << json_path << "\n";
        }
    }
    return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_params(const std::string& curve, bool list, bool hash_only) {
    const auto& registry = frog::ParamRegistry::builtin();
    if (list) {
        for (const auto& name : registry.names()) std::cout << name << "\n";
        return kExitOk;
    }
    const frog::CurvePtr c = frog::load_params(curve);
    const auto& p = c->params();
    const auto hash = frog::param_hash(p);
    if (hash_only) {
        std::cout << frog::to_hex(hash) << "\n";
        return kExitOk;
    }
    const frog::BigInt trace = frog::signed_diff(p.p + frog::BigUint(1), p.n);
    const frog::BigInt disc = trace * trace - frog::BigInt(p.p * frog::BigUint(4), false);
    const frog::BigUint twist = (p.p + frog::BigUint(1)) * frog::BigUint(2) - p.n;
    std::cout << "name          " << p.name << "\n";
    if (!p.seed.empty())
        std::cout << "seed          " << std::string(p.seed.begin(), p.seed.end()) << "\n";
    std::cout << "coeff index   " << p.coeff_index << "\n";
    std::cout << "base index    " << p.basepoint_index << "\n";
    std::cout << "equation      y^2 = x^3 + (" << p.a.to_decimal() << ")x + b  (mod p)\n";
    std::cout << "p             " << p.p.to_decimal() << "\n";
    std::cout << "p bits        " << p.p.bit_length() << "\n";
    std::cout << "b             " << p.b.to_decimal() << "\n";
    std::cout << "gx            " << p.gx.to_decimal() << "\n";
    std::cout << "gy            " << p.gy.to_decimal() << "\n";
    std::cout << "n             " << p.n.to_decimal() << "\n";
    std::cout << "n bits        " << p.n.bit_length() << "\n";
    std::cout << "h             " << p.h.to_decimal() << "\n";
    std::cout << "trace         " << trace.to_decimal() << "\n";
    std::cout << "discriminant  " << disc.to_decimal() << "\n";
    std::cout << "twist order   " << twist.to_decimal() << "\n";
    std::cout << "param hash    " << frog::to_hex(hash) << "\n";
    return kExitOk;
}

int cmd_bench(const std::string& curves_arg, const std::string& ops_arg,
              std::uint64_t iters, std::uint64_t warmup, std::uint64_t seed, bool parallel,
              const std::string& csv_path) {
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const auto comma = s.find(',', pos);
            out.push_back(s.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };
    std::vector<frog::CurvePtr> curves;
    for (const auto& name : split(curves_arg)) curves.push_back(frog::load_params(name));
    std::vector<frog::BenchOp> ops;
    for (const auto& name : split(ops_arg)) {
        const auto op = frog::bench_op_from_name(name);
        if (!op) throw CLI::ValidationError("--ops", "unknown operation: " + name);
        ops.push_back(*op);
    }
    frog::BenchConfig config;
    config.iters = iters;
    config.warmup = warmup;
    config.seed = seed;
    config.parallel = parallel;
    const auto results = frog::run_bench(curves, ops, config);
    const std::string csv = frog::emit_csv(results);
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path);
        if (!out) throw frog::Error("cannot open CSV path: " + csv_path);
        out << csv;
        std::cerr << "CSV written to " << csv_path << "\n";
    }
    return kExitOk;
}

int cmd_keygen(const std::string& curve, const std::string& out_base) {
    const frog::CurvePtr c = frog::load_params(curve);
    frog::SystemRng rng;
    const frog::KeyPair kp = frog::keygen(*c, rng);
    frog::write_secret_key(out_base + ".sk", *c, kp.d);
    frog::write_public_key(out_base + ".pk", *c, kp.q);
    std::cerr << "wrote " << out_base << ".sk (0600) and " << out_base << ".pk\n";
    return kExitOk;
}

int cmd_encrypt(const std::string& curve, const std::string& recipient,
                const std::string& in_path, const std::string& out_path) {
    const frog::CurvePtr c = frog::load_params(curve);
    const frog::Point pub = frog::read_public_key(recipient, *c);
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw frog::Error("cannot open input: " + in_path);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw frog::Error("cannot open output: " + out_path);
    frog::SystemRng rng;
    frog::encrypt_stream(*c, pub, in, out, rng);
    return kExitOk;
}

int cmd_decrypt(const std::string& curve, const std::string& key_path,
                const std::string& in_path, const std::string& out_path) {
    const frog::CurvePtr c = frog::load_params(curve);
    const frog::BigUint d = frog::read_secret_key(key_path, *c);
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw frog::Error("cannot open input: " + in_path);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw frog::Error("cannot open output: " + out_path);
    frog::decrypt_stream(*c, d, in, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ECCFROG522PP curve toolkit"};
    app.set_version_flag("--version", frog::kVersion);
    app.require_subcommand(1);

    // derive
    DeriveArgs derive_args;
    auto* derive = app.add_subcommand("derive", "derive b or Gx candidates by index");
    derive->add_option("--what", derive_args.what, "b or g");
    derive->add_option("--index", derive_args.index, "search index")->required();
    derive->add_option("--curve", derive_args.curve, "use this curve's modulus and seed");
    derive->add_option("--field", derive_args.field, "decimal modulus (toyNN accepted)");
    derive->add_option("--encoding", derive_args.encoding, "ascii-decimal, be8 or le8");
    derive->add_option("--separator", derive_args.separator, "separator bytes (text)");
    derive->add_option("--seed", derive_args.seed, "seed string");

    // verify
    std::string verify_curve = "ECCFROG522PP", verify_file, json_path;
    bool toy_profile = false;
    auto* verify = app.add_subcommand("verify", "run the full validation checklist");
    verify->add_option("--curve", verify_curve, "curve name");
    verify->add_option("--params", verify_file, "parameter file to validate");
    auto* json_opt = verify->add_option("--json", json_path,
                                        "write the JSON report (stdout when no path)");
    json_opt->expected(0, 1);
    verify->add_flag("--toy-profile", toy_profile,
                     "vacuous CM bound and no twist-cofactor floor (toy curves)");

    // params
    std::string params_curve = "ECCFROG522PP";
    bool params_list = false, params_hash = false, params_show = false;
    auto* params = app.add_subcommand("params", "print curve facts");
    params->add_option("--curve", params_curve, "curve name");
    params->add_flag("--show", params_show, "print the fact table (default)");
    params->add_flag("--list", params_list, "list registered curves");
    params->add_flag("--hash", params_hash, "print only the parameter hash");

    // bench
    std::string bench_curves = "secp256k1,P-256,P-384,P-521,ECCFROG522PP";
    std::string bench_ops = "scalar_mul_var,scalar_mul_fixed,ecdh";
    std::string csv_path;
    std::uint64_t iters = 100, warmup = 10, seed = 1;
    bool parallel = false;
    auto* bench = app.add_subcommand("bench", "scalar-mul and ECDH throughput");
    bench->add_option("--curves", bench_curves, "comma-separated curve names");
    bench->add_option("--ops", bench_ops, "comma-separated operations");
    bench->add_option("--iters", iters, "timed iterations per cell");
    bench->add_option("--warmup", warmup, "discarded warmup iterations");
    bench->add_option("--seed", seed, "scalar schedule seed");
    bench->add_flag("--parallel", parallel, "one thread per (curve, op) cell");
    bench->add_option("--csv", csv_path, "write CSV here instead of stdout");

    // keygen / encrypt / decrypt
    std::string kg_curve = "ECCFROG522PP", kg_out = "frog";
    auto* keygen = app.add_subcommand("keygen", "generate a keypair");
    keygen->add_option("--curve", kg_curve, "curve name");
    keygen->add_option("--out", kg_out, "output path base (.sk/.pk appended)");

    std::string enc_curve = "ECCFROG522PP", enc_recipient, enc_in, enc_out;
    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file to a public key");
    encrypt->add_option("--curve", enc_curve, "curve name");
    encrypt->add_option("--recipient", enc_recipient, "recipient .pk file")->required();
    encrypt->add_option("--in", enc_in, "plaintext input path")->required();
    encrypt->add_option("--out", enc_out, "ciphertext output path")->required();

    std::string dec_curve = "ECCFROG522PP", dec_key, dec_in, dec_out;
    auto* decrypt = app.add_subcommand("decrypt", "decrypt a .frog container");
    decrypt->add_option("--curve", dec_curve, "curve name");
    decrypt->add_option("--key", dec_key, "secret .sk file")->required();
    decrypt->add_option("--in", dec_in, "ciphertext input path")->required();
    decrypt->add_option("--out", dec_out, "plaintext output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (derive->parsed()) return cmd_derive(derive_args);
        if (verify->parsed())
            return cmd_verify(verify_curve, verify_file, json_opt->count() > 0, json_path,
                              toy_profile);
        if (params->parsed()) return cmd_params(params_curve, params_list, params_hash);
        if (bench->parsed())
            return cmd_bench(bench_curves, bench_ops, iters, warmup, seed, parallel, csv_path);
        if (keygen->parsed()) return cmd_keygen(kg_curve, kg_out);
        if (encrypt->parsed()) return cmd_encrypt(enc_curve, enc_recipient, enc_in, enc_out);
        if (decrypt->parsed()) return cmd_decrypt(dec_curve, dec_key, dec_in, dec_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
