#include "frog/params.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "frog/errors.hpp"
#include "frog/kdf.hpp"

namespace frog {

namespace {

constexpr const char* kFrogSeed = "ECCFrog522PP|v1";

CurveParams eccfrog522pp_params() {
    CurveParams c;
    c.name = "ECCFROG522PP";
    c.p = BigUint::from_decimal(
        "686479766013060971498190079908139321726943530014330540939446345918554318"
        "339765605212255964066145455497729631139148085803712198799971664381257402"
        "8291115058039");
    c.a = BigInt(-9);
    c.b = BigUint::from_decimal(
        "661139136184195850860452469937744791138999490012975421307768311225096419"
        "509388251093415492337101182055425457255989613682399356563300695566619742"
        "8760619911");
    c.gx = BigUint::from_decimal(
        "114836598700559139646235363713136312609767670986199491984058026550790121"
        "317888159000151000981405923011587990724012666535482931446873066751491073"
        "89798128134");
    c.gy = BigUint::from_decimal(
        "303869445742844202438813211737067794312734393851211346303431863870960045"
        "113632574702513861080239149191409127648110569935391920249490281068659303"
        "0172286395020");
    c.n = BigUint::from_decimal(
        "686479766013060971498190079908139321726943530014330540939446345918554318"
        "339765470783993099806907243717889863432321841973824511791072608043490749"
        "5541251156283");
    c.h = BigUint(1);
    c.seed = ascii_bytes(kFrogSeed);
    c.coeff_index = 1294798;
    c.basepoint_index = 0;
    c.published_trace = BigInt::from_decimal(
        "134428262864259238211779839767706826243829887687008899056337766653274986"
        "3901757");
    c.published_discriminant = BigInt::from_decimal(
        "-25652094854852200923182489755562709400813783410907538423881259128294063"
        "827498368666061775444493529979367517268977200639940503231230605133844631"
        "506932712545107");
    c.published_twist_order = BigUint::from_decimal(
        "686479766013060971498190079908139321726943530014330540939446345918554318"
        "339765739640518828325383667277569398845974329633599885808870720719024056"
        "1040978959797");
    return c;
}

CurveParams secp256k1_params() {
    CurveParams c;
    c.name = "secp256k1";
    c.p = BigUint::from_hex(
        "fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f");
    c.a = BigInt(0);
    c.b = BigUint::from_hex(
        "7");
    c.gx = BigUint::from_hex(
        "79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798");
    c.gy = BigUint::from_hex(
        "483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8");
    c.n = BigUint::from_hex(
        "fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141");
    c.h = BigUint(1);
    return c;
}

CurveParams p256_params() {
    CurveParams c;
    c.name = "P-256";
    c.p = BigUint::from_hex(
        "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff");
    c.a = BigInt(-3);
    c.b = BigUint::from_hex(
        "5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b");
    c.gx = BigUint::from_hex(
        "6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296");
    c.gy = BigUint::from_hex(
        "4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5");
    c.n = BigUint::from_hex(
        "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551");
    c.h = BigUint(1);
    return c;
}

CurveParams p384_params() {
    CurveParams c;
    c.name = "P-384";
    c.p = BigUint::from_hex(
        "fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffeffffffff00000000"
        "00000000ffffffff");
    c.a = BigInt(-3);
    c.b = BigUint::from_hex(
        "b3312fa7e23ee7e4988e056be3f82d19181d9c6efe8141120314088f5013875ac656398d8a2ed19d"
        "2a85c8edd3ec2aef");
    c.gx = BigUint::from_hex(
        "aa87ca22be8b05378eb1c71ef320ad746e1d3b628ba79b9859f741e082542a385502f25dbf55296c"
        "3a545e3872760ab7");
    c.gy = BigUint::from_hex(
        "3617de4a96262c6f5d9e98bf9292dc29f8f41dbd289a147ce9da3113b5f0b8c00a60b1ce1d7e819d"
        "7a431d7c90ea0e5f");
    c.n = BigUint::from_hex(
        "ffffffffffffffffffffffffffffffffffffffffffffffffc7634d81f4372ddf581a0db248b0a77a"
        "ecec196accc52973");
    c.h = BigUint(1);
    return c;
}

CurveParams p521_params() {
    CurveParams c;
    c.name = "P-521";
    c.p = BigUint::from_hex(
        "1fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff"
        "fffffffffffffffffffffffffffffffffffffffffffffffffff");
    c.a = BigInt(-3);
    c.b = BigUint::from_hex(
        "51953eb9618e1c9a1f929a21a0b68540eea2da725b99b315f3b8b489918ef109e156193951ec7e93"
        "7b1652c0bd3bb1bf073573df883d2c34f1ef451fd46b503f00");
    c.gx = BigUint::from_hex(
        "c6858e06b70404e9cd9e3ecb662395b4429c648139053fb521f828af606b4d3dbaa14b5e77efe759"
        "28fe1dc127a2ffa8de3348b3c1856a429bf97e7e31c2e5bd66");
    c.gy = BigUint::from_hex(
        "11839296a789a3bc0045c8a5fb42c7d1bd998f54449579b446817afbd17273e662c97ee72995ef42"
        "640c550b9013fad0761353c7086a272c24088be94769fd16650");
    c.n = BigUint::from_hex(
        "1fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffa51868783bf2f9"
        "66b7fcc0148f709a5d03bb5c9b8899c47aebb6fb71e91386409");
    c.h = BigUint(1);
    return c;
}

Bytes encode_field(const BigUint& v, std::size_t min_width) {
    const std::size_t width = std::max(min_width, (v.bit_length() + 7) / 8);
    Bytes out;
    out.reserve(4 + width);
    for (int i = 3; i >= 0; --i) out.push_back(std::uint8_t(width >> (8 * i)));
    const Bytes value = v.to_bytes_be(width);
    out.insert(out.end(), value.begin(), value.end());
    return out;
}

}  // namespace

std::array<std::uint8_t, 32> param_hash(const CurveParams& params) {
    const std::size_t field_width = (params.p.bit_length() + 7) / 8;
    Bytes buf = ascii_bytes(params.name);
    buf.push_back(0x00);
    const BigUint fields[] = {params.p,  params.a.mod(params.p), params.b, params.gx,
                              params.gy, params.n,               params.h};
    for (const BigUint& v : fields) {
        const Bytes enc = encode_field(v, field_width);
        buf.insert(buf.end(), enc.begin(), enc.end());
    }
    return sha256(buf);
}

ParamRegistry::ParamRegistry() {
    for (auto& params : {eccfrog522pp_params(), secp256k1_params(), p256_params(),
                         p384_params(), p521_params()}) {
        order_.push_back(params.name);
        curves_.emplace(params.name, Curve::create(params));
    }
}

const ParamRegistry& ParamRegistry::builtin() {
    static const ParamRegistry registry;
    return registry;
}

CurvePtr ParamRegistry::get(const std::string& name) const {
    const auto it = curves_.find(name);
    if (it == curves_.end()) throw UnknownCurveError(name);
    return it->second;
}

CurveParams parse_params_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto strip = [](std::string s) {
            const auto from = s.find_first_not_of(" \t\r");
            const auto to = s.find_last_not_of(" \t\r");
            return from == std::string::npos ? std::string{} : s.substr(from, to - from + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }

    auto require = [&](const char* key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw MalformedParamsError(std::string("missing parameter: ") + key);
        return it->second;
    };
    auto parse_uint = [&](const char* key) {
        try {
            return BigUint::from_decimal(require(key));
        } catch (const std::invalid_argument&) {
            throw MalformedParamsError(std::string("invalid decimal value for: ") + key);
        }
    };

    CurveParams c;
    c.name = require("name");
    c.p = parse_uint("p");
    try {
        c.a = BigInt::from_decimal(require("a"));
    } catch (const std::invalid_argument&) {
        throw MalformedParamsError("invalid decimal value for: a");
    }
    c.b = parse_uint("b");
    c.gx = parse_uint("gx");
    c.gy = parse_uint("gy");
    c.n = parse_uint("n");
    c.h = parse_uint("h");
    if (kv.count("seed")) c.seed = ascii_bytes(kv["seed"]);
    try {
        if (kv.count("i")) c.coeff_index = std::stoull(kv["i"]);
        if (kv.count("j")) c.basepoint_index = std::stoull(kv["j"]);
    } catch (const std::exception&) {
        throw MalformedParamsError("invalid index value");
    }
    return c;
}

CurveParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedParamsError("cannot open parameter file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_params_text(buf.str());
}

CurvePtr load_params(const std::string& name) {
    const auto& registry = ParamRegistry::builtin();
    if (registry.contains(name)) return registry.get(name);
    if (const char* path = std::getenv("FROG_CURVE_PATH")) {
        CurveParams params = load_params_file(path);
        if (params.name == name) return Curve::create(std::move(params));
    }
    throw UnknownCurveError(name);
}

std::string format_params_text(const CurveParams& params) {
    std::ostringstream out;
    out << "name = " << params.name << "\n";
    out << "p = " << params.p.to_decimal() << "\n";
    out << "a = " << params.a.to_decimal() << "\n";
    out << "b = " << params.b.to_decimal() << "\n";
    out << "gx = " << params.gx.to_decimal() << "\n";
    out << "gy = " << params.gy.to_decimal() << "\n";
    out << "n = " << params.n.to_decimal() << "\n";
    out << "h = " << params.h.to_decimal() << "\n";
    if (!params.seed.empty())
        out << "seed = " << std::string(params.seed.begin(), params.seed.end()) << "\n";
    out << "i = " << params.coeff_index << "\n";
    out << "j = " << params.basepoint_index << "\n";
    return out.str();
}

}  // namespace frog
