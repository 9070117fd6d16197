#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "frog/curve.hpp"

namespace frog {

// SHA-256 over the canonical parameter serialization:
//   ASCII name || 0x00 || enc(p) || enc(a mod p) || enc(b) || enc(gx) ||
//   enc(gy) || enc(n) || enc(h)
// where enc(v) is a 4-byte big-endian length L followed by v as L big-endian
// bytes, L = max(byte width of p, minimal width of v). Length prefixes make
// the serialization injective.
std::array<std::uint8_t, 32> param_hash(const CurveParams& params);

// Built-in curves: ECCFROG522PP plus the standard benchmark set.
class ParamRegistry {
public:
    static const ParamRegistry& builtin();

    // Validated curve context; throws UnknownCurveError.
    CurvePtr get(const std::string& name) const;
    bool contains(const std::string& name) const { return curves_.count(name) != 0; }
    const std::vector<std::string>& names() const { return order_; }

private:
    ParamRegistry();
    std::map<std::string, CurvePtr> curves_;
    std::vector<std::string> order_;
};

// Plain-text `key = value` parameter file (decimal values; name and seed as
// text). Throws MalformedParamsError on parse problems.
CurveParams parse_params_text(const std::string& text);
CurveParams load_params_file(const std::string& path);

// Name lookup in the built-in registry; if the name is unknown and the
// FROG_CURVE_PATH environment variable names a parameter file whose `name`
// matches, that file is loaded (with full structural validation).
CurvePtr load_params(const std::string& name);

std::string format_params_text(const CurveParams& params);

}  // namespace frog
