#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "backerr/errors.hpp"
#include "backerr/pade.hpp"
#include "backerr/rational.hpp"
#include "backerr/tableau.hpp"
#include "backerr/tau.hpp"

namespace backerr {

//-----------------------------------------------------------------------------
// Declarative method description.
//-----------------------------------------------------------------------------
// Spec-string grammar (the single source of truth for CLI and config files):
//   theta:<float>     one-parameter family, 0 explicit Euler .. 1 implicit Euler
//   taylor:<int>      truncated exponential series, order p
//   pade:<int>,<int>  (m,n) Pade approximant of exp
//   rk:rkf4 rk:rkf5   Fehlberg 4(5) pair
//   rk:@<path>        Butcher tableau from a JSON file
//   sdirk3:large      two-stage SDIRK, gamma = (3+sqrt(3))/6
//   sdirk3:small      two-stage SDIRK, gamma = (3-sqrt(3))/6
//   tau:<int>         Chebyshev tau discretization of degree n
// Aliases: euler -> theta:0, midpoint -> theta:0.5, backward-euler -> theta:1.
struct MethodSpec {
    enum class Family { Theta, Taylor, Pade, RkTableau, Sdirk3, Tau };
    enum class SdirkVariant { LargeGamma, SmallGamma };

    Family family = Family::Theta;
    double theta = 0.0;
    int taylor_p = 0;
    int pade_m = 0, pade_n = 0;
    std::string rk_name;      // "rkf4", "rkf5", or "@<path>"
    SdirkVariant variant = SdirkVariant::LargeGamma;
    int tau_n = 0;
    std::string label;

    static MethodSpec parse(const std::string &text);
    std::string canonical() const;
};

struct MethodInfo {
    MethodSpec spec;
    RationalFunction r;
    int nominal_order = 0;
};

namespace detail {

inline bool
parse_int(const std::string &s, int &out) {
    if (s.empty()) { return false; }
    std::size_t pos = 0;
    try {
        out = std::stoi(s, &pos);
    } catch (...) { return false; }
    return pos == s.size();
}

inline bool
parse_double(const std::string &s, double &out) {
    if (s.empty()) { return false; }
    std::size_t pos = 0;
    try {
        out = std::stod(s, &pos);
    } catch (...) { return false; }
    return pos == s.size();
}

inline std::string
format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace detail

inline MethodSpec
MethodSpec::parse(const std::string &text) {
    std::string s = text;
    if (s == "euler") { s = "theta:0"; }
    else if (s == "midpoint") { s = "theta:0.5"; }
    else if (s == "backward-euler") { s = "theta:1"; }

    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size()) {
        throw BadSpec("method spec must look like family:params, got '" + text + "'");
    }
    const std::string family = s.substr(0, colon);
    const std::string params = s.substr(colon + 1);

    MethodSpec spec;
    if (family == "theta") {
        spec.family = Family::Theta;
        if (!detail::parse_double(params, spec.theta)) { throw BadSpec("theta: expects a float, got '" + params + "'"); }
    } else if (family == "taylor") {
        spec.family = Family::Taylor;
        if (!detail::parse_int(params, spec.taylor_p)) { throw BadSpec("taylor: expects an integer, got '" + params + "'"); }
    } else if (family == "pade") {
        spec.family = Family::Pade;
        const auto comma = params.find(',');
        if (comma == std::string::npos
            || !detail::parse_int(params.substr(0, comma), spec.pade_m)
            || !detail::parse_int(params.substr(comma + 1), spec.pade_n)) {
            throw BadSpec("pade: expects m,n integers, got '" + params + "'");
        }
    } else if (family == "rk") {
        spec.family = Family::RkTableau;
        spec.rk_name = params;
    } else if (family == "sdirk3") {
        spec.family = Family::Sdirk3;
        if (params == "large") { spec.variant = SdirkVariant::LargeGamma; }
        else if (params == "small") { spec.variant = SdirkVariant::SmallGamma; }
        else { throw BadSpec("sdirk3: expects 'large' or 'small', got '" + params + "'"); }
    } else if (family == "tau") {
        spec.family = Family::Tau;
        if (!detail::parse_int(params, spec.tau_n)) { throw BadSpec("tau: expects an integer, got '" + params + "'"); }
    } else {
        throw BadSpec("unknown method family '" + family + "'");
    }
    spec.label = spec.canonical();
    return spec;
}

inline std::string
MethodSpec::canonical() const {
    switch (family) {
        case Family::Theta: return "theta:" + detail::format_double(theta);
        case Family::Taylor: return "taylor:" + std::to_string(taylor_p);
        case Family::Pade: return "pade:" + std::to_string(pade_m) + "," + std::to_string(pade_n);
        case Family::RkTableau: return "rk:" + rk_name;
        case Family::Sdirk3: return variant == SdirkVariant::LargeGamma ? "sdirk3:large" : "sdirk3:small";
        case Family::Tau: return "tau:" + std::to_string(tau_n);
    }
    return "?";
}

// Largest p such that the Maclaurin series of R agrees with the exponential
// through mu^p to relative 1e-6 termwise. Used where the order is not pinned
// by the family itself (tau:n, file tableaus).
inline int
measured_order(const RationalFunction &r, int cap = 40) {
    const auto b = r.series(static_cast<std::size_t>(cap) + 1);
    long double fact = 1.0L;
    int p = 0;
    for (int j = 1; j <= cap; ++j) {
        fact *= j;
        const long double target = 1.0L / fact;
        const long double dev = std::abs(std::complex<long double>(b[j].real(), b[j].imag()) - target);
        if (dev > 1e-6L * target) { break; }
        p = j;
    }
    return p;
}

// Resolve a declarative spec into its stability function plus nominal order.
inline MethodInfo
resolve(const MethodSpec &spec) {
    MethodInfo info;
    info.spec = spec;
    using Family = MethodSpec::Family;
    switch (spec.family) {
        case Family::Theta: {
            if (!(spec.theta >= 0.0 && spec.theta <= 1.0)) { throw BadParams("theta must lie in [0, 1]"); }
            // R = (1 + (1-theta) mu) / (1 - theta mu)
            info.r = RationalFunction(Polynomial<Cplx>{Cplx(1), Cplx(1.0 - spec.theta)},
                                      Polynomial<Cplx>{Cplx(1), Cplx(-spec.theta)});
            info.nominal_order = spec.theta == 0.5 ? 2 : 1;
            break;
        }
        case Family::Taylor: {
            if (spec.taylor_p < 1) { throw BadParams("taylor order must be >= 1"); }
            info.r = pade_exp(spec.taylor_p, 0);
            info.nominal_order = spec.taylor_p;
            break;
        }
        case Family::Pade: {
            info.r = pade_exp(spec.pade_m, spec.pade_n); // range checks live there
            info.nominal_order = spec.pade_m + spec.pade_n;
            break;
        }
        case Family::RkTableau: {
            if (spec.rk_name == "rkf4") {
                info.r = stability_function(rkf4_tableau());
                info.nominal_order = 4;
            } else if (spec.rk_name == "rkf5") {
                info.r = stability_function(rkf5_tableau());
                info.nominal_order = 5;
            } else if (!spec.rk_name.empty() && spec.rk_name[0] == '@') {
                const auto tab = tableau_from_json(spec.rk_name.substr(1));
                info.r = stability_function(tab);
                info.nominal_order = measured_order(info.r);
                if (!tab.label.empty()) { info.spec.label = tab.label; }
            } else {
                throw UnknownBuiltin("unknown builtin tableau '" + spec.rk_name + "'");
            }
            break;
        }
        case Family::Sdirk3: {
            info.r = stability_function(sdirk3_tableau(spec.variant == MethodSpec::SdirkVariant::LargeGamma));
            info.nominal_order = 3;
            break;
        }
        case Family::Tau: {
            info.r = tau_stability_function(spec.tau_n); // validates the range
            info.nominal_order = measured_order(info.r);
            break;
        }
    }
    return info;
}

inline MethodInfo
resolve(const std::string &spec_text) {
    return resolve(MethodSpec::parse(spec_text));
}

// The builtin catalog: the theta family endpoints and midpoint, the Fehlberg
// pair, both SDIRK variants, tau:1, and the doubling Taylor/Pade ladders.
inline std::vector<MethodSpec>
catalog() {
    static const char *names[] = {
        "theta:0", "theta:0.5", "theta:1",
        "rk:rkf4", "rk:rkf5",
        "sdirk3:large", "sdirk3:small",
        "tau:1",
        "taylor:2", "taylor:4", "taylor:8", "taylor:16",
        "pade:2,2", "pade:4,4", "pade:8,8", "pade:16,16",
    };
    std::vector<MethodSpec> out;
    for (const char *n : names) { out.push_back(MethodSpec::parse(n)); }
    return out;
}

} // namespace backerr
