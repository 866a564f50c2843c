#pragma once

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "backerr/errors.hpp"
#include "backerr/exact.hpp"
#include "backerr/rational.hpp"

namespace backerr {

//-----------------------------------------------------------------------------
// Butcher tableau: s x s stage matrix a and weight vector b.
//-----------------------------------------------------------------------------
// Abscissae are the row sums of a by convention and carried implicitly.
struct ButcherTableau {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::string label;

    int stages() const { return static_cast<int>(b.size()); }

    void validate() const {
        if (b.empty()) { throw BadParams("tableau: empty weight vector"); }
        if (a.size() != b.size()) { throw BadParams("tableau: a must be square with one row per weight"); }
        for (const auto &row : a) {
            if (row.size() != b.size()) { throw BadParams("tableau: a must be square"); }
        }
    }
};

// det(I + x M) = sum_k e_k x^k where e_k are the elementary symmetric
// functions of M's eigenvalues, obtained from traces of matrix powers via the
// Newton identities: k e_k = sum_{j=1}^{k} (-1)^{j-1} e_{k-j} tr(M^j).
// Everything is exact rational so that structural zeros come out exactly zero;
// an explicit tableau must yield the constant denominator 1, not 1 + 1e-18 mu^s.
inline std::vector<Rat>
char_poly_coeffs(const std::vector<std::vector<Rat>> &M) {
    const std::size_t s = M.size();
    std::vector<Rat> traces(s);
    std::vector<std::vector<Rat>> P = M;
    for (std::size_t j = 0; j < s; ++j) {
        if (j > 0) {
            std::vector<std::vector<Rat>> Q(s, std::vector<Rat>(s, Rat(0)));
            for (std::size_t r = 0; r < s; ++r) {
                for (std::size_t k = 0; k < s; ++k) {
                    if (P[r][k] == 0) { continue; }
                    for (std::size_t c = 0; c < s; ++c) { Q[r][c] += P[r][k] * M[k][c]; }
                }
            }
            P = std::move(Q);
        }
        Rat t(0);
        for (std::size_t r = 0; r < s; ++r) { t += P[r][r]; }
        traces[j] = t;
    }
    std::vector<Rat> e(s + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= s; ++k) {
        Rat acc(0);
        int sign = 1;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += sign * e[k - j] * traces[j - 1];
            sign = -sign;
        }
        e[k] = acc / static_cast<int>(k);
    }
    return e;
}

// Stability function of a one-step Runge-Kutta method on the test problem:
//   R(mu) = det(I - mu A + mu 1 b^T) / det(I - mu A).
// For a strictly lower triangular A the denominator is the constant 1 exactly.
inline RationalFunction
stability_function(const ButcherTableau &tab) {
    tab.validate();
    const std::size_t s = tab.b.size();
    std::vector<std::vector<Rat>> mnum(s, std::vector<Rat>(s));
    std::vector<std::vector<Rat>> mden(s, std::vector<Rat>(s));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            const Rat aij(tab.a[i][j]);
            mden[i][j] = -aij;
            mnum[i][j] = -aij + Rat(tab.b[j]);
        }
    }
    return RationalFunction(to_complex_poly(Polynomial<Rat>(char_poly_coeffs(mnum))),
                            to_complex_poly(Polynomial<Rat>(char_poly_coeffs(mden))));
}

//-----------------------------------------------------------------------------
// Builtin tableaus
//-----------------------------------------------------------------------------

// Fehlberg 4(5) pair: one 6-stage tableau, two weight vectors.
inline std::vector<std::vector<double>>
fehlberg_a() {
    return {
        {0, 0, 0, 0, 0, 0},
        {1.0 / 4, 0, 0, 0, 0, 0},
        {3.0 / 32, 9.0 / 32, 0, 0, 0, 0},
        {1932.0 / 2197, -7200.0 / 2197, 7296.0 / 2197, 0, 0, 0},
        {439.0 / 216, -8.0, 3680.0 / 513, -845.0 / 4104, 0, 0},
        {-8.0 / 27, 2.0, -3544.0 / 2565, 1859.0 / 4104, -11.0 / 40, 0},
    };
}

inline ButcherTableau
rkf4_tableau() {
    return {fehlberg_a(),
            {25.0 / 216, 0.0, 1408.0 / 2565, 2197.0 / 4104, -1.0 / 5, 0.0},
            "rk:rkf4"};
}

inline ButcherTableau
rkf5_tableau() {
    return {fehlberg_a(),
            {16.0 / 135, 0.0, 6656.0 / 12825, 28561.0 / 56430, -9.0 / 50, 2.0 / 55},
            "rk:rkf5"};
}

// Two-stage SDIRK, third order for gamma = (3 +- sqrt(3))/6. Both roots of the
// order-3 condition are admissible; the caller picks the large or small one.
inline ButcherTableau
sdirk3_tableau(bool large_gamma) {
    const double g = (3.0 + (large_gamma ? 1.0 : -1.0) * std::sqrt(3.0)) / 6.0;
    return {{{g, 0.0}, {1.0 - 2.0 * g, g}},
            {0.5, 0.5},
            large_gamma ? "sdirk3:large" : "sdirk3:small"};
}

// Load a tableau from JSON: {"a": [[...], ...], "b": [...], "label": "..."}.
inline ButcherTableau
tableau_from_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) { throw BadFile("cannot open tableau file: " + path); }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw BadFile("cannot parse tableau file " + path + ": " + e.what());
    }
    ButcherTableau tab;
    try {
        tab.a = j.at("a").get<std::vector<std::vector<double>>>();
        tab.b = j.at("b").get<std::vector<double>>();
        tab.label = j.value("label", "rk:@" + path);
    } catch (const nlohmann::json::exception &e) {
        throw BadParams(std::string("tableau file: ") + e.what());
    }
    tab.validate();
    return tab;
}

} // namespace backerr
