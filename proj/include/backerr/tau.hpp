#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "backerr/errors.hpp"
#include "backerr/exact.hpp"
#include "backerr/rational.hpp"

namespace backerr {

namespace tau_detail {

using RPoly = Polynomial<Rat>;

// Antiderivative of the k-th Chebyshev polynomial in the Chebyshev basis:
//   int T_0 = T_1,  int T_1 = (T_0 + T_2)/4,
//   int T_k = T_{k+1}/(2k+2) - T_{k-1}/(2k-2)   (k >= 2).
// Only one or two basis coefficients are ever nonzero.
struct Antiderivative {
    std::vector<std::pair<int, Rat>> cheb_coeffs; // (basis index j, coefficient)
    Rat at_plus1;                                 // value at theta = 1
    Rat at_minus1;                                // value at theta = -1

    Rat coeff(int j) const {
        for (const auto &[idx, c] : cheb_coeffs) {
            if (idx == j) { return c; }
        }
        return Rat(0);
    }
};

inline Antiderivative
antiderivative(int k) {
    Antiderivative I;
    if (k == 0) {
        I.cheb_coeffs = {{1, Rat(1)}};
        I.at_plus1 = 1;
        I.at_minus1 = -1; // T_1(-1)
    } else if (k == 1) {
        I.cheb_coeffs = {{0, Rat(1, 4)}, {2, Rat(1, 4)}};
        I.at_plus1 = Rat(1, 2);
        I.at_minus1 = Rat(1, 2); // T_0 and T_2 are both 1 at -1
    } else {
        const Rat hi(1, 2 * k + 2), lo(-1, 2 * k - 2);
        I.cheb_coeffs = {{k + 1, hi}, {k - 1, lo}};
        I.at_plus1 = hi + lo;                              // T_j(1) = 1
        I.at_minus1 = (k % 2 == 0 ? -1 : 1) * (hi + lo);   // T_j(-1) = (-1)^j
    }
    return I;
}

// Determinant by Bareiss fraction-free elimination; every division is exact.
inline RPoly
bareiss_det(std::vector<std::vector<RPoly>> m) {
    const std::size_t n = m.size();
    RPoly prev = RPoly::constant(Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) { ++r; }
            if (r == n) { return RPoly::zero(); }
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = RPoly::zero();
        }
        prev = m[k][k];
    }
    RPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// The tau linear system and its Cramer determinants, shared by the stability
// function and the interpolant coefficients.
//
// Setup: on theta in [-1,1] (theta = -1 + 2t/h) the test problem becomes
// dw/dtheta = (mu/2) w, w(-1) = 1. Write dw/dtheta = sum_{k=0}^{n} x_k T_k,
// integrate termwise, and zero the T_0..T_n coefficients of the residual
// dw/dtheta - (mu/2) w. Row j of the system is
//   x_j - (mu/2) ( [I_k]_j - delta_{j0} I_k(-1) ) x_k = (mu/2) delta_{j0},
// every entry linear in mu with rational coefficients.
struct System {
    int n;
    std::vector<Antiderivative> I; // index k = 0..n
    RPoly det_m;                   // system determinant
    std::vector<RPoly> det_k;      // column-k replacement determinants
};

inline System
build_system(int n) {
    if (n < 1 || n > 20) { throw BadParams("tau: degree must be in [1, 20]"); }
    System sys;
    sys.n = n;
    for (int k = 0; k <= n; ++k) { sys.I.push_back(antiderivative(k)); }

    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<RPoly>> M(dim, std::vector<RPoly>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            Rat slope = sys.I[k].coeff(static_cast<int>(j));
            if (j == 0) { slope -= sys.I[k].at_minus1; }
            // entry = delta_jk - (mu/2) * slope
            std::vector<Rat> cs{j == k ? Rat(1) : Rat(0), -slope / 2};
            M[j][k] = RPoly(std::move(cs));
        }
    }
    std::vector<RPoly> rhs(dim);
    rhs[0] = RPoly(std::vector<Rat>{Rat(0), Rat(1, 2)}); // (mu/2) e_0

    sys.det_m = bareiss_det(M);
    if (sys.det_m.is_zero()) { throw DegenerateSystem(); }
    for (std::size_t k = 0; k < dim; ++k) {
        auto Mk = M;
        for (std::size_t j = 0; j < dim; ++j) { Mk[j][k] = rhs[j]; }
        sys.det_k.push_back(bareiss_det(std::move(Mk)));
    }
    return sys;
}

} // namespace tau_detail

// Stability function of the degree-n Chebyshev tau discretization of one step:
//   R(mu) = w(1) = 1 + sum_k x_k (I_k(1) - I_k(-1))
// with x_k = det_k / det_m, so R = (det_m + sum_k w_k det_k) / det_m.
inline RationalFunction
tau_stability_function(int n) {
    const auto sys = tau_detail::build_system(n);
    tau_detail::RPoly num = sys.det_m;
    for (int k = 0; k <= n; ++k) {
        const Rat w = sys.I[k].at_plus1 - sys.I[k].at_minus1;
        if (w != 0) { num = num + sys.det_k[k] * w; }
    }
    return RationalFunction(to_complex_poly(num), to_complex_poly(sys.det_m));
}

// Chebyshev coefficients of the degree-(n+1) interpolant w itself, each a
// rational function of mu; index j is the T_j coefficient.
inline std::vector<RationalFunction>
tau_interpolant_coeffs(int n) {
    const auto sys = tau_detail::build_system(n);
    std::vector<RationalFunction> out;
    for (int j = 0; j <= n + 1; ++j) {
        tau_detail::RPoly num = j == 0 ? sys.det_m : tau_detail::RPoly::zero();
        for (int k = 0; k <= n; ++k) {
            Rat c = sys.I[k].coeff(j);
            if (j == 0) { c -= sys.I[k].at_minus1; }
            if (c != 0) { num = num + sys.det_k[k] * c; }
        }
        out.emplace_back(to_complex_poly(num), to_complex_poly(sys.det_m));
    }
    return out;
}

} // namespace backerr
