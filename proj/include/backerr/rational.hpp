#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "backerr/errors.hpp"
#include "backerr/polynomial.hpp"

namespace backerr {

// Magnitudes below this count as an exact zero of R or of its denominator.
// Far below anything a sane method produces, far above true underflow garbage.
inline constexpr double kSingularEps = 1e-300;

//-----------------------------------------------------------------------------
// Ratio of two complex-coefficient polynomials in mu.
//-----------------------------------------------------------------------------
// Normalized so den(0) = 1, the natural gauge for one-step methods (every
// consistent method has R(0) = 1, so num(0) = den(0)). Every construction in
// this library already arrives in that gauge, which keeps their coefficients
// untouched bitwise; a denominator that vanishes at 0 (a pole of R there,
// necessarily user input) falls back to a monic leading coefficient.
struct RationalFunction {
    Polynomial<Cplx> num;
    Polynomial<Cplx> den;

    RationalFunction()
      : num{Cplx(1)}
      , den{Cplx(1)} {}

    RationalFunction(Polynomial<Cplx> n, Polynomial<Cplx> d)
      : num(std::move(n))
      , den(std::move(d)) {
        if (den.is_zero()) { throw BadParams("rational function with zero denominator"); }
        const Cplx c0 = den.coeffs.front();
        if (c0 != Cplx(0)) {
            if (c0 != Cplx(1)) {
                for (auto &c : num.coeffs) { c /= c0; }
                for (auto &c : den.coeffs) { c /= c0; }
                den.coeffs.front() = Cplx(1); // kill the last rounding, it is 1 by construction
            }
        } else {
            const Cplx lead = den.coeffs.back();
            if (lead != Cplx(1)) {
                for (auto &c : num.coeffs) { c /= lead; }
                for (auto &c : den.coeffs) { c /= lead; }
                den.coeffs.back() = Cplx(1);
            }
        }
    }

    // num(mu) and den(mu) without any pole policy; building block for callers
    // that want to decide for themselves what a small denominator means.
    void eval_parts(const Cplx &mu, Cplx &n_out, Cplx &d_out) const {
        n_out = num.eval(mu);
        d_out = den.eval(mu);
    }

    Cplx eval(const Cplx &mu) const {
        Cplx n, d;
        eval_parts(mu, n, d);
        if (std::abs(d) < kSingularEps) { throw PoleAtPoint(); }
        return n / d;
    }

    // First n_terms Maclaurin coefficients of num/den by recursive division.
    // Accumulates in extended precision: the recursion feeds every coefficient
    // into all later ones, and at order ~30 plain double loses ~7 digits.
    std::vector<Cplx> series(std::size_t n_terms) const {
        if (den.is_zero() || std::abs(den.coeffs.front()) < kSingularEps) { throw SeriesAtPole(); }
        using CL = std::complex<long double>;
        std::vector<CL> d(den.coeffs.size());
        for (std::size_t j = 0; j < d.size(); ++j) {
            d[j] = CL(den.coeffs[j].real(), den.coeffs[j].imag());
        }
        std::vector<CL> b(n_terms);
        for (std::size_t j = 0; j < n_terms; ++j) {
            CL acc = j < num.coeffs.size() ? CL(num.coeffs[j].real(), num.coeffs[j].imag()) : CL(0);
            const std::size_t imax = std::min(j, d.size() - 1);
            for (std::size_t i = 1; i <= imax; ++i) { acc -= d[i] * b[j - i]; }
            b[j] = acc / d[0];
        }
        std::vector<Cplx> out(n_terms);
        for (std::size_t j = 0; j < n_terms; ++j) {
            out[j] = Cplx(static_cast<double>(b[j].real()), static_cast<double>(b[j].imag()));
        }
        return out;
    }
};

} // namespace backerr
