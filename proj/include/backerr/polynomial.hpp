#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "backerr/errors.hpp"

namespace backerr {

using Cplx = std::complex<double>;

//-----------------------------------------------------------------------------
// Dense univariate polynomial, lowest power first.
//-----------------------------------------------------------------------------
// coeffs[j] multiplies mu^j; the empty list is the zero polynomial. Construction
// strips exactly-zero trailing coefficients and nothing else: a tiny leading
// coefficient (high-order approximants of exp go down to ~1e-23 before
// normalization) is data, not noise, so no tolerance-based trimming happens here.
template<typename Coeff = Cplx>
struct Polynomial {
    std::vector<Coeff> coeffs;

    Polynomial() = default;
    Polynomial(std::initializer_list<Coeff> cs)
      : coeffs(cs) {
        trim();
    }
    explicit Polynomial(std::vector<Coeff> cs)
      : coeffs(std::move(cs)) {
        trim();
    }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(const Coeff &c) { return Polynomial{c}; }

    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    const Coeff &operator[](std::size_t j) const { return coeffs[j]; }

    // coefficient of mu^j, zero-padded beyond the stored range
    Coeff coeff_or_zero(std::size_t j) const {
        return j < coeffs.size() ? coeffs[j] : Coeff(0);
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == Coeff(0)) { coeffs.pop_back(); }
    }

    // Horner evaluation at a point of the coefficient type.
    Coeff eval(const Coeff &x) const {
        Coeff acc(0);
        for (std::size_t j = coeffs.size(); j-- > 0;) { acc = acc * x + coeffs[j]; }
        return acc;
    }

    Polynomial operator+(const Polynomial &o) const {
        std::vector<Coeff> r(std::max(coeffs.size(), o.coeffs.size()), Coeff(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) { r[j] += coeffs[j]; }
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) { r[j] += o.coeffs[j]; }
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial &o) const {
        std::vector<Coeff> r(std::max(coeffs.size(), o.coeffs.size()), Coeff(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) { r[j] += coeffs[j]; }
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) { r[j] -= o.coeffs[j]; }
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<Coeff> r(coeffs);
        for (auto &c : r) { c = -c; }
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Polynomial &o) const {
        if (is_zero() || o.is_zero()) { return zero(); }
        std::vector<Coeff> r(coeffs.size() + o.coeffs.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            for (std::size_t j = 0; j < o.coeffs.size(); ++j) { r[i + j] += coeffs[i] * o.coeffs[j]; }
        }
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Coeff &s) const {
        std::vector<Coeff> r(coeffs);
        for (auto &c : r) { c = c * s; }
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial &o) const { return coeffs == o.coeffs; }
};

// Exact quotient of two polynomials over an exact coefficient field.
// Used by the fraction-free elimination in the tau construction, where
// divisibility is guaranteed; a nonzero remainder means a logic error upstream.
template<typename Coeff>
Polynomial<Coeff>
divide_exact(const Polynomial<Coeff> &a, const Polynomial<Coeff> &b) {
    if (b.is_zero()) { throw Error("divide_exact: division by zero polynomial"); }
    if (a.is_zero()) { return Polynomial<Coeff>::zero(); }
    if (a.degree() < b.degree()) { throw Error("divide_exact: quotient is not a polynomial"); }
    std::vector<Coeff> rem = a.coeffs;
    std::vector<Coeff> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Coeff(0));
    const Coeff lead = b.coeffs.back();
    for (std::size_t qi = quo.size(); qi-- > 0;) {
        const std::size_t top = qi + b.coeffs.size() - 1;
        const Coeff f = rem[top] / lead;
        quo[qi] = f;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) { rem[qi + j] -= f * b.coeffs[j]; }
    }
    for (const Coeff &c : rem) {
        if (!(c == Coeff(0))) { throw Error("divide_exact: nonzero remainder"); }
    }
    return Polynomial<Coeff>(std::move(quo));
}

} // namespace backerr
