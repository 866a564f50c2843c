#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "backerr/polynomial.hpp"
#include "backerr/rational.hpp"

namespace backerr {

// Exact rational scalar used for construction-time arithmetic. Stability
// functions are built exactly and rounded to double once at the end; the
// public types stay plain double precision.
using Rat = boost::multiprecision::cpp_rational;

// Round an exact rational to the nearest double. Going through long double
// keeps the result correctly rounded for every magnitude we produce
// (numerators/denominators stay far inside the long double exponent range).
inline double
to_double(const Rat &q) {
    const long double n = numerator(q).convert_to<long double>();
    const long double d = denominator(q).convert_to<long double>();
    return static_cast<double>(n / d);
}

inline Polynomial<Cplx>
to_complex_poly(const Polynomial<Rat> &p) {
    std::vector<Cplx> c(p.coeffs.size());
    for (std::size_t j = 0; j < c.size(); ++j) { c[j] = Cplx(to_double(p.coeffs[j]), 0.0); }
    return Polynomial<Cplx>(std::move(c));
}

} // namespace backerr
