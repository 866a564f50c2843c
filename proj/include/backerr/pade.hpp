#pragma once

#include "backerr/errors.hpp"
#include "backerr/exact.hpp"
#include "backerr/rational.hpp"

namespace backerr {

// (m,n) Pade approximant of e^mu: numerator degree m, denominator degree n,
// matching the exponential series through order m+n.
//
// Coefficients come from the closed-form factorial ratio
//   num_j = m! (m+n-j)! / ((m+n)! j! (m-j)!),   den_j the same with m<->n and
// alternating sign, evaluated as an exact running product and rounded to
// double once. No linear solve: at (16,16) a Toeplitz system would be hopeless
// while the ratio recurrence is exact.
inline RationalFunction
pade_exp(int m, int n) {
    if (m < 0 || n < 0) { throw BadParams("pade_exp: negative degree"); }
    if (m + n > 64) { throw BadParams("pade_exp: m + n must be at most 64"); }
    std::vector<Rat> num(static_cast<std::size_t>(m) + 1);
    num[0] = 1;
    for (int j = 0; j < m; ++j) {
        num[j + 1] = num[j] * Rat(m - j, static_cast<long long>(m + n - j) * (j + 1));
    }
    std::vector<Rat> den(static_cast<std::size_t>(n) + 1);
    den[0] = 1;
    for (int j = 0; j < n; ++j) {
        den[j + 1] = den[j] * Rat(-(n - j), static_cast<long long>(m + n - j) * (j + 1));
    }
    return RationalFunction(to_complex_poly(Polynomial<Rat>(std::move(num))),
                            to_complex_poly(Polynomial<Rat>(std::move(den))));
}

} // namespace backerr
