#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "backerr/tau.hpp"

using backerr::Cplx;
using backerr::Polynomial;
using backerr::Rat;

TEST_CASE("Chebyshev antiderivatives carry the right endpoint values") {
    using backerr::tau_detail::antiderivative;
    const auto i0 = antiderivative(0); // T_1
    REQUIRE(i0.at_plus1 == Rat(1));
    REQUIRE(i0.at_minus1 == Rat(-1));
    const auto i1 = antiderivative(1); // (T_0 + T_2)/4
    REQUIRE(i1.at_plus1 == Rat(1, 2));
    REQUIRE(i1.at_minus1 == Rat(1, 2));
    const auto i2 = antiderivative(2); // T_3/6 - T_1/2
    REQUIRE(i2.coeff(3) == Rat(1, 6));
    REQUIRE(i2.coeff(1) == Rat(-1, 2));
    REQUIRE(i2.at_plus1 == Rat(-1, 3));
    REQUIRE(i2.at_minus1 == Rat(1, 3));
    const auto i3 = antiderivative(3); // T_4/8 - T_2/4
    REQUIRE(i3.at_plus1 == Rat(-1, 8));
    REQUIRE(i3.at_minus1 == Rat(-1, 8));
}

TEST_CASE("fraction-free determinant on polynomial matrices") {
    using RP = Polynomial<Rat>;
    const RP x{Rat(0), Rat(1)};
    const RP one{Rat(1)};
    // det [[x, 1], [1, x]] = x^2 - 1
    REQUIRE(backerr::tau_detail::bareiss_det({{x, one}, {one, x}}) == RP{Rat(-1), Rat(0), Rat(1)});
    // a singular matrix collapses to the zero polynomial
    REQUIRE(backerr::tau_detail::bareiss_det({{x, x}, {x, x}}).is_zero());
    // pivoting handles a zero in the corner
    REQUIRE(backerr::tau_detail::bareiss_det({{RP::zero(), one}, {one, RP::zero()}}) == RP{Rat(-1)});
}

TEST_CASE("the degree-1 discretization lands on (16 + 8mu + mu^2)/(16 - 8mu + mu^2)") {
    const auto r = backerr::tau_stability_function(1);
    // scaled to den(0) = 1: all dyadic, so exactly representable
    REQUIRE(r.num == Polynomial<Cplx>{Cplx(1), Cplx(0.5), Cplx(0.0625)});
    REQUIRE(r.den == Polynomial<Cplx>{Cplx(1), Cplx(-0.5), Cplx(0.0625)});
}

TEST_CASE("the degree-1 interpolant coefficients match the hand solution") {
    // w = (16 T_0 + 8 mu T_1 + mu^2 T_2) / (16 - 8 mu + mu^2)
    const auto cs = backerr::tau_interpolant_coeffs(1);
    REQUIRE(cs.size() == 3);
    const Polynomial<Cplx> den{Cplx(1), Cplx(-0.5), Cplx(0.0625)};
    REQUIRE(cs[0].num == Polynomial<Cplx>{Cplx(1)});
    REQUIRE(cs[1].num == Polynomial<Cplx>{Cplx(0), Cplx(0.5)});
    REQUIRE(cs[2].num == Polynomial<Cplx>{Cplx(0), Cplx(0), Cplx(0.0625)});
    for (const auto &c : cs) { REQUIRE(c.den == den); }
}

TEST_CASE("interpolant endpoint identities: w(-1) = 1 and w(1) = R") {
    for (const int n : {1, 2, 3, 4}) {
        const auto r = backerr::tau_stability_function(n);
        const auto cs = backerr::tau_interpolant_coeffs(n);
        for (const Cplx mu : {Cplx(0.3, 0), Cplx(-1.5, 2.0), Cplx(0, 4.0)}) {
            Cplx at_minus1(0), at_plus1(0);
            for (std::size_t j = 0; j < cs.size(); ++j) {
                const Cplx c = cs[j].eval(mu);
                at_plus1 += c;                              // T_j(1) = 1
                at_minus1 += (j % 2 == 0 ? c : -c);         // T_j(-1) = (-1)^j
            }
            REQUIRE(std::abs(at_minus1 - Cplx(1)) < 1e-13);
            REQUIRE(std::abs(at_plus1 - r.eval(mu)) < 1e-12 * std::max(1.0, std::abs(r.eval(mu))));
        }
    }
}

TEST_CASE("higher degrees stay consistent and deterministic") {
    for (const int n : {2, 3, 4, 5, 6}) {
        const auto r = backerr::tau_stability_function(n);
        const auto b = r.series(3);
        REQUIRE(std::abs(b[0] - Cplx(1)) < 1e-14); // R(0) = 1
        REQUIRE(std::abs(b[1] - Cplx(1)) < 1e-12); // consistency
        REQUIRE(r.num.degree() <= n + 1);
        REQUIRE(r.den.degree() <= n + 1);

        const auto again = backerr::tau_stability_function(n);
        REQUIRE(r.num == again.num);
        REQUIRE(r.den == again.den);
    }
}

TEST_CASE("symmetry of the discretization: R(-mu) R(mu) = 1") {
    // the construction integrates exactly on [-1, 1], so reversing time
    // inverts the step map; spot-check the resulting functional identity
    for (const int n : {1, 2, 3, 5}) {
        const auto r = backerr::tau_stability_function(n);
        for (const Cplx mu : {Cplx(0.7, 0.1), Cplx(-2.0, 1.0)}) {
            REQUIRE(std::abs(r.eval(mu) * r.eval(-mu) - Cplx(1)) < 1e-12);
        }
    }
}

TEST_CASE("degrees outside [1, 20] are rejected") {
    REQUIRE_THROWS_AS(backerr::tau_stability_function(0), backerr::BadParams);
    REQUIRE_THROWS_AS(backerr::tau_stability_function(21), backerr::BadParams);
    REQUIRE_THROWS_AS(backerr::tau_interpolant_coeffs(-3), backerr::BadParams);
    REQUIRE_NOTHROW(backerr::tau_stability_function(8));
}
