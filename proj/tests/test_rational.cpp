#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "backerr/rational.hpp"

using backerr::Cplx;
using backerr::Polynomial;
using backerr::RationalFunction;

TEST_CASE("default rational function is the constant 1") {
    RationalFunction r;
    REQUIRE(r.eval(Cplx(2, 3)) == Cplx(1));
}

TEST_CASE("zero denominator is rejected at construction") {
    REQUIRE_THROWS_AS(RationalFunction(Polynomial<Cplx>{Cplx(1)}, Polynomial<Cplx>::zero()),
                      backerr::BadParams);
}

TEST_CASE("construction scales the denominator's constant term to 1") {
    RationalFunction r(Polynomial<Cplx>{Cplx(2)}, Polynomial<Cplx>{Cplx(4), Cplx(2)});
    REQUIRE(r.den.coeffs.front() == Cplx(1));
    REQUIRE(r.den.coeffs[1] == Cplx(0.5));
    REQUIRE(r.num.coeffs.front() == Cplx(0.5));
    REQUIRE(r.eval(Cplx(0)) == Cplx(0.5));
}

TEST_CASE("a denominator in the den(0) = 1 gauge is kept bitwise") {
    const Cplx odd(0.3, 0.0); // whatever double 0.3 rounds to must come back untouched
    RationalFunction r(Polynomial<Cplx>{Cplx(1), Cplx(7)}, Polynomial<Cplx>{Cplx(1), odd});
    REQUIRE(r.den.coeffs[1] == odd);
    REQUIRE(r.num.coeffs[1] == Cplx(7));
}

TEST_CASE("a denominator vanishing at 0 falls back to a monic leading coefficient") {
    RationalFunction r(Polynomial<Cplx>{Cplx(1)}, Polynomial<Cplx>{Cplx(0), Cplx(2)});
    REQUIRE(r.den.coeffs.back() == Cplx(1));
    REQUIRE(r.num.coeffs.front() == Cplx(0.5));
    REQUIRE_THROWS_AS(r.series(3), backerr::SeriesAtPole);
    REQUIRE_THROWS_AS(r.eval(Cplx(0)), backerr::PoleAtPoint);
    REQUIRE(r.eval(Cplx(2)) == Cplx(0.25));
}

TEST_CASE("evaluation splits into parts or throws at a pole") {
    // (1 + mu/2) / (1 - mu/2)
    RationalFunction r(Polynomial<Cplx>{Cplx(1), Cplx(0.5)}, Polynomial<Cplx>{Cplx(1), Cplx(-0.5)});
    REQUIRE(r.eval(Cplx(1)) == Cplx(3));
    REQUIRE(r.eval(Cplx(0)) == Cplx(1));
    REQUIRE_THROWS_AS(r.eval(Cplx(2)), backerr::PoleAtPoint);

    Cplx n, d;
    r.eval_parts(Cplx(2), n, d); // no pole policy here
    REQUIRE(n == Cplx(2));
    REQUIRE(d == Cplx(0));
}

TEST_CASE("series of the (1,1) exponential approximant starts 1, 1, 1/2, 1/4") {
    RationalFunction r(Polynomial<Cplx>{Cplx(1), Cplx(0.5)}, Polynomial<Cplx>{Cplx(1), Cplx(-0.5)});
    const auto b = r.series(4);
    REQUIRE(b.size() == 4);
    REQUIRE(b[0] == Cplx(1));
    REQUIRE(b[1] == Cplx(1));
    REQUIRE(b[2] == Cplx(0.5));
    REQUIRE(b[3] == Cplx(0.25));
}

TEST_CASE("series of 1/(1 - mu) is the geometric sequence") {
    RationalFunction r(Polynomial<Cplx>{Cplx(1)}, Polynomial<Cplx>{Cplx(1), Cplx(-1)});
    for (const auto &b : r.series(20)) { REQUIRE(b == Cplx(1)); }
}

TEST_CASE("series handles a numerator shorter or longer than the denominator") {
    // (16 + 8 mu + mu^2) / (16 - 8 mu + mu^2): starts like exp through mu^2
    RationalFunction r(Polynomial<Cplx>{Cplx(16), Cplx(8), Cplx(1)},
                       Polynomial<Cplx>{Cplx(16), Cplx(-8), Cplx(1)});
    const auto b = r.series(4);
    REQUIRE(b[0] == Cplx(1));
    REQUIRE(b[1] == Cplx(1));
    REQUIRE(b[2] == Cplx(0.5));
    REQUIRE(b[3] == Cplx(0.1875)); // 3/16, where it parts ways with 1/6

    // pure polynomial: the series just echoes the coefficients then zeros
    RationalFunction poly(Polynomial<Cplx>{Cplx(1), Cplx(1), Cplx(0.5)}, Polynomial<Cplx>{Cplx(1)});
    const auto c = poly.series(5);
    REQUIRE(c[2] == Cplx(0.5));
    REQUIRE(c[3] == Cplx(0));
    REQUIRE(c[4] == Cplx(0));
}

TEST_CASE("series with zero requested terms is empty") {
    RationalFunction r;
    REQUIRE(r.series(0).empty());
}
