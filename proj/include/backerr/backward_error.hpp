#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "backerr/errors.hpp"
#include "backerr/rational.hpp"

namespace backerr {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Partition of the plane by |R(mu) e^-mu| against 1.
enum class OrderStarClass : int { AMinus = -1, AZero = 0, APlus = 1 };

//-----------------------------------------------------------------------------
// One grid point's full analysis.
//-----------------------------------------------------------------------------
struct ResidualSample {
    Cplx mu{};
    int k = 0;                 // unwinding number actually used
    Cplx delta{};              // optimal relative backward error
    double abs_delta = 0.0;
    Cplx r_value{};            // R(mu); (inf, 0) at a pole
    bool classical_inside = false;              // |R| <= 1
    OrderStarClass orderstar_class = OrderStarClass::AZero;
    bool singular = false;     // R(mu) = 0 or a pole: no finite backward error
};

// Branch index minimizing |ln_k R(mu)/mu - 1|:  k = round(Im(mu - ln R)/2pi)
// with the principal log (Im in (-pi, pi]). A half-integer is a genuine tie,
// both neighbors give equal |delta|; it rounds toward zero so outputs are
// reproducible. The tie is not hypothetical: Euler at mu = -2 lands on -1/2
// exactly in IEEE arithmetic.
inline int
unwinding_k(const Cplx &mu, const Cplx &r_value) {
    if (mu == Cplx(0) || r_value == Cplx(0)) { throw ZeroArgument(); }
    const double a = (mu.imag() - std::imag(std::log(r_value))) / kTwoPi;
    const double frac = a - std::trunc(a);
    const double rounded = std::abs(frac) == 0.5 ? std::trunc(a) : std::round(a);
    return static_cast<int>(rounded);
}

// ln R(mu) on the branch k, as used everywhere below.
inline Cplx
log_branch(const Cplx &r_value, int k) {
    Cplx l = std::log(r_value);
    return {l.real(), l.imag() + kTwoPi * k};
}

//-----------------------------------------------------------------------------
// Optimal relative backward error at one point.
//-----------------------------------------------------------------------------
// delta = ln_k R(mu)/mu - 1 with the branch from unwinding_k. A zero of R or a
// pole makes every interpolant's relative error blow up; such points are
// flagged singular with abs_delta = +inf rather than dropped.
inline ResidualSample
optimal_delta(const Cplx &mu, const RationalFunction &r) {
    if (mu == Cplx(0)) { throw ZeroMu(); }
    constexpr double inf = std::numeric_limits<double>::infinity();
    ResidualSample s;
    s.mu = mu;

    Cplx nval, dval;
    r.eval_parts(mu, nval, dval);
    if (std::abs(dval) < kSingularEps) {
        // pole: |R| = inf
        s.singular = true;
        s.r_value = Cplx(inf, 0.0);
        s.delta = Cplx(inf, 0.0);
        s.abs_delta = inf;
        s.classical_inside = false;
        s.orderstar_class = OrderStarClass::APlus;
        return s;
    }
    const Cplx rv = nval / dval;
    s.r_value = rv;
    const double abs_r = std::abs(rv);
    if (abs_r < kSingularEps) {
        // zero of R: classically stable, but no finite backward error
        s.singular = true;
        s.delta = Cplx(inf, 0.0);
        s.abs_delta = inf;
        s.classical_inside = true;
        s.orderstar_class = OrderStarClass::AMinus;
        return s;
    }

    s.k = unwinding_k(mu, rv);
    s.delta = log_branch(rv, s.k) / mu - Cplx(1);
    s.abs_delta = std::abs(s.delta);
    s.classical_inside = abs_r <= 1.0;

    // order star: sign of |R e^-mu| - 1, with a 1e-12 band reported as the
    // boundary set. Compare on the log scale to dodge overflow, then map back
    // through expm1 so the band is exactly on | |R e^-mu| - 1 |.
    const double lg = std::log(abs_r) - mu.real();
    if (std::abs(lg) < 1e-9 && std::abs(std::expm1(lg)) <= 1e-12) {
        s.orderstar_class = OrderStarClass::AZero;
    } else {
        s.orderstar_class = lg > 0.0 ? OrderStarClass::APlus : OrderStarClass::AMinus;
    }
    return s;
}

//-----------------------------------------------------------------------------
// Skeleton steps and the optimal interpolant.
//-----------------------------------------------------------------------------
struct SkeletonStep {
    double t_i = 0.0, t_ip1 = 0.0;
    Cplx y_i{}, y_ip1{};
    Cplx lambda{};

    double h() const { return t_ip1 - t_i; }
};

// The minimizing interpolant is the exact solution of the perturbed problem
// z' = Lambda z with Lambda = lambda (1 + delta): structured backward error.
struct OptimalInterpolant {
    Cplx y_start{};
    Cplx lambda_eff{};
    double h = 0.0;

    Cplx at(double t) const { return y_start * std::exp(lambda_eff * t); }
};

inline OptimalInterpolant
optimal_interpolant(const SkeletonStep &step, const RationalFunction &r) {
    if (step.y_i == Cplx(0)) { throw ZeroStart(); }
    if (!(step.h() > 0.0)) { throw BadParams("skeleton step needs t_ip1 > t_i"); }
    const Cplx mu = step.lambda * step.h();
    if (mu == Cplx(0)) { throw ZeroLambda(); }
    const Cplx rv = r.eval(mu); // a pole propagates from here
    if (std::abs(rv) < kSingularEps) { throw SingularTarget(); }
    const int k = unwinding_k(mu, rv);
    OptimalInterpolant z;
    z.y_start = step.y_i;
    z.h = step.h();
    // Lambda h = ln_k R(mu), so z(h) = y_i R(mu) exactly, on every branch.
    z.lambda_eff = step.lambda * (log_branch(rv, k) / mu);
    return z;
}

// alpha = |ln_k(y_{i+1}/y_i)/(lambda h) - 1|: the smallest possible sup-norm
// relative residual of any interpolant joining the two skeleton points.
inline double
alpha_from_skeleton(const SkeletonStep &step) {
    if (step.y_i == Cplx(0)) { throw ZeroStart(); }
    if (step.lambda == Cplx(0)) { throw ZeroLambda(); }
    if (!(step.h() > 0.0)) { throw BadParams("skeleton step needs t_ip1 > t_i"); }
    if (step.y_ip1 == Cplx(0)) { return std::numeric_limits<double>::infinity(); }
    const Cplx mu = step.lambda * step.h();
    const Cplx ratio = step.y_ip1 / step.y_i;
    const int k = unwinding_k(mu, ratio);
    return std::abs(log_branch(ratio, k) / mu - Cplx(1));
}

//-----------------------------------------------------------------------------
// Order measurement.
//-----------------------------------------------------------------------------
// Fits the slope of log |delta(-h)| against log h; for a method of order p the
// residual decays like h^p, so the slope estimates p.
inline double
measure_order(const RationalFunction &r, const std::vector<double> &h_values) {
    if (h_values.size() < 4) { throw BadParams("measure_order needs at least 4 step sizes"); }
    for (std::size_t i = 0; i < h_values.size(); ++i) {
        if (!(h_values[i] > 0.0 && h_values[i] <= 0.5)) { throw BadParams("step sizes must lie in (0, 0.5]"); }
        if (i > 0 && !(h_values[i] < h_values[i - 1])) { throw BadParams("step sizes must decrease"); }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(h_values.size());
    for (const double h : h_values) {
        const ResidualSample s = optimal_delta(Cplx(-h, 0.0), r);
        if (s.singular) { throw SingularInRange(); }
        const double x = std::log(h), y = std::log(s.abs_delta);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Maclaurin coefficients of delta(mu) near 0 (where k = 0): compose the log
// series with the series of R, divide by mu, subtract 1. With b = series(R),
//   j L_j = j b_j - sum_{i=1}^{j-1} i L_i b_{j-i},
// and delta_0 = L_1 - 1, delta_t = L_{t+1}.
inline std::vector<Cplx>
delta_series(const RationalFunction &r, std::size_t n_terms) {
    if (n_terms < 1) { throw BadParams("delta_series needs at least one term"); }
    const auto bd = r.series(n_terms + 1);
    if (std::abs(bd[0] - Cplx(1)) > 1e-12) { throw InconsistentMethod(); }
    using CL = std::complex<long double>;
    std::vector<CL> b(bd.size());
    for (std::size_t j = 0; j < bd.size(); ++j) { b[j] = CL(bd[j].real(), bd[j].imag()); }
    // normalize the tiny constant-term rounding away, L_0 = 0 regardless
    for (std::size_t j = 1; j < b.size(); ++j) { b[j] /= b[0]; }
    b[0] = CL(1);

    std::vector<CL> L(b.size(), CL(0));
    for (std::size_t j = 1; j < b.size(); ++j) {
        CL acc = static_cast<long double>(j) * b[j];
        for (std::size_t i = 1; i < j; ++i) { acc -= static_cast<long double>(i) * L[i] * b[j - i]; }
        L[j] = acc / static_cast<long double>(j);
    }
    std::vector<Cplx> out(n_terms);
    out[0] = Cplx(static_cast<double>(L[1].real() - 1.0L), static_cast<double>(L[1].imag()));
    for (std::size_t t = 1; t < n_terms; ++t) {
        out[t] = Cplx(static_cast<double>(L[t + 1].real()), static_cast<double>(L[t + 1].imag()));
    }
    return out;
}

} // namespace backerr
