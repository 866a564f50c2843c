// Executable acceptance checks for the shipped guarantees. Each check prints
// exactly one PASS/FAIL line with its runtime; the process exits nonzero if
// any fail. A check that overruns its time budget fails even when its
// assertions hold.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "backerr/backerr.hpp"

#ifndef BACKERR_CLI_PATH
#error "BACKERR_CLI_PATH must point at the built command line binary"
#endif

using backerr::Cplx;

namespace {

struct Failure {
    std::string detail;
};

void
expect(bool ok, const std::string &detail) {
    if (!ok) { throw Failure{detail}; }
}

std::string
fmt(const char *pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------

void
check_tau1_closed_form() {
    const auto r = backerr::tau_stability_function(1);
    auto at = [&](const Cplx &mu) {
        // cross-multiplied against ((1 + mu/4)/(1 - mu/4))^2 so poles and
        // zeros need no special casing
        const Cplx p = Cplx(1) + mu / 4.0;
        const Cplx q = Cplx(1) - mu / 4.0;
        const Cplx lhs = r.num.eval(mu) * (q * q);
        const Cplx rhs = (p * p) * r.den.eval(mu);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        expect(std::abs(lhs - rhs) <= 1e-12 * scale,
               fmt("mismatch %g at mu = %g + %gi", std::abs(lhs - rhs), mu.real(), mu.imag()));
    };
    for (int i = -10; i <= 10; ++i) {
        for (int j = -10; j <= 10; ++j) { at(Cplx(i, j)); }
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        at(Cplx(-20 + 40 * backerr::uniform01(rng), -20 + 40 * backerr::uniform01(rng)));
    }
}

void
check_tau1_residual_series() {
    const auto ds = backerr::delta_series(backerr::tau_stability_function(1), 5);
    expect(std::abs(ds[2] - Cplx(1.0 / 48.0)) <= 1e-11,
           fmt("mu^2 coefficient %g vs 1/48", ds[2].real()));
    expect(std::abs(ds[4] - Cplx(1.0 / 1280.0)) <= 1e-11,
           fmt("mu^4 coefficient %g vs 1/1280", ds[4].real()));
}

void
check_tabulated_low_order_methods() {
    auto coeffs_match = [](const backerr::RationalFunction &r,
                           const std::vector<double> &num, const std::vector<double> &den,
                           const std::string &who) {
        expect(r.num.coeffs.size() == num.size(), who + ": numerator degree");
        expect(r.den.coeffs.size() == den.size(), who + ": denominator degree");
        for (std::size_t j = 0; j < num.size(); ++j) {
            expect(std::abs(r.num.coeffs[j] - Cplx(num[j])) <= 1e-14, who + ": numerator coefficient");
        }
        for (std::size_t j = 0; j < den.size(); ++j) {
            expect(std::abs(r.den.coeffs[j] - Cplx(den[j])) <= 1e-14, who + ": denominator coefficient");
        }
    };
    coeffs_match(backerr::resolve("euler").r, {1, 1}, {1}, "explicit Euler");
    coeffs_match(backerr::resolve("backward-euler").r, {1}, {1, -1}, "backward Euler");
    const double theta = 0.5;
    coeffs_match(backerr::resolve("midpoint").r, {1, 1 - theta}, {1, -theta}, "one-parameter midpoint");
    for (int p = 1; p <= 8; ++p) {
        std::vector<double> tp;
        long double fact = 1.0L;
        for (int j = 0; j <= p; ++j) {
            if (j > 0) { fact *= j; }
            tp.push_back(static_cast<double>(1.0L / fact));
        }
        coeffs_match(backerr::resolve("taylor:" + std::to_string(p)).r, tp, {1},
                     "truncated series of degree " + std::to_string(p));
    }
}

void
check_fitted_order_slopes() {
    const std::vector<double> hs{0.1, 0.05, 0.025, 0.0125};
    const std::vector<std::pair<const char *, double>> table{
        {"theta:0", 1}, {"theta:0.5", 2}, {"sdirk3:small", 3}, {"sdirk3:large", 3},
        {"rk:rkf4", 4}, {"rk:rkf5", 5},   {"pade:2,2", 4},     {"tau:1", 2},
    };
    for (const auto &[name, nominal] : table) {
        const double slope = backerr::measure_order(backerr::resolve(name).r, hs);
        expect(std::abs(slope - nominal) <= 0.1,
               std::string(name) + fmt(": slope %.4f vs nominal %g", slope, nominal));
    }
}

// shared sampling scheme for the two randomized plane checks
template<typename Fn>
void
for_each_plane_sample(Fn &&fn) {
    const auto specs = backerr::catalog();
    for (std::size_t mi = 0; mi < specs.size(); ++mi) {
        const auto info = backerr::resolve(specs[mi]);
        std::mt19937_64 rng(20260816ULL + mi);
        int accepted = 0;
        while (accepted < 10000) {
            const Cplx mu(-20 + 40 * backerr::uniform01(rng), -20 + 40 * backerr::uniform01(rng));
            if (std::abs(mu) < 1e-3) { continue; }
            ++accepted;
            const auto s = backerr::optimal_delta(mu, info.r);
            if (s.singular) { continue; }
            fn(info, s);
        }
    }
}

void
check_branch_choice_optimal() {
    for_each_plane_sample([](const backerr::MethodInfo &info, const backerr::ResidualSample &s) {
        for (const int dk : {-2, -1, 1, 2}) {
            const double other = std::abs(backerr::log_branch(s.r_value, s.k + dk) / s.mu - Cplx(1));
            expect(s.abs_delta <= other + 1e-12,
                   info.spec.label + fmt(": branch k%+.0f beats k at mu = %g + %gi",
                                         static_cast<double>(dk), s.mu.real(), s.mu.imag()));
        }
        expect(backerr::scan_k(s.mu, s.r_value, 8) == s.k,
               info.spec.label + fmt(": scan disagrees at mu = %g + %gi", s.mu.real(), s.mu.imag()));
    });
}

void
check_perturbed_flow_reconstructs_r() {
    for_each_plane_sample([](const backerr::MethodInfo &info, const backerr::ResidualSample &s) {
        const Cplx rebuilt = std::exp(s.mu * (Cplx(1) + s.delta));
        expect(std::abs(rebuilt - s.r_value) <= 1e-10 * std::abs(s.r_value),
               info.spec.label + fmt(": rebuilt flow off by %g at mu = %g + %gi",
                                     std::abs(rebuilt - s.r_value) / std::abs(s.r_value),
                                     s.mu.real(), s.mu.imag()));
    });
}

void
check_constant_control_is_optimal() {
    const auto specs = backerr::catalog();
    std::vector<backerr::MethodInfo> infos;
    for (const auto &sp : specs) { infos.push_back(backerr::resolve(sp)); }
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 100) {
        const auto &info = infos[static_cast<std::size_t>(done) % infos.size()];
        const Cplx mu(-20 + 40 * backerr::uniform01(rng), -20 + 40 * backerr::uniform01(rng));
        if (std::abs(mu) < 1e-3) { continue; }
        const auto s = backerr::optimal_delta(mu, info.r);
        if (s.singular) { continue; }
        ++done;
        const double bound = backerr::min_max_control(mu, s.r_value, 8, 300,
                                                      777ULL + static_cast<std::uint64_t>(done));
        expect(std::abs(bound - s.abs_delta) <= 1e-6,
               info.spec.label + fmt(": control optimum %.12g vs residual %.12g", bound, s.abs_delta));
    }
}

void
check_euler_disk_area() {
    const backerr::GridSpec g{-3, 1, -2, 2, 512, 512};
    const auto field = backerr::sample_field(backerr::MethodSpec::parse("euler"), g);
    double area = 0;
    for (const auto &s : field.samples) {
        if (s.classical_inside) { area += g.dx() * g.dy(); }
    }
    const double pi = 3.14159265358979323846;
    expect(std::abs(area - pi) <= 0.01 * pi, fmt("area %.6f vs pi", area));
}

void
check_stable_but_unexplainable_point() {
    const auto s = backerr::optimal_delta(Cplx(-1.9, 0), backerr::resolve("euler").r);
    expect(std::abs(s.r_value) < 1.0, fmt("|R| = %g not inside the unit disk", std::abs(s.r_value)));
    expect(s.abs_delta > 1.0, fmt("residual %g does not exceed 1", s.abs_delta));
}

void
check_accuracy_beyond_principal_strip() {
    const backerr::GridSpec g{-30, 30, -30, 30, 256, 256};
    const auto field = backerr::sample_field(backerr::MethodSpec::parse("pade:16,16"), g);
    const double pi = 3.14159265358979323846;
    for (const auto &s : field.samples) {
        if (!s.singular && s.abs_delta < 0.05 && std::abs(s.mu.imag()) > pi && s.k != 0) {
            return; // found a well-explained point that needed a nonzero winding
        }
    }
    expect(false, "no accurate wound node on the sampled window");
}

void
check_diagonal_unit_modulus() {
    for (const int n : {1, 2, 4, 8}) {
        const auto r = backerr::pade_exp(n, n);
        double worst = 0;
        for (int j = 0; j < 200; ++j) {
            const double y = -10.0 + 20.0 * j / 199.0;
            worst = std::max(worst, std::abs(std::abs(r.eval(Cplx(0, y))) - 1.0));
        }
        expect(worst <= 1e-10, fmt("degree %g drifts off the unit circle by %g",
                                   static_cast<double>(n), worst));
    }
}

void
check_csv_thread_invariance() {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "backerr_accept_t1.csv").string();
    const auto b = (dir / "backerr_accept_t4.csv").string();
    auto run = [](const std::string &args) {
        const std::string cmd = std::string("\"") + BACKERR_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const std::string common = "field pade:4,4 --window=-6,6,-6,6 --res 128 ";
    expect(run(common + "--threads 1 --out " + a) == 0, "single-thread run failed");
    expect(run(common + "--threads 4 --out " + b) == 0, "four-thread run failed");
    auto slurp = [](const std::string &p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const auto ba = slurp(a), bb = slurp(b);
    expect(!ba.empty(), "empty CSV from single-thread run");
    expect(ba == bb, "CSV bytes differ between thread counts");
}

} // namespace

int
main() {
    struct Check {
        const char *label;
        double budget_s;
        std::function<void()> fn;
    };
    const std::vector<Check> checks{
        {"degree-1 interpolation step equals its closed-form rational on a plane sweep", 1, check_tau1_closed_form},
        {"degree-1 residual series has leading coefficients 1/48 and 1/1280", 1, check_tau1_residual_series},
        {"textbook low-order methods resolve to their tabulated coefficients", 1, check_tabulated_low_order_methods},
        {"fitted residual decay slope matches the nominal order for eight methods", 5, check_fitted_order_slopes},
        {"closed-form branch choice is optimal against brute force on 160k samples", 30, check_branch_choice_optimal},
        {"perturbed flow reconstructs R(mu) to ten digits on the same samples", 30, check_perturbed_flow_reconstructs_r},
        {"piecewise controls never beat the constant optimum on 100 instances", 60, check_constant_control_is_optimal},
        {"explicit Euler stability disk area matches pi within 1%", 10, check_euler_disk_area},
        {"a classically stable point can still have residual above 100%", 1, check_stable_but_unexplainable_point},
        {"high-degree diagonal approximant stays accurate beyond the principal strip", 60, check_accuracy_beyond_principal_strip},
        {"diagonal approximants keep |R(iy)| = 1 to ten digits", 1, check_diagonal_unit_modulus},
        {"field CSV bytes are invariant under the sampling thread count", 30, check_csv_thread_invariance},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            checks[i].fn();
        } catch (const Failure &f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception &e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed > checks[i].budget_s) {
            ok = false;
            detail = fmt("exceeded the %.0fs budget", checks[i].budget_s);
        }
        std::printf("[%2zu] %s (%.2fs) %s%s%s\n", i + 1, ok ? "PASS" : "FAIL", elapsed,
                    checks[i].label, detail.empty() ? "" : ": ", detail.c_str());
        if (!ok) { ++failures; }
    }
    if (failures == 0) {
        std::printf("all %zu checks passed\n", checks.size());
    } else {
        std::printf("%d of %zu checks FAILED\n", failures, checks.size());
    }
    return failures == 0 ? 0 : 1;
}
