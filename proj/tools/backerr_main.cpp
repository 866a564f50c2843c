// backerr: optimal backward error maps for one-step ODE methods on the
// linear test problem y' = lambda y.
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure or counterexample,
// 4 I/O failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "backerr/backerr.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

// Relative output paths land in BACKERR_OUT_DIR when it is set.
std::string
resolve_out_path(const std::string &path) {
    if (path.empty()) { return path; }
    const char *dir = std::getenv("BACKERR_OUT_DIR");
    if (!dir || *dir == '\0' || std::filesystem::path(path).is_absolute()) { return path; }
    return (std::filesystem::path(dir) / path).string();
}

std::vector<double>
default_levels() {
    std::vector<double> v;
    for (int i = 1; i <= 20; ++i) { v.push_back(0.05 * i); }
    return v;
}

void
print_field_csv_stdout(const backerr::Field &field) {
    // same format as emit_csv; stdout is the default sink
    std::fputs("mu_re,mu_im,k,delta_re,delta_im,abs_delta,abs_R,classical,orderstar,singular\n", stdout);
    for (int iy = 0; iy < field.grid.ny; ++iy) {
        for (int ix = 0; ix < field.grid.nx; ++ix) {
            const backerr::ResidualSample &s = field.at(ix, iy);
            std::fprintf(stdout, "%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%d,%d,%d\n",
                         s.mu.real(), s.mu.imag(), s.k,
                         s.delta.real(), s.delta.imag(), s.abs_delta, std::abs(s.r_value),
                         s.classical_inside ? 1 : 0,
                         static_cast<int>(s.orderstar_class), s.singular ? 1 : 0);
        }
    }
}

int
cmd_list(bool as_json) {
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &spec : backerr::catalog()) {
            const auto info = backerr::resolve(spec);
            arr.push_back({{"spec", spec.canonical()},
                           {"label", info.spec.label},
                           {"order", info.nominal_order},
                           {"num_degree", info.r.num.degree()},
                           {"den_degree", info.r.den.degree()}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::printf("%-14s %5s %11s\n", "method", "order", "R degrees");
        for (const auto &spec : backerr::catalog()) {
            const auto info = backerr::resolve(spec);
            std::printf("%-14s %5d %5d/%d\n", spec.canonical().c_str(), info.nominal_order,
                        info.r.num.degree(), info.r.den.degree());
        }
    }
    return kExitOk;
}

int
cmd_field(const std::string &method, const std::string &window, int res,
          const std::string &preset, const std::string &out_csv, const std::string &out_svg,
          const std::string &source_name, int threads) {
    backerr::GridSpec grid{-6, 6, -6, 6, 256, 256};
    if (!preset.empty()) {
        const auto p = backerr::find_preset(preset);
        if (!p) { throw backerr::BadSpec("unknown preset '" + preset + "'"); }
        grid = p->grid;
    }
    if (!window.empty()) {
        std::string w = window;
        for (auto &c : w) {
            if (c == ',') { c = ' '; }
        }
        if (std::sscanf(w.c_str(), "%lf %lf %lf %lf", &grid.re_min, &grid.re_max, &grid.im_min, &grid.im_max) != 4) {
            throw backerr::BadSpec("--window wants re_min,re_max,im_min,im_max");
        }
    }
    if (res > 0) { grid.nx = grid.ny = res; }

    backerr::FieldSource source = backerr::FieldSource::AbsDelta;
    if (source_name == "abs_R") { source = backerr::FieldSource::AbsR; }
    else if (source_name == "orderstar") { source = backerr::FieldSource::OrderStar; }
    else if (source_name != "abs_delta") { throw backerr::BadSpec("--source must be abs_delta, abs_R, or orderstar"); }

    const auto field = backerr::sample_field(backerr::MethodSpec::parse(method), grid, threads);

    if (!out_csv.empty()) { backerr::emit_csv(field, resolve_out_path(out_csv)); }
    if (!out_svg.empty()) {
        std::vector<backerr::ContourSet> sets;
        sets.push_back(backerr::contours(field, source, default_levels()));
        backerr::emit_svg(field, sets, resolve_out_path(out_svg));
    }
    if (out_csv.empty() && out_svg.empty()) { print_field_csv_stdout(field); }
    return kExitOk;
}

int
cmd_order(const std::string &method) {
    const auto info = backerr::resolve(method);
    const std::vector<double> hs{0.1, 0.05, 0.025, 0.0125};
    const double slope = backerr::measure_order(info.r, hs);
    std::printf("method      %s\n", info.spec.label.c_str());
    std::printf("nominal     %d\n", info.nominal_order);
    std::printf("fit slope   %.4f   (log|delta(-h)| vs log h, h = 0.1 .. 0.0125)\n", slope);
    const auto ds = backerr::delta_series(info.r, 12);
    std::printf("delta series leading terms:\n");
    int shown = 0;
    for (std::size_t t = 0; t < ds.size() && shown < 3; ++t) {
        if (std::abs(ds[t]) > 1e-13) {
            std::printf("  mu^%zu  %.12g%+.12gi\n", t, ds[t].real(), ds[t].imag());
            ++shown;
        }
    }
    if (shown == 0) { std::printf("  all coefficients below 1e-13 up to mu^11\n"); }
    return kExitOk;
}

int
cmd_audit(const std::string &skeleton_path, double lambda_re, double lambda_im,
          double warn_level, const std::string &out_csv) {
    const auto pts = backerr::read_skeleton_csv(skeleton_path);
    const backerr::Cplx lambda(lambda_re, lambda_im);
    if (lambda == backerr::Cplx(0)) { throw backerr::ZeroLambda(); }

    std::FILE *csv = nullptr;
    if (!out_csv.empty()) {
        csv = std::fopen(resolve_out_path(out_csv).c_str(), "wb");
        if (!csv) { throw backerr::IoFailure("cannot open for writing: " + out_csv); }
        std::fputs("step,t_i,t_ip1,alpha,flag\n", csv);
    }

    std::printf("%-6s %-12s %-12s %-14s %s\n", "step", "t_i", "t_ip1", "alpha", "flag");
    int failures = 0, warnings = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        backerr::SkeletonStep step{pts[i].t, pts[i + 1].t, pts[i].y, pts[i + 1].y, lambda};
        double alpha;
        const char *flag = "";
        if (step.y_i == backerr::Cplx(0)) {
            alpha = std::numeric_limits<double>::infinity();
            flag = "FAIL(start=0)";
            ++failures;
        } else {
            alpha = backerr::alpha_from_skeleton(step);
            if (!(alpha <= 1.0)) {
                flag = "FAIL";
                ++failures;
            } else if (alpha > warn_level) {
                flag = "WARN";
                ++warnings;
            }
        }
        std::printf("%-6zu %-12.6g %-12.6g %-14.8g %s\n", i, step.t_i, step.t_ip1, alpha, flag);
        if (csv) { std::fprintf(csv, "%zu,%.17g,%.17g,%.17g,%s\n", i, step.t_i, step.t_ip1, alpha, flag); }
    }
    if (csv) { std::fclose(csv); }
    std::printf("steps %zu, warnings %d (alpha > %g), failures %d (alpha > 1 or undefined)\n",
                pts.size() - 1, warnings, warn_level, failures);
    return failures > 0 ? kExitNumerical : kExitOk;
}

int
cmd_verify(int samples, std::uint64_t seed, int pieces, int iterations) {
    const auto specs = backerr::catalog();
    std::vector<backerr::MethodInfo> infos;
    for (const auto &s : specs) { infos.push_back(backerr::resolve(s)); }

    std::mt19937_64 rng(seed);
    int checked = 0;
    for (int i = 0; i < samples; ++i) {
        const auto &info = infos[static_cast<std::size_t>(i) % infos.size()];
        backerr::Cplx mu;
        do {
            mu = backerr::Cplx(-20.0 + 40.0 * backerr::uniform01(rng), -20.0 + 40.0 * backerr::uniform01(rng));
        } while (std::abs(mu) < 1e-3);
        const auto s = backerr::optimal_delta(mu, info.r);
        if (s.singular) { continue; }
        ++checked;

        const int brute = backerr::scan_k(mu, s.r_value, 8);
        if (brute != s.k) {
            std::printf("FAIL: branch mismatch, method %s mu = %.17g%+.17gi closed-form k = %d scan k = %d\n",
                        info.spec.label.c_str(), mu.real(), mu.imag(), s.k, brute);
            return kExitNumerical;
        }
        for (const int dk : {-2, -1, 1, 2}) {
            const double other = std::abs(backerr::log_branch(s.r_value, s.k + dk) / mu - backerr::Cplx(1));
            if (!(s.abs_delta <= other + 1e-12)) {
                std::printf("FAIL: |delta| not minimal, method %s mu = %.17g%+.17gi k = %d beaten by k%+d\n",
                            info.spec.label.c_str(), mu.real(), mu.imag(), s.k, dk);
                return kExitNumerical;
            }
        }
        const double bound = backerr::min_max_control(mu, s.r_value, pieces, iterations,
                                                      seed + static_cast<std::uint64_t>(i));
        if (!(bound >= s.abs_delta - 1e-6 && bound <= s.abs_delta + 1e-6)) {
            std::printf("FAIL: control optimum %.17g vs |delta_opt| %.17g, method %s mu = %.17g%+.17gi\n",
                        bound, s.abs_delta, info.spec.label.c_str(), mu.real(), mu.imag());
            return kExitNumerical;
        }
    }
    std::printf("PASS: %d sampled instances (%d non-singular checked), branch choice optimal, "
                "piecewise controls never beat the constant one\n", samples, checked);
    return kExitOk;
}

} // namespace

int
main(int argc, char **argv) {
    CLI::App app{"optimal backward error analysis of one-step ODE methods on y' = lambda y"};
    app.require_subcommand(1);

    auto *list_cmd = app.add_subcommand("list", "print the builtin method catalog");
    bool list_json = false;
    list_cmd->add_flag("--json", list_json, "machine-readable output");

    auto *field_cmd = app.add_subcommand("field", "sample a mu-plane window and write CSV/SVG");
    std::string f_method, f_window, f_preset, f_out, f_svg, f_source = "abs_delta";
    int f_res = 0, f_threads = 0;
    field_cmd->add_option("method", f_method,
                          "method spec: theta:<t>, taylor:<p>, pade:<m>,<n>, rk:rkf4, rk:rkf5, "
                          "rk:@file.json, sdirk3:large|small, tau:<n>; aliases euler, midpoint, backward-euler")
        ->required();
    field_cmd->add_option("--window", f_window, "re_min,re_max,im_min,im_max (default -6,6,-6,6)");
    field_cmd->add_option("--res", f_res, "grid nodes per axis (default 256)");
    field_cmd->add_option("--preset", f_preset, "named window from the shipped preset table");
    field_cmd->add_option("--out", f_out, "CSV output path (default: CSV to stdout)");
    field_cmd->add_option("--svg", f_svg, "SVG output path");
    field_cmd->add_option("--source", f_source, "contour source for SVG: abs_delta, abs_R, orderstar");
    field_cmd->add_option("--threads", f_threads, "sampling threads (0 = hardware)");

    auto *order_cmd = app.add_subcommand("order", "measured order and residual series of a method");
    std::string o_method;
    order_cmd->add_option("method", o_method, "method spec")->required();

    auto *audit_cmd = app.add_subcommand("audit", "per-step backward error of a numerical skeleton");
    std::string a_skeleton, a_lambda, a_out;
    double a_warn = 0.05;
    audit_cmd->add_option("--skeleton", a_skeleton, "CSV with header t,y_re,y_im")->required();
    audit_cmd->add_option("--lambda", a_lambda, "test problem coefficient, re,im")->required();
    audit_cmd->add_option("--warn-level", a_warn, "flag steps with alpha above this (default 0.05)");
    audit_cmd->add_option("--out", a_out, "also write the per-step table as CSV");

    auto *verify_cmd = app.add_subcommand("verify", "brute-force check of branch choice and control optimality");
    int v_samples = 100, v_pieces = 8, v_iterations = 200;
    std::uint64_t v_seed = 1;
    verify_cmd->add_option("--samples", v_samples, "random instances (default 100)");
    verify_cmd->add_option("--seed", v_seed, "RNG seed (default 1)");
    verify_cmd->add_option("--pieces", v_pieces, "control pieces (default 8)");
    verify_cmd->add_option("--iterations", v_iterations, "descent sweeps (default 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (list_cmd->parsed()) { return cmd_list(list_json); }
        if (field_cmd->parsed()) {
            return cmd_field(f_method, f_window, f_res, f_preset, f_out, f_svg, f_source, f_threads);
        }
        if (order_cmd->parsed()) { return cmd_order(o_method); }
        if (audit_cmd->parsed()) {
            std::string l = a_lambda;
            for (auto &c : l) {
                if (c == ',') { c = ' '; }
            }
            double lre, lim;
            if (std::sscanf(l.c_str(), "%lf %lf", &lre, &lim) != 2) {
                throw backerr::BadSpec("--lambda wants re,im");
            }
            return cmd_audit(a_skeleton, lre, lim, a_warn, a_out);
        }
        if (verify_cmd->parsed()) { return cmd_verify(v_samples, v_seed, v_pieces, v_iterations); }
    } catch (const backerr::BadSpec &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const backerr::BadParams &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const backerr::UnknownBuiltin &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const backerr::EmptyLevels &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const backerr::IoFailure &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const backerr::BadFile &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const backerr::Error &e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    }
    return kExitUsage;
}
