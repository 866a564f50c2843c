// Prints how the optimal residual of a method shrinks along the negative
// real axis, together with the running order estimate between successive
// step sizes. Handy for eyeballing a new tableau before trusting it.
//
//   ./delta_profile            profile of explicit Euler
//   ./delta_profile rk:rkf5    profile of any method the library resolves

#include <cmath>
#include <cstdio>
#include <exception>

#include "backerr/backerr.hpp"

int
main(int argc, char **argv) {
    const char *name = argc > 1 ? argv[1] : "euler";
    try {
        const auto info = backerr::resolve(name);
        std::printf("%s (nominal order %d)\n", info.spec.label.c_str(), info.nominal_order);
        std::printf("%-12s %-22s %s\n", "h", "|delta(-h)|", "order estimate");
        double prev = 0;
        bool have_prev = false;
        for (double h = 0.5; h >= 0.5 / 1024.0; h /= 2) {
            const auto s = backerr::optimal_delta(backerr::Cplx(-h, 0), info.r);
            if (s.singular) {
                std::printf("%-12g %-22s\n", h, "singular");
                have_prev = false;
                continue;
            }
            if (have_prev && s.abs_delta > 0) {
                std::printf("%-12g %-22.15g %.4f\n", h, s.abs_delta,
                            std::log2(prev / s.abs_delta));
            } else {
                std::printf("%-12g %-22.15g\n", h, s.abs_delta);
            }
            prev = s.abs_delta;
            have_prev = true;
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
