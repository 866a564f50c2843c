#pragma once

#include <thread>
#include <vector>

#include "backerr/backward_error.hpp"
#include "backerr/errors.hpp"
#include "backerr/methods.hpp"

namespace backerr {

//-----------------------------------------------------------------------------
// Rectangular sampling grid in the mu plane.
//-----------------------------------------------------------------------------
// Nodes sit at cell centers: re = re_min + (ix + 1/2) dx, likewise im. The
// half-cell offset keeps mu = 0 off the grid for every window the figures
// use; if a window conspires to land a node exactly on the origin anyway, that
// node is nudged a quarter cell right. mu = 0 has no backward error analysis.
struct GridSpec {
    double re_min = -1, re_max = 1;
    double im_min = -1, im_max = 1;
    int nx = 8, ny = 8;

    void validate() const {
        if (!(re_min < re_max) || !(im_min < im_max)) { throw BadParams("grid window is empty"); }
        if (nx < 8 || ny < 8) { throw BadParams("grid resolution must be at least 8"); }
    }

    double dx() const { return (re_max - re_min) / nx; }
    double dy() const { return (im_max - im_min) / ny; }

    Cplx node(int ix, int iy) const {
        double re = re_min + (ix + 0.5) * dx();
        const double im = im_min + (iy + 0.5) * dy();
        if (re == 0.0 && im == 0.0) { re = 0.25 * dx(); }
        return {re, im};
    }

    std::size_t count() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
};

struct Field {
    GridSpec grid;
    std::vector<ResidualSample> samples; // index iy * nx + ix, complete

    const ResidualSample &at(int ix, int iy) const {
        return samples[static_cast<std::size_t>(iy) * grid.nx + ix];
    }
};

// Evaluate optimal_delta at every node. Row-parallel when threads != 1; every
// node is computed independently by pure functions, so the result is a pure
// function of (spec, grid) no matter the thread count or schedule.
inline Field
sample_field(const MethodInfo &info, const GridSpec &grid, int threads = 0) {
    grid.validate();
    Field f;
    f.grid = grid;
    f.samples.resize(grid.count());

    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) { t = 1; }
    t = std::min(t, grid.ny);

    auto rows = [&](int y0, int y1) {
        for (int iy = y0; iy < y1; ++iy) {
            for (int ix = 0; ix < grid.nx; ++ix) {
                f.samples[static_cast<std::size_t>(iy) * grid.nx + ix] =
                    optimal_delta(grid.node(ix, iy), info.r);
            }
        }
    };

    if (t == 1) {
        rows(0, grid.ny);
    } else {
        std::vector<std::thread> pool;
        for (int b = 0; b < t; ++b) {
            const int y0 = static_cast<int>(static_cast<long long>(grid.ny) * b / t);
            const int y1 = static_cast<int>(static_cast<long long>(grid.ny) * (b + 1) / t);
            pool.emplace_back(rows, y0, y1);
        }
        for (auto &th : pool) { th.join(); }
    }
    return f;
}

inline Field
sample_field(const MethodSpec &spec, const GridSpec &grid, int threads = 0) {
    return sample_field(resolve(spec), grid, threads);
}

} // namespace backerr
