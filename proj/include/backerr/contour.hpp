#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "backerr/errors.hpp"
#include "backerr/field.hpp"

namespace backerr {

enum class FieldSource { AbsDelta, AbsR, OrderStar };

using ContourPoint = std::array<double, 2>; // (re, im)
using Polyline = std::vector<ContourPoint>;

//-----------------------------------------------------------------------------
// Leveled polylines extracted from a sampled field.
//-----------------------------------------------------------------------------
struct ContourSet {
    std::vector<double> levels;
    std::vector<std::vector<Polyline>> polylines; // one list per level
    FieldSource source = FieldSource::AbsDelta;
    GridSpec grid;
};

namespace contour_detail {

// Scalar the contours run over. Infinities (singular nodes) are mapped to the
// largest finite double: such nodes sit above every level, and the edges next
// to them get a midpoint crossing rather than a meaningless interpolation.
inline double
scalar_of(const ResidualSample &s, FieldSource src) {
    const double sentinel = std::numeric_limits<double>::max();
    double v = 0;
    switch (src) {
        case FieldSource::AbsDelta: v = s.abs_delta; break;
        case FieldSource::AbsR: v = std::abs(s.r_value); break;
        case FieldSource::OrderStar:
            // |R e^-mu| = |R| e^-Re(mu); at a pole this is +inf -> sentinel
            v = std::abs(s.r_value) * std::exp(-s.mu.real());
            break;
    }
    if (!std::isfinite(v)) { v = sentinel; }
    return v;
}

struct Segment {
    long e0, e1; // global edge ids the segment's endpoints lie on
};

} // namespace contour_detail

// Marching squares over the node lattice with linear interpolation along cell
// edges. A corner counts as above iff value > level (strict), so a field that
// sits exactly on a level produces nothing. The two ambiguous saddle cases are
// resolved by the cell-center average. Chained polylines are closed (first
// point repeated at the end) when the level set bites its own tail.
inline ContourSet
contours(const Field &field, FieldSource source, const std::vector<double> &levels) {
    if (levels.empty()) { throw EmptyLevels(); }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] > 0.0)) { throw BadParams("contour levels must be positive"); }
        if (i > 0 && !(levels[i] > levels[i - 1])) { throw BadParams("contour levels must strictly increase"); }
    }
    const GridSpec &g = field.grid;
    const int nx = g.nx, ny = g.ny;

    std::vector<double> val(field.samples.size());
    std::vector<char> sing(field.samples.size());
    for (std::size_t i = 0; i < field.samples.size(); ++i) {
        val[i] = contour_detail::scalar_of(field.samples[i], source);
        sing[i] = field.samples[i].singular ? 1 : 0;
    }
    auto vat = [&](int ix, int iy) { return val[static_cast<std::size_t>(iy) * nx + ix]; };
    auto sat = [&](int ix, int iy) { return sing[static_cast<std::size_t>(iy) * nx + ix] != 0; };
    auto pos = [&](int ix, int iy) { const Cplx m = g.node(ix, iy); return ContourPoint{m.real(), m.imag()}; };

    // global edge ids over the node lattice
    const long nh = static_cast<long>(ny) * (nx - 1); // horizontal edges
    auto hedge = [&](int ix, int iy) { return static_cast<long>(iy) * (nx - 1) + ix; };
    auto vedge = [&](int ix, int iy) { return nh + static_cast<long>(iy) * nx + ix; };

    ContourSet out;
    out.levels = levels;
    out.source = source;
    out.grid = g;

    for (const double level : levels) {
        // crossing point on the edge between two nodes
        auto cross = [&](int ax, int ay, int bx, int by) {
            const ContourPoint pa = pos(ax, ay), pb = pos(bx, by);
            double t = 0.5; // singular neighbors get no sub-cell refinement
            if (!sat(ax, ay) && !sat(bx, by)) {
                const double va = vat(ax, ay), vb = vat(bx, by);
                t = (level - va) / (vb - va);
                if (!std::isfinite(t)) { t = 0.5; }
                t = std::min(1.0, std::max(0.0, t));
            }
            return ContourPoint{pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])};
        };

        std::map<long, ContourPoint> points;
        std::map<long, std::vector<long>> adj;
        auto add_segment = [&](long ea, ContourPoint pa, long eb, ContourPoint pb) {
            points.emplace(ea, pa);
            points.emplace(eb, pb);
            adj[ea].push_back(eb);
            adj[eb].push_back(ea);
        };

        for (int cy = 0; cy + 1 < ny; ++cy) {
            for (int cx = 0; cx + 1 < nx; ++cx) {
                const bool a00 = vat(cx, cy) > level;
                const bool a10 = vat(cx + 1, cy) > level;
                const bool a11 = vat(cx + 1, cy + 1) > level;
                const bool a01 = vat(cx, cy + 1) > level;
                const int mask = (a00 ? 1 : 0) | (a10 ? 2 : 0) | (a11 ? 4 : 0) | (a01 ? 8 : 0);
                if (mask == 0 || mask == 15) { continue; }

                // edge index -> (global id, crossing point)
                // 0 bottom, 1 right, 2 top, 3 left
                auto edge = [&](int which) -> std::pair<long, ContourPoint> {
                    switch (which) {
                        case 0: return {hedge(cx, cy), cross(cx, cy, cx + 1, cy)};
                        case 1: return {vedge(cx + 1, cy), cross(cx + 1, cy, cx + 1, cy + 1)};
                        case 2: return {hedge(cx, cy + 1), cross(cx, cy + 1, cx + 1, cy + 1)};
                        default: return {vedge(cx, cy), cross(cx, cy, cx, cy + 1)};
                    }
                };
                auto emit = [&](int ea, int eb) {
                    const auto [ida, pa] = edge(ea);
                    const auto [idb, pb] = edge(eb);
                    add_segment(ida, pa, idb, pb);
                };

                switch (mask) {
                    case 1: case 14: emit(3, 0); break;
                    case 2: case 13: emit(0, 1); break;
                    case 3: case 12: emit(3, 1); break;
                    case 4: case 11: emit(1, 2); break;
                    case 6: case 9:  emit(0, 2); break;
                    case 7: case 8:  emit(3, 2); break;
                    case 5: case 10: {
                        // saddle: decide the pairing by the cell-center average
                        const double center = 0.25 * (vat(cx, cy) + vat(cx + 1, cy)
                                                      + vat(cx + 1, cy + 1) + vat(cx, cy + 1));
                        const bool center_above = center > level;
                        const bool diag00 = (mask == 5); // corners 00 and 11 above
                        if (diag00 == center_above) {
                            emit(0, 1); emit(3, 2); // band joins 00-11
                        } else {
                            emit(3, 0); emit(1, 2); // isolated corners
                        }
                        break;
                    }
                    default: break;
                }
            }
        }

        // chain segments into polylines; every edge id has degree <= 2
        std::vector<Polyline> lines;
        std::map<long, bool> used;
        auto walk = [&](long start) {
            Polyline line;
            long prev = -1, cur = start;
            while (true) {
                used[cur] = true;
                line.push_back(points.at(cur));
                long next = -1;
                for (const long nb : adj.at(cur)) {
                    if (nb != prev && !used[nb]) {
                        next = nb;
                        break;
                    }
                }
                if (next < 0) {
                    // closed loop: step back onto the start if it is adjacent
                    for (const long nb : adj.at(cur)) {
                        if (nb == start && line.size() > 2) { line.push_back(points.at(start)); }
                    }
                    break;
                }
                prev = cur;
                cur = next;
            }
            return line;
        };
        for (const auto &[id, nbs] : adj) { // open paths first, from their ends
            if (!used[id] && nbs.size() == 1) { lines.push_back(walk(id)); }
        }
        for (const auto &[id, nbs] : adj) { // remaining components are cycles
            if (!used[id]) { lines.push_back(walk(id)); }
        }
        out.polylines.push_back(std::move(lines));
    }
    return out;
}

} // namespace backerr
