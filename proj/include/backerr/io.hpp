#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "backerr/contour.hpp"
#include "backerr/errors.hpp"
#include "backerr/field.hpp"

namespace backerr {

//-----------------------------------------------------------------------------
// CSV field dump.
//-----------------------------------------------------------------------------
// One row per node, row-major (im outer, re inner, both ascending), 17
// significant digits so doubles round-trip. Singular nodes keep their row,
// with inf in the delta columns.
inline void
emit_csv(const Field &field, const std::string &path) {
    std::FILE *fp = std::fopen(path.c_str(), "wb");
    if (!fp) { throw IoFailure("cannot open for writing: " + path); }
    std::fputs("mu_re,mu_im,k,delta_re,delta_im,abs_delta,abs_R,classical,orderstar,singular\n", fp);
    for (int iy = 0; iy < field.grid.ny; ++iy) {
        for (int ix = 0; ix < field.grid.nx; ++ix) {
            const ResidualSample &s = field.at(ix, iy);
            std::fprintf(fp, "%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%d,%d,%d\n",
                         s.mu.real(), s.mu.imag(), s.k,
                         s.delta.real(), s.delta.imag(), s.abs_delta,
                         std::abs(s.r_value),
                         s.classical_inside ? 1 : 0,
                         static_cast<int>(s.orderstar_class),
                         s.singular ? 1 : 0);
        }
    }
    if (std::fclose(fp) != 0) { throw IoFailure("write failed: " + path); }
}

namespace svg_detail {

// 21 fill bins: |delta| in 5% steps up to 1, then white beyond, so the
// region the method cannot explain at all stays blank.
inline std::string
fill_for(const ResidualSample &s) {
    if (s.singular || !(s.abs_delta <= 1.0)) { return "#ffffff"; }
    int bin = static_cast<int>(s.abs_delta / 0.05);
    if (bin > 19) { bin = 19; }
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", (235 - 9 * bin) & 0xff,
                  (240 - 7 * bin) & 0xff, (255 - 2 * bin) & 0xff);
    return buf;
}

} // namespace svg_detail

//-----------------------------------------------------------------------------
// SVG rendering: shaded |delta| cells, classical-region overlay, contour strokes.
//-----------------------------------------------------------------------------
inline void
emit_svg(const Field &field, const std::vector<ContourSet> &sets, const std::string &path) {
    const GridSpec &g = field.grid;
    const double W = 720.0;
    const double H = W * (g.im_max - g.im_min) / (g.re_max - g.re_min);
    const double margin = 24.0;
    auto X = [&](double re) { return margin + (re - g.re_min) / (g.re_max - g.re_min) * W; };
    auto Y = [&](double im) { return margin + (g.im_max - im) / (g.im_max - g.im_min) * H; };

    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(3);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (W + 2 * margin)
        << "\" height=\"" << (H + 2 * margin) << "\" viewBox=\"0 0 " << (W + 2 * margin)
        << " " << (H + 2 * margin) << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << (W + 2 * margin) << "\" height=\"" << (H + 2 * margin)
        << "\" fill=\"#ffffff\"/>\n";

    // |delta| shading, runs of equal fill merged per row
    const double cw = W / g.nx, ch = H / g.ny;
    for (int iy = 0; iy < g.ny; ++iy) {
        int run_start = 0;
        std::string run_fill = svg_detail::fill_for(field.at(0, iy));
        auto flush = [&](int end) {
            if (run_fill != "#ffffff") { // the background already is white
                svg << "<rect x=\"" << (margin + run_start * cw) << "\" y=\"" << (margin + (g.ny - 1 - iy) * ch)
                    << "\" width=\"" << ((end - run_start) * cw) << "\" height=\"" << ch
                    << "\" fill=\"" << run_fill << "\"/>\n";
            }
        };
        for (int ix = 1; ix < g.nx; ++ix) {
            const std::string f = svg_detail::fill_for(field.at(ix, iy));
            if (f != run_fill) {
                flush(ix);
                run_start = ix;
                run_fill = f;
            }
        }
        flush(g.nx);
    }

    // classical stability region as a translucent overlay
    for (int iy = 0; iy < g.ny; ++iy) {
        int run_start = -1;
        for (int ix = 0; ix <= g.nx; ++ix) {
            const bool inside = ix < g.nx && field.at(ix, iy).classical_inside;
            if (inside && run_start < 0) { run_start = ix; }
            if (!inside && run_start >= 0) {
                svg << "<rect x=\"" << (margin + run_start * cw) << "\" y=\"" << (margin + (g.ny - 1 - iy) * ch)
                    << "\" width=\"" << ((ix - run_start) * cw) << "\" height=\"" << ch
                    << "\" fill=\"#404048\" fill-opacity=\"0.18\"/>\n";
                run_start = -1;
            }
        }
    }

    // contour strokes
    static const char *strokes[] = {"#b03030", "#2060a0", "#208040"};
    for (std::size_t si = 0; si < sets.size(); ++si) {
        const char *stroke = strokes[si % 3];
        for (const auto &level_lines : sets[si].polylines) {
            for (const auto &line : level_lines) {
                if (line.size() < 2) { continue; }
                svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" points=\"";
                for (std::size_t i = 0; i < line.size(); ++i) {
                    if (i) { svg << ' '; }
                    svg << X(line[i][0]) << ',' << Y(line[i][1]);
                }
                svg << "\"/>\n";
            }
        }
    }

    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << W << "\" height=\"" << H
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << margin << "\" y=\"" << (margin - 8) << "\" font-size=\"12\">re ["
        << g.re_min << ", " << g.re_max << "]  im [" << g.im_min << ", " << g.im_max << "]</text>\n";
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) { throw IoFailure("cannot open for writing: " + path); }
    out << svg.str();
    if (!out) { throw IoFailure("write failed: " + path); }
}

//-----------------------------------------------------------------------------
// Skeleton file: header t,y_re,y_im then one row per point, t strictly increasing.
//-----------------------------------------------------------------------------
struct SkeletonPoint {
    double t;
    Cplx y;
};

inline std::vector<SkeletonPoint>
read_skeleton_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) { throw BadFile("cannot open skeleton file: " + path); }
    std::string line;
    if (!std::getline(in, line)) { throw BadFile("empty skeleton file: " + path); }
    // tolerate whitespace and a BOM, nothing else
    std::string squashed;
    for (const char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c)) && static_cast<unsigned char>(c) < 0x80) { squashed += c; }
    }
    if (squashed != "t,y_re,y_im") { throw BadFile("skeleton header must be t,y_re,y_im"); }
    std::vector<SkeletonPoint> pts;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) { continue; }
        double t, yr, yi;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &yr, &yi) != 3) {
            throw BadFile("bad skeleton row at line " + std::to_string(lineno));
        }
        if (!pts.empty() && !(t > pts.back().t)) {
            throw BadFile("skeleton t must strictly increase at line " + std::to_string(lineno));
        }
        pts.push_back({t, Cplx(yr, yi)});
    }
    if (pts.size() < 2) { throw BadFile("skeleton needs at least two points"); }
    return pts;
}

} // namespace backerr
