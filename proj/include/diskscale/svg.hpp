#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/io.hpp"

namespace diskscale {

/// Renders one circle per disk (radius 1 unless a solution says otherwise)
/// plus a center dot, scaled disks stroked distinctly, viewBox fitted with
/// a 10% margin. Numbers go through shortest-round-trip formatting only,
/// so identical inputs produce identical bytes.
inline std::string render_svg(const Instance& inst,
                              const std::optional<RadiusAssignment>& solution = {}) {
    const std::size_t n = inst.points.size();
    if (solution && solution->radii.size() != n)
        throw InputError("solution length does not match the instance");
    if (n > 200'000) throw InputError("too many disks to render");

    double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1, max_r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        double r = solution ? solution->radii[i] : 1.0;
        double x = to_double(inst.points[i].x), y = -to_double(inst.points[i].y);
        if (i == 0) {
            lo_x = x - r, hi_x = x + r, lo_y = y - r, hi_y = y + r, max_r = r;
        } else {
            lo_x = std::min(lo_x, x - r), hi_x = std::max(hi_x, x + r);
            lo_y = std::min(lo_y, y - r), hi_y = std::max(hi_y, y + r);
            max_r = std::max(max_r, r);
        }
    }
    double w = hi_x - lo_x, h = hi_y - lo_y;
    double margin = 0.1 * std::max({w, h, 1.0});
    double stroke = 0.01 * std::max({w, h, 1.0});
    double dot = 0.02 * max_r;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += double_to_string(lo_x - margin) + " " + double_to_string(lo_y - margin) + " " +
           double_to_string(w + 2 * margin) + " " + double_to_string(h + 2 * margin) + "\">\n";
    out += "<style>circle.disk{fill:#3b6ea5;fill-opacity:0.06;stroke:#3b6ea5;stroke-width:" +
           double_to_string(stroke) +
           "}circle.disk.scaled{fill:#c23b22;fill-opacity:0.10;stroke:#c23b22}circle.dot{"
           "fill:#222222;stroke:none}</style>\n";
    for (std::size_t i = 0; i < n; ++i) {
        double r = solution ? solution->radii[i] : 1.0;
        bool scaled = solution && solution->radii[i] != 1.0;
        out += std::string("<circle class=\"disk") + (scaled ? " scaled" : "") + "\" cx=\"" +
               double_to_string(to_double(inst.points[i].x)) + "\" cy=\"" +
               double_to_string(-to_double(inst.points[i].y)) + "\" r=\"" +
               double_to_string(r) + "\"/>\n";
    }
    for (std::size_t i = 0; i < n; ++i)
        out += "<circle class=\"dot\" cx=\"" + double_to_string(to_double(inst.points[i].x)) +
               "\" cy=\"" + double_to_string(-to_double(inst.points[i].y)) + "\" r=\"" +
               double_to_string(dot) + "\"/>\n";
    out += "</svg>\n";
    return out;
}

} // namespace diskscale
