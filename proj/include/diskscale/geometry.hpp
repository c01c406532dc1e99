#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "diskscale/graph.hpp"
#include "diskscale/rational.hpp"

namespace diskscale {

/// Planar point with exact coordinates. `id` is the stable 0-based index of
/// the point inside its instance; coincident coordinates are allowed (stacked
/// copies of a disk are deliberate in the reduction gadgets).
struct Point {
    Rational x;
    Rational y;
    int id = 0;
};

/// A scaling problem: which disks (at most k of them) may change radius into
/// [r_min, r_max] so that the resulting disk graph lands in a target class.
struct Instance {
    std::vector<Point> points;
    Rational r_min = 1;
    Rational r_max = 1;
    long long k = 0;
};

/// Per-point radii. Unscaled disks carry exactly 1.0; everything else is
/// considered scaled.
struct RadiusAssignment {
    std::vector<double> radii;

    [[nodiscard]] std::vector<int> scaled_set() const {
        std::vector<int> t;
        for (std::size_t i = 0; i < radii.size(); ++i)
            if (radii[i] != 1.0) t.push_back(static_cast<int>(i));
        return t;
    }
};

inline RadiusAssignment all_unit_radii(std::size_t n) {
    return RadiusAssignment{std::vector<double>(n, 1.0)};
}

/// Exact squared Euclidean distance.
inline Rational dist2(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Edge tolerance for binary64 radius sums: d ≤ r(p)+r(q)+τ counts as an
/// edge, and the same slack is granted on radius-range checks. Absorbs LP
/// rounding without disturbing the exact unit-distance comparisons.
inline constexpr double kEdgeTol = 1e-9;

/// Disk intersection under mixed precision: exact squared distance, binary64
/// radii. Shared by graph construction and witness verification so the two
/// can never disagree.
inline bool disks_intersect(const Rational& d2, double r1, double r2) {
    return std::sqrt(to_double(d2)) <= r1 + r2 + kEdgeTol;
}

inline Graph build_disk_graph(const std::vector<Point>& points, const RadiusAssignment& r) {
    const std::size_t n = points.size();
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (disks_intersect(dist2(points[i], points[j]), r.radii[i], r.radii[j]))
                g.set_edge(i, j);
    return g;
}

/// All radii 1: adjacency decided exactly (dist2 ≤ 4, closed disks).
inline Graph build_unit_disk_graph(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist2(points[i], points[j]) <= 4)
                g.set_edge(i, j);
    return g;
}

} // namespace diskscale
