#pragma once

#include <vector>

#include "diskscale/clique.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/graph.hpp"
#include "diskscale/solver_core.hpp"

namespace diskscale {

/// Polynomial solver for the Complete target. Pairs are bucketed by exact
/// squared distance: already edges (≤ 2), reachable by scaling one endpoint
/// to r_max (≤ 1 + r_max), reachable only by scaling both (≤ 2·r_max), or
/// hopeless. Both endpoints of every third-bucket pair are forced into the
/// scaled set; among the second-bucket endpoints the disks left unscaled
/// must be pairwise adjacent at radius 1, i.e. form a unit-disk clique, so
/// the maximum clique decides how many scalings the second bucket needs.
inline SolveOutcome solve_complete(const Instance& inst) {
    WallTimer timer;
    SolveOutcome out;
    out.stats.algorithm = "complete";
    out.stats.branches = 1;
    const int n = static_cast<int>(inst.points.size());

    if (inst.r_max <= 1) {
        // Shrinking never creates edges: solvable iff already complete.
        if (recognize(build_unit_disk_graph(inst.points), GraphClass::Complete)) {
            out.yes = true;
            out.witness = all_unit_radii(inst.points.size());
        }
        out.stats.wall_ms = timer.elapsed_ms();
        return out;
    }

    const Rational one_reach2 = (1 + inst.r_max) * (1 + inst.r_max);
    const Rational two_reach2 = 4 * inst.r_max * inst.r_max;
    std::vector<char> forced(n, 0), stretched(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational d2 = dist2(inst.points[i], inst.points[j]);
            if (d2 <= 4) continue;
            if (d2 > two_reach2) { // even two maximal disks cannot touch
                out.stats.wall_ms = timer.elapsed_ms();
                return out;
            }
            if (d2 > one_reach2)
                forced[i] = forced[j] = 1;
            else
                stretched[i] = stretched[j] = 1;
        }

    long long n_forced = 0;
    for (int i = 0; i < n; ++i) n_forced += forced[i];
    if (n_forced > inst.k) {
        out.stats.wall_ms = timer.elapsed_ms();
        return out;
    }

    std::vector<Point> x_points; // second-bucket endpoints not already forced
    for (int i = 0; i < n; ++i)
        if (stretched[i] && !forced[i]) x_points.push_back(inst.points[i]);
    std::vector<int> clique = max_clique_udg(x_points);

    long long budget_left = inst.k - n_forced;
    if (static_cast<long long>(clique.size()) <
        static_cast<long long>(x_points.size()) - budget_left) {
        out.stats.wall_ms = timer.elapsed_ms();
        return out;
    }

    RadiusAssignment r = all_unit_radii(inst.points.size());
    std::vector<char> keep(n, 0);
    for (int idx : clique) keep[x_points[idx].id] = 1;
    for (int i = 0; i < n; ++i)
        if (forced[i] || (stretched[i] && !keep[i])) r.radii[i] = to_double(inst.r_max);
    out.yes = true;
    out.witness = std::move(r);
    out.stats.wall_ms = timer.elapsed_ms();
    return out;
}

} // namespace diskscale
