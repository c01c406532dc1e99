#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "diskscale/geometry.hpp"
#include "diskscale/matching.hpp"

namespace diskscale {

/// Maximum clique of the unit disk graph on `points` (Clark–Colbourn–Johnson
/// style). For every pair (a,b) assumed diametral, the points within distance
/// ‖ab‖ of both lie in a lens; each side of line ab has pairwise distance
/// ≤ ‖ab‖ ≤ 2 and is therefore a clique, so non-edges inside the lens only
/// cross the line. A maximum clique of such a co-bipartite graph is the
/// complement of a minimum vertex cover of the crossing non-edges (König).
/// Returns vertex ids ascending; deterministic (first best in scan order).
inline std::vector<int> max_clique_udg(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    if (n == 0) return {};
    std::vector<int> best{0}; // singletons are always cliques

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            Rational d2ab = dist2(points[a], points[b]);
            if (d2ab > 4) continue;

            // Split lens membership by side of line ab; points exactly on
            // the line count as left so the partition is deterministic.
            std::vector<int> left, right;
            for (std::size_t p = 0; p < n; ++p) {
                if (dist2(points[p], points[a]) > d2ab) continue;
                if (dist2(points[p], points[b]) > d2ab) continue;
                Rational cross = (points[b].x - points[a].x) * (points[p].y - points[a].y) -
                                 (points[b].y - points[a].y) * (points[p].x - points[a].x);
                (cross >= 0 ? left : right).push_back(static_cast<int>(p));
            }
            if (left.size() + right.size() <= best.size()) continue;

            std::vector<std::pair<int, int>> conflicts;
            for (std::size_t i = 0; i < left.size(); ++i)
                for (std::size_t j = 0; j < right.size(); ++j)
                    if (dist2(points[left[i]], points[right[j]]) > 4)
                        conflicts.emplace_back(static_cast<int>(i), static_cast<int>(j));

            auto mm = max_bipartite_matching(static_cast<int>(left.size()),
                                             static_cast<int>(right.size()), conflicts);
            std::size_t clique_size = left.size() + right.size() - mm.size;
            if (clique_size <= best.size()) continue;

            std::vector<char> drop_l(left.size()), drop_r(right.size());
            for (int i : mm.cover_left) drop_l[i] = 1;
            for (int j : mm.cover_right) drop_r[j] = 1;
            std::vector<int> clique;
            for (std::size_t i = 0; i < left.size(); ++i)
                if (!drop_l[i]) clique.push_back(left[i]);
            for (std::size_t j = 0; j < right.size(); ++j)
                if (!drop_r[j]) clique.push_back(right[j]);
            std::sort(clique.begin(), clique.end());
            best = std::move(clique);
        }
    }
    return best;
}

} // namespace diskscale
