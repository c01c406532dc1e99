#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "diskscale/conscal.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/graph.hpp"
#include "diskscale/solver_core.hpp"

namespace diskscale {

namespace detail {

/// Enumerates subsets of {0..n-1} of size exactly t in lexicographic order,
/// invoking fn(subset) until it returns true; propagates that result.
template <typename Fn>
bool for_each_subset_of_size(int n, int t, Fn&& fn) {
    std::vector<int> sel(t);
    for (int i = 0; i < t; ++i) sel[i] = i;
    if (t > n) return false;
    while (true) {
        if (fn(sel)) return true;
        int i = t - 1;
        while (i >= 0 && sel[i] == n - t + i) --i;
        if (i < 0) return false;
        ++sel[i];
        for (int j = i + 1; j < t; ++j) sel[j] = sel[j - 1] + 1;
    }
}

} // namespace detail

/// Generic XP solver: guess the scaled set 𝒯, guess each scaled disk's
/// furthest unscaled neighbor (adjacency to unscaled disks is then forced,
/// since it is monotone in distance), enumerate the remaining free
/// scaled-scaled adjacencies, and LP-check every candidate target graph the
/// recognizer accepts. Works for any target class with a recognizer.
inline SolveOutcome solve_xp(const Instance& inst, GraphClass cls,
                             const Deadline& deadline = Deadline::none()) {
    WallTimer timer;
    SolveOutcome out;
    out.stats.algorithm = "xp";
    const int n = static_cast<int>(inst.points.size());
    const int kmax = static_cast<int>(std::min<long long>(inst.k, n));
    const Graph unit = build_unit_disk_graph(inst.points);
    const Rational reach2 = (inst.r_max + 1) * (inst.r_max + 1);
    const Rational meet2 = 4 * inst.r_min * inst.r_min;   // both scaled, forced edge
    const Rational apart2 = 4 * inst.r_max * inst.r_max;  // both scaled, forced non-edge

    for (int t = 0; t <= kmax && !out.yes; ++t) {
        detail::for_each_subset_of_size(n, t, [&](const std::vector<int>& scaled) {
            deadline.check();
            std::vector<char> in_t(n, 0);
            for (int p : scaled) in_t[p] = 1;

            // far(p) candidates: nil, then one representative unscaled disk
            // per distinct distance (smallest id), nearest first. The ≤-rule
            // makes any two equidistant choices derive the same adjacency.
            std::vector<std::vector<int>> far_options(t); // -1 = nil
            for (int i = 0; i < t; ++i) {
                std::vector<std::pair<Rational, int>> by_dist;
                for (int u = 0; u < n; ++u)
                    if (!in_t[u]) by_dist.emplace_back(dist2(inst.points[scaled[i]], inst.points[u]), u);
                std::sort(by_dist.begin(), by_dist.end());
                auto& opts = far_options[i];
                opts.push_back(-1);
                for (std::size_t j = 0; j < by_dist.size(); ++j)
                    if (j == 0 || by_dist[j].first != by_dist[j - 1].first)
                        opts.push_back(by_dist[j].second);
            }

            // Scaled-scaled pairs: geometry forces some values, the rest are
            // enumerated below (non-edge first).
            std::vector<std::pair<int, int>> free_pairs;
            Graph base(n);
            bool dead = false;
            for (int i = 0; i < t && !dead; ++i)
                for (int j = i + 1; j < t && !dead; ++j) {
                    Rational d2 = dist2(inst.points[scaled[i]], inst.points[scaled[j]]);
                    if (d2 <= meet2) {
                        if (d2 > apart2) dead = true; // r_min > r_max cannot happen; guard anyway
                        base.set_edge(scaled[i], scaled[j]);
                    } else if (d2 > apart2) {
                        ; // forced non-edge, leave unset
                    } else {
                        free_pairs.emplace_back(scaled[i], scaled[j]);
                    }
                }
            if (dead) return false;
            for (int u = 0; u < n; ++u)
                if (!in_t[u])
                    for (std::size_t v = unit.row(u).find_next(u); v != Bitset::npos;
                         v = unit.row(u).find_next(v))
                        if (!in_t[v]) base.set_edge(u, static_cast<int>(v));

            // Odometer over far choices, last scaled disk varying fastest.
            std::vector<std::size_t> pick(t, 0);
            while (true) {
                deadline.check();
                ++out.stats.branches;
                Graph h = base;
                bool feasible = true;
                for (int i = 0; i < t && feasible; ++i) {
                    int far = far_options[i][pick[i]];
                    if (far == -1) continue;
                    Rational cutoff = dist2(inst.points[scaled[i]], inst.points[far]);
                    if (cutoff > reach2) {
                        feasible = false; // even r_max cannot reach that far
                        break;
                    }
                    for (int u = 0; u < n; ++u)
                        if (!in_t[u] && dist2(inst.points[scaled[i]], inst.points[u]) <= cutoff)
                            h.set_edge(scaled[i], u);
                }

                if (feasible) {
                    const std::size_t f = free_pairs.size();
                    for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
                        for (std::size_t b = 0; b < f; ++b)
                            h.set_edge(free_pairs[b].first, free_pairs[b].second,
                                       (mask >> b) & 1);
                        if (!recognize(h, cls)) continue;
                        ++out.stats.lp_calls;
                        if (auto r = conscal(inst.points, scaled, h, inst.r_min, inst.r_max)) {
                            out.yes = true;
                            out.witness = std::move(*r);
                            return true;
                        }
                    }
                }

                int i = t - 1;
                while (i >= 0 && pick[i] + 1 == far_options[i].size()) pick[i--] = 0;
                if (i < 0) break;
                ++pick[i];
            }
            return false;
        });
    }
    out.stats.wall_ms = timer.elapsed_ms();
    return out;
}

} // namespace diskscale
