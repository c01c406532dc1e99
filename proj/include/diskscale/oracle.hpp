#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "diskscale/conscal.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/graph.hpp"
#include "diskscale/solver_core.hpp"
#include "diskscale/solver_xp.hpp"

namespace diskscale {

/// Hard caps for the exhaustive reference solver: it refuses anything bigger
/// instead of silently grinding forever.
struct OracleBudget {
    int max_n = 8;
    long long max_k = 2;
    long long max_lp_calls = 1'000'000;
};

/// Exhaustive reference decision: enumerate every scaled set 𝒯 with |𝒯| ≤ k,
/// then every target graph that differs from the unit disk graph only on
/// pairs incident to 𝒯, pruning just the geometrically impossible values
/// (sum of two radii can never fall below 2·r_min or rise above 2·r_max,
/// and scaled-unscaled sums live in [r_min+1, r_max+1]). Every surviving
/// candidate in the class goes to the LP. Deliberately shares no search
/// structure with solve_xp: no furthest-neighbor reasoning at all.
inline SolveOutcome brute_force_solve(const Instance& inst, GraphClass cls,
                                      const OracleBudget& budget = {}) {
    const int n = static_cast<int>(inst.points.size());
    if (n > budget.max_n)
        throw BudgetExceededError("oracle refuses n = " + std::to_string(n) + " > max_n = " +
                                  std::to_string(budget.max_n));
    if (inst.k > budget.max_k)
        throw BudgetExceededError("oracle refuses k = " + std::to_string(inst.k) +
                                  " > max_k = " + std::to_string(budget.max_k));

    WallTimer timer;
    SolveOutcome out;
    out.stats.algorithm = "oracle";
    const int kmax = static_cast<int>(std::min<long long>(inst.k, n));
    const Graph unit = build_unit_disk_graph(inst.points);
    const Rational both_lo2 = 4 * inst.r_min * inst.r_min;
    const Rational both_hi2 = 4 * inst.r_max * inst.r_max;
    const Rational mixed_lo2 = (inst.r_min + 1) * (inst.r_min + 1);
    const Rational mixed_hi2 = (inst.r_max + 1) * (inst.r_max + 1);

    for (int t = 0; t <= kmax && !out.yes; ++t) {
        detail::for_each_subset_of_size(n, t, [&](const std::vector<int>& scaled) {
            std::vector<char> in_t(n, 0);
            for (int p : scaled) in_t[p] = 1;

            Graph base(n);
            std::vector<std::pair<int, int>> free_pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Rational d2 = dist2(inst.points[i], inst.points[j]);
                    if (!in_t[i] && !in_t[j]) {
                        if (unit.has_edge(i, j)) base.set_edge(i, j);
                    } else if (in_t[i] && in_t[j]) {
                        if (d2 <= both_lo2)
                            base.set_edge(i, j);
                        else if (d2 > both_hi2)
                            ; // forced non-edge
                        else
                            free_pairs.emplace_back(i, j);
                    } else {
                        if (d2 <= mixed_lo2)
                            base.set_edge(i, j);
                        else if (d2 > mixed_hi2)
                            ; // forced non-edge
                        else
                            free_pairs.emplace_back(i, j);
                    }
                }

            const std::size_t f = free_pairs.size();
            Graph h = base;
            for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
                ++out.stats.branches;
                for (std::size_t b = 0; b < f; ++b)
                    h.set_edge(free_pairs[b].first, free_pairs[b].second, (mask >> b) & 1);
                if (!recognize(h, cls)) continue;
                if (++out.stats.lp_calls > budget.max_lp_calls)
                    throw BudgetExceededError("oracle exceeded max_lp_calls = " +
                                              std::to_string(budget.max_lp_calls));
                if (auto r = conscal(inst.points, scaled, h, inst.r_min, inst.r_max)) {
                    out.yes = true;
                    out.witness = std::move(*r);
                    return true;
                }
            }
            return false;
        });
    }
    out.stats.wall_ms = timer.elapsed_ms();
    return out;
}

} // namespace diskscale
