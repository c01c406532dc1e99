#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/graph.hpp"
#include "diskscale/lp.hpp"

namespace diskscale {

/// Fixed seed for the constraint shuffle inside conscal: identical inputs
/// must yield bit-identical witnesses across runs and machines.
inline constexpr std::uint64_t kConscalSeed = 0x5ca1ab1e0ddba11ULL;

/// Builds the radius-feasibility LP for a fixed scaled set and target graph:
/// variables x_p (p in `scaled`, in ascending-id order) then ε last;
/// maximize ε. Box r_min ≤ x_p ≤ r_max and 0 ≤ ε ≤ E_cap (max pairwise
/// distance + 1 — the program is otherwise unbounded when no non-adjacency
/// constraint mentions ε). Throws UnscaledMismatchError when the unscaled
/// part of `target` already disagrees with the unit disk graph.
inline LpProblem build_conscal_lp(const std::vector<Point>& points,
                                  const std::vector<int>& scaled, const Graph& target,
                                  const Rational& r_min, const Rational& r_max) {
    const std::size_t n = points.size();
    std::vector<char> in_t(n, 0);
    for (int p : scaled) in_t[p] = 1;

    // The unscaled disks keep radius 1, so their pairwise adjacency is not
    // negotiable; a mismatch means no assignment over `scaled` can work.
    for (std::size_t u = 0; u < n; ++u) {
        if (in_t[u]) continue;
        for (std::size_t v = u + 1; v < n; ++v) {
            if (in_t[v]) continue;
            bool unit_edge = dist2(points[u], points[v]) <= 4;
            if (unit_edge != target.has_edge(u, v))
                throw UnscaledMismatchError(
                    "unscaled disks " + std::to_string(u) + " and " + std::to_string(v) +
                    (unit_edge ? " intersect at radius 1 but the target graph omits the edge"
                               : " are apart at radius 1 but the target graph has the edge"));
        }
    }

    double e_cap = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e_cap = std::max(e_cap, std::sqrt(to_double(dist2(points[i], points[j]))));
    e_cap += 1.0;

    const int t = static_cast<int>(scaled.size());
    LpProblem lp;
    lp.dim = t + 1; // x_0..x_{t-1}, then ε
    lp.objective.assign(lp.dim, 0.0);
    lp.objective[t] = 1.0;

    auto add = [&](std::vector<std::pair<int, double>> coeffs, double b) {
        LpConstraint con;
        con.a.assign(lp.dim, 0.0);
        for (auto [i, c] : coeffs) con.a[i] = c;
        con.b = b;
        lp.constraints.push_back(std::move(con));
    };

    for (int i = 0; i < t; ++i) {
        add({{i, 1.0}}, to_double(r_max));
        add({{i, -1.0}}, -to_double(r_min));
    }
    add({{t, -1.0}}, 0.0);
    add({{t, 1.0}}, e_cap);

    for (int i = 0; i < t; ++i) {
        const Point& p = points[scaled[i]];
        for (std::size_t u = 0; u < n; ++u) {
            if (in_t[u]) continue;
            double d = std::sqrt(to_double(dist2(p, points[u])));
            if (target.has_edge(scaled[i], u))
                add({{i, -1.0}}, 1.0 - d); // x_p + 1 ≥ d
            else
                add({{i, 1.0}, {t, 1.0}}, d - 1.0); // x_p + 1 ≤ d − ε
        }
        for (int j = i + 1; j < t; ++j) {
            double d = std::sqrt(to_double(dist2(p, points[scaled[j]])));
            if (target.has_edge(scaled[i], scaled[j]))
                add({{i, -1.0}, {j, -1.0}}, -d); // x_p + x_q ≥ d
            else
                add({{i, 1.0}, {j, 1.0}, {t, 1.0}}, d); // x_p + x_q ≤ d − ε
        }
    }
    return lp;
}

/// Decides whether radii for `scaled` can realise `target` exactly, with
/// strict separation on non-edges. Returns the witnessing assignment (radius
/// 1 outside `scaled`) or nullopt. The strictness floor ε_min stands in for
/// the paper-level requirement ε > 0 in binary64.
inline std::optional<RadiusAssignment> conscal(const std::vector<Point>& points,
                                               const std::vector<int>& scaled,
                                               const Graph& target, const Rational& r_min,
                                               const Rational& r_max) {
    LpProblem lp = build_conscal_lp(points, scaled, target, r_min, r_max);

    // E_cap was recorded as ε's upper box bound (last constraint family).
    double e_cap = 1.0;
    const int t = static_cast<int>(scaled.size());
    for (const auto& con : lp.constraints)
        if (con.a[t] == 1.0 && std::count(con.a.begin(), con.a.end(), 0.0) == lp.dim - 1)
            e_cap = std::max(e_cap, con.b);

    auto sol = solve_lp_max_eps(lp, kConscalSeed);
    if (!sol) return std::nullopt;
    const double eps_min = 1e-7 * std::max(1.0, e_cap);
    if (sol->value < eps_min) return std::nullopt;

    RadiusAssignment r = all_unit_radii(points.size());
    for (int i = 0; i < t; ++i)
        r.radii[scaled[i]] =
            std::clamp(sol->x[i], to_double(r_min), to_double(r_max));

    // The ε slack dwarfs the τ edge tolerance, so the rebuilt graph matching
    // the target is a numerical health check, not a tautology.
    if (build_disk_graph(points, r) != target)
        throw IllConditionedError("conscal optimum does not reproduce the target graph");
    return r;
}

} // namespace diskscale
