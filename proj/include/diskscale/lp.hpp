#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "diskscale/errors.hpp"

namespace diskscale {

/// One half-plane a·x ≤ b.
struct LpConstraint {
    std::vector<double> a;
    double b = 0.0;
};

/// maximize objective·x subject to constraints. Every variable must be boxed
/// by single-variable constraints (the feasible region, if any, is bounded).
struct LpProblem {
    int dim = 0;
    std::vector<double> objective;
    std::vector<LpConstraint> constraints;
};

struct LpSolution {
    double value = 0.0;
    std::vector<double> x;
};

namespace detail {

/// Near-zero threshold for constraint normals after projection.
inline constexpr double kLpZero = 1e-12;
/// Feasibility slack for the violation test and the final re-check.
inline constexpr double kLpFeasTol = 1e-9;

struct LpSub {
    std::vector<double> lo, hi;          // variable boxes
    std::vector<LpConstraint> general;   // everything else
    std::vector<double> objective;
};

inline double lp_tol(double b) { return kLpFeasTol * std::max(1.0, std::fabs(b)); }

/// Seidel-style randomized incremental LP. Solves max c·x over boxes plus
/// general half-planes; on a violated constraint, eliminates the variable
/// with the largest coefficient and recurses one dimension down on that
/// constraint's boundary. Returns nullopt iff infeasible.
inline std::optional<std::vector<double>> seidel(LpSub sub, std::mt19937_64& rng) {
    const std::size_t d = sub.lo.size();
    for (std::size_t i = 0; i < d; ++i)
        if (sub.lo[i] > sub.hi[i]) return std::nullopt;

    // Start at the box corner that maximizes the objective.
    std::vector<double> x(d);
    for (std::size_t i = 0; i < d; ++i)
        x[i] = sub.objective[i] < 0 ? sub.lo[i] : sub.hi[i];

    // Fisher–Yates with an explicit engine: std::shuffle's draws are
    // implementation-defined, and we promise bit-identical runs.
    for (std::size_t i = sub.general.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(sub.general[i - 1], sub.general[j]);
    }

    for (std::size_t h = 0; h < sub.general.size(); ++h) {
        const LpConstraint& con = sub.general[h];
        double lhs = 0.0;
        for (std::size_t i = 0; i < d; ++i) lhs += con.a[i] * x[i];
        if (lhs <= con.b + lp_tol(con.b)) continue; // already satisfied

        // Violated: the optimum of the prefix lies on this boundary.
        std::size_t piv = 0;
        double best = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            if (std::fabs(con.a[i]) > best) {
                best = std::fabs(con.a[i]);
                piv = i;
            }
        if (best < kLpZero) return std::nullopt; // 0·x ≤ b with b < 0

        // Substitute x_piv = (b − Σ_{i≠piv} a_i x_i) / a_piv everywhere.
        auto project = [&](const std::vector<double>& a, double b) {
            LpConstraint out;
            out.a.reserve(d - 1);
            double f = a[piv] / con.a[piv];
            for (std::size_t i = 0; i < d; ++i)
                if (i != piv) out.a.push_back(a[i] - f * con.a[i]);
            out.b = b - f * con.b;
            return out;
        };

        LpSub next;
        for (std::size_t i = 0; i < d; ++i)
            if (i != piv) {
                next.lo.push_back(sub.lo[i]);
                next.hi.push_back(sub.hi[i]);
            }
        for (std::size_t l = 0; l < h; ++l)
            next.general.push_back(project(sub.general[l].a, sub.general[l].b));
        {
            // The eliminated variable's box follows it into the subproblem.
            std::vector<double> unit(d, 0.0);
            unit[piv] = 1.0;
            next.general.push_back(project(unit, sub.hi[piv]));
            unit[piv] = -1.0;
            next.general.push_back(project(unit, -sub.lo[piv]));
        }
        {
            LpConstraint obj = project(sub.objective, 0.0);
            next.objective = std::move(obj.a);
        }

        auto inner = seidel(std::move(next), rng);
        if (!inner) return std::nullopt;
        for (std::size_t i = 0, t = 0; i < d; ++i)
            if (i != piv) x[i] = (*inner)[t++];
        double rest = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            if (i != piv) rest += con.a[i] * x[i];
        x[piv] = (con.b - rest) / con.a[piv];
    }
    return x;
}

} // namespace detail

/// Solves the boxed LP by seeded Seidel recursion. Deterministic for a given
/// seed. nullopt iff infeasible; "ill-conditioned" when the reported optimum
/// fails its own feasibility re-check.
inline std::optional<LpSolution> solve_lp_max_eps(const LpProblem& lp, std::uint64_t seed) {
    const int d = lp.dim;
    detail::LpSub sub;
    sub.lo.assign(d, -std::numeric_limits<double>::infinity());
    sub.hi.assign(d, std::numeric_limits<double>::infinity());
    sub.objective = lp.objective;

    for (const auto& con : lp.constraints) {
        int nz = -1;
        bool single = true;
        for (int i = 0; i < d && single; ++i)
            if (con.a[i] != 0.0) {
                if (nz != -1) single = false;
                nz = i;
            }
        if (single && nz != -1) {
            double bound = con.b / con.a[nz];
            if (con.a[nz] > 0)
                sub.hi[nz] = std::min(sub.hi[nz], bound);
            else
                sub.lo[nz] = std::max(sub.lo[nz], bound);
        } else if (single) {
            // 0·x ≤ b: vacuous or plainly infeasible.
            if (con.b < -detail::lp_tol(con.b)) return std::nullopt;
        } else {
            sub.general.push_back(con);
        }
    }
    for (int i = 0; i < d; ++i)
        if (std::isinf(sub.lo[i]) || std::isinf(sub.hi[i]))
            throw InputError("lp variable " + std::to_string(i) +
                             " is not boxed by single-variable constraints");

    std::mt19937_64 rng(seed);
    auto x = detail::seidel(std::move(sub), rng);
    if (!x) return std::nullopt;

    for (const auto& con : lp.constraints) {
        double lhs = 0.0;
        for (int i = 0; i < d; ++i) lhs += con.a[i] * (*x)[i];
        if (lhs > con.b + 100 * detail::lp_tol(con.b))
            throw IllConditionedError("lp optimum failed feasibility re-check");
    }
    double value = 0.0;
    for (int i = 0; i < d; ++i) value += lp.objective[i] * (*x)[i];
    return LpSolution{value, std::move(*x)};
}

} // namespace diskscale
