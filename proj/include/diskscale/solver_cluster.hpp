#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "diskscale/conscal.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/graph.hpp"
#include "diskscale/solver_core.hpp"
#include "diskscale/solver_xp.hpp"

namespace diskscale {

namespace detail {

// Pair colors for the cluster search: blue = committed edge, red = committed
// non-edge, green = left to the LP / later rules.
enum : std::uint8_t { kGreen = 0, kBlue = 1, kRed = 2 };

struct ClusterCtx {
    const Instance* inst = nullptr;
    int n = 0;
    long long k = 0;
    std::vector<int> packing_disks;                 // P, ascending ids
    std::vector<std::vector<int>> residual_clusters; // cliques of G − P
    SolveOutcome* out = nullptr;
    const Deadline* deadline = nullptr;
};

struct ClusterState {
    std::vector<std::uint8_t> color; // n×n, symmetric
    Bitset in_t, in_f, in_n;

    std::uint8_t col(int u, int v) const { return color[static_cast<std::size_t>(u) * in_t.size() + v]; }
    void set_col(int u, int v, std::uint8_t c) {
        color[static_cast<std::size_t>(u) * in_t.size() + v] = c;
        color[static_cast<std::size_t>(v) * in_t.size() + u] = c;
    }
};

/// Lexicographically smallest (a,b,c), a < c, with ab and bc blue and ac red.
inline bool find_colorful_p3(const ClusterCtx& ctx, const ClusterState& st, int& a, int& b,
                             int& c) {
    for (a = 0; a < ctx.n; ++a)
        for (b = 0; b < ctx.n; ++b) {
            if (b == a || st.col(a, b) != kBlue) continue;
            for (c = a + 1; c < ctx.n; ++c)
                if (c != b && st.col(b, c) == kBlue && st.col(a, c) == kRed) return true;
        }
    return false;
}

/// Phase 2: no colorful P3 remains and the must-scale queue is empty. Decide
/// the leftover green (scaled-scaled) pairs via blue neighborhoods, try every
/// clustering of the witness-free scaled disks, and hand the fully resolved
/// target graphs to the LP.
inline bool cluster_phase2(const ClusterCtx& ctx, const ClusterState& st) {
    const int n = ctx.n;
    std::vector<int> scaled;
    for (std::size_t v = st.in_t.find_first(); v != Bitset::npos; v = st.in_t.find_next(v))
        scaled.push_back(static_cast<int>(v));

    std::vector<Bitset> blue(scaled.size(), Bitset(n));
    for (std::size_t i = 0; i < scaled.size(); ++i)
        for (int x = 0; x < n; ++x)
            if (st.col(scaled[i], x) == kBlue) blue[i].set(x);

    // Rule 2: two scaled disks sharing any unscaled neighbor share its whole
    // cluster, so their blue sets must coincide; overlap without equality is
    // a contradiction and kills the branch.
    ClusterState work = st;
    for (std::size_t i = 0; i < scaled.size(); ++i)
        for (std::size_t j = i + 1; j < scaled.size(); ++j) {
            if (work.col(scaled[i], scaled[j]) != kGreen) continue;
            if (!blue[i].any() && !blue[j].any()) continue;
            if (blue[i] == blue[j])
                work.set_col(scaled[i], scaled[j], kBlue);
            else if (!blue[i].intersects(blue[j]))
                work.set_col(scaled[i], scaled[j], kRed);
            else
                return false;
        }

    std::vector<int> lone; // scaled disks with no committed unscaled neighbor
    for (std::size_t i = 0; i < scaled.size(); ++i)
        if (!blue[i].any()) lone.push_back(scaled[i]);

    // Restricted-growth strings enumerate every partition of `lone` into
    // clusters; everything else about the target graph is already pinned.
    const std::size_t m = lone.size();
    std::vector<int> rgs(m, 0);
    while (true) {
        ctx.deadline->check();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                work.set_col(lone[i], lone[j], rgs[i] == rgs[j] ? kBlue : kRed);

        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (work.col(u, v) == kBlue) h.set_edge(u, v);
        if (recognize(h, GraphClass::Cluster)) {
            ++ctx.out->stats.lp_calls;
            if (auto r = conscal(ctx.inst->points, scaled, h, ctx.inst->r_min,
                                 ctx.inst->r_max)) {
                ctx.out->yes = true;
                ctx.out->witness = std::move(*r);
                return true;
            }
        }

        // next restricted-growth string
        std::size_t i = m;
        while (i-- > 0) {
            int prefix_max = -1;
            for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == std::size_t(-1)) return false;
    }
}

inline bool cluster_dfs(const ClusterCtx& ctx, const ClusterState& st);

/// Scales w: branch on its furthest unscaled neighbor (far) and closest
/// unscaled non-neighbor (clo), recolor w's pairs by the resulting distance
/// window (Rule 1), queue the in-window disks for scaling, and recurse.
inline bool cluster_branch_on(const ClusterCtx& ctx, const ClusterState& st, int w) {
    const auto& pts = ctx.inst->points;
    const int n = ctx.n;
    const long long k = ctx.k;

    Bitset excluded = st.in_t | st.in_n;
    excluded.set(w);

    // Branching 1: far(w) is nil, a packing disk, or one of the k furthest
    // members of one of the k clusters of G − P nearest to w.
    std::vector<int> far_cands{-1};
    Bitset seen(n);
    auto push_far = [&](int x) {
        if (excluded[x] || seen[x]) return;
        seen.set(x);
        far_cands.push_back(x);
    };
    for (int p : ctx.packing_disks) push_far(p);
    {
        std::vector<std::pair<Rational, std::size_t>> order; // (min dist2, cluster index)
        for (std::size_t ci = 0; ci < ctx.residual_clusters.size(); ++ci) {
            Rational best = dist2(pts[w], pts[ctx.residual_clusters[ci][0]]);
            for (int m : ctx.residual_clusters[ci]) best = std::min(best, dist2(pts[w], pts[m]));
            order.emplace_back(best, ci);
        }
        std::sort(order.begin(), order.end()); // ties: smaller index = smaller member id
        for (std::size_t oi = 0; oi < order.size() && oi < static_cast<std::size_t>(k); ++oi) {
            const auto& members = ctx.residual_clusters[order[oi].second];
            std::vector<std::pair<Rational, int>> far_first;
            for (int m : members) far_first.emplace_back(dist2(pts[w], pts[m]), m);
            std::sort(far_first.begin(), far_first.end(), [](const auto& x, const auto& y) {
                return x.first != y.first ? x.first > y.first : x.second < y.second;
            });
            for (std::size_t mi = 0; mi < far_first.size() && mi < static_cast<std::size_t>(k); ++mi)
                push_far(far_first[mi].second);
        }
    }

    for (int far : far_cands) {
        ctx.deadline->check();
        Rational d_far2 = far == -1 ? Rational(0) : dist2(pts[w], pts[far]);

        // Branching 2: clo(w) is nil or one of the k nearest eligible disks
        // strictly beyond the far distance (ties by id).
        std::vector<int> clo_cands{-1};
        {
            std::vector<std::pair<Rational, int>> beyond;
            for (int x = 0; x < n; ++x)
                if (!excluded[x] && dist2(pts[w], pts[x]) > d_far2)
                    beyond.emplace_back(dist2(pts[w], pts[x]), x);
            std::sort(beyond.begin(), beyond.end());
            for (std::size_t i = 0; i < beyond.size() && i < static_cast<std::size_t>(k); ++i)
                clo_cands.push_back(beyond[i].second);
        }

        for (int clo : clo_cands) {
            if (far == -1 && clo == -1) continue; // means "no unscaled disks at all"

            ClusterState next = st;
            next.in_t.set(w);
            next.in_n.reset(w);
            if (far != -1) next.in_f.set(far);
            if (clo != -1) next.in_f.set(clo);
            std::optional<Rational> d_clo2;
            if (clo != -1) d_clo2 = dist2(pts[w], pts[clo]);

            // Rule 1: outside [0, d_far] and inside (d_far, d_clo) every
            // still-unscaled disk's relation to w is pinned or it must scale.
            bool dead = false;
            Bitset must_scale(n);
            for (int x = 0; x < n && !dead; ++x) {
                if (next.in_t[x] || next.in_n[x]) continue;
                Rational d2 = dist2(pts[w], pts[x]);
                if (d2 <= d_far2)
                    next.set_col(w, x, kBlue);
                else if (d_clo2 && d2 >= *d_clo2)
                    next.set_col(w, x, kRed);
                else {
                    next.set_col(w, x, kGreen);
                    must_scale.set(x);
                    if (next.in_f[x]) dead = true; // forced to scale a forbidden disk
                }
            }
            if (dead) continue;
            next.in_n |= must_scale;
            if (static_cast<long long>(next.in_t.count() + next.in_n.count()) > k) continue;

            Bitset pool = next.in_t | next.in_n;
            for (std::size_t u = pool.find_first(); u != Bitset::npos; u = pool.find_next(u))
                for (std::size_t v = pool.find_next(u); v != Bitset::npos; v = pool.find_next(v))
                    next.set_col(static_cast<int>(u), static_cast<int>(v), kGreen);

            if (cluster_dfs(ctx, next)) return true;
        }
    }
    return false;
}

inline bool cluster_dfs(const ClusterCtx& ctx, const ClusterState& st) {
    ctx.deadline->check();
    ++ctx.out->stats.branches;
    if (static_cast<long long>(st.in_t.count() + st.in_n.count()) > ctx.k) return false;

    if (st.in_n.any()) // queued disks must scale before anything else moves
        return cluster_branch_on(ctx, st, static_cast<int>(st.in_n.find_first()));

    int a, b, c;
    if (!find_colorful_p3(ctx, st, a, b, c)) return cluster_phase2(ctx, st);

    // One of the path's vertices must scale; those known unscaled can't.
    std::vector<int> z{a, b, c};
    std::sort(z.begin(), z.end());
    for (int w : z)
        if (!st.in_t[w] && !st.in_f[w] && cluster_branch_on(ctx, st, w)) return true;
    return false;
}

} // namespace detail

/// FPT solver for the Cluster target. Phase 1 bounds the search with a
/// maximal P3 packing and branches on colorful P3s, guessing for every newly
/// scaled disk a far/close pair of unscaled witnesses; Phase 2 finishes the
/// leftover degrees of freedom and calls the LP. Tiny instances (n ≤ k) fall
/// back to plain scaled-set enumeration.
inline SolveOutcome solve_cluster_fpt(const Instance& inst,
                                      const Deadline& deadline = Deadline::none()) {
    const int n = static_cast<int>(inst.points.size());
    if (static_cast<long long>(n) <= inst.k) {
        SolveOutcome out = solve_xp(inst, GraphClass::Cluster, deadline);
        out.stats.algorithm = "cluster-fpt(enumeration)";
        return out;
    }

    WallTimer timer;
    SolveOutcome out;
    out.stats.algorithm = "cluster-fpt";

    const Graph unit = build_unit_disk_graph(inst.points);
    const P3Packing pack = maximal_p3_packing(unit);
    if (static_cast<long long>(pack.triples.size()) >= inst.k + 1) {
        // Each vertex-disjoint induced P3 needs its own scaled disk.
        out.stats.branches = 1;
        out.stats.wall_ms = timer.elapsed_ms();
        return out;
    }

    detail::ClusterCtx ctx;
    ctx.inst = &inst;
    ctx.n = n;
    ctx.k = inst.k;
    ctx.out = &out;
    ctx.deadline = &deadline;
    for (std::size_t v = pack.covered.find_first(); v != Bitset::npos;
         v = pack.covered.find_next(v))
        ctx.packing_disks.push_back(static_cast<int>(v));
    {
        // G − P is a cluster graph by maximality; recover its cliques.
        std::vector<int> uncovered;
        for (int v = 0; v < n; ++v)
            if (!pack.covered[v]) uncovered.push_back(v);
        Graph sub(uncovered.size());
        for (std::size_t i = 0; i < uncovered.size(); ++i)
            for (std::size_t j = i + 1; j < uncovered.size(); ++j)
                if (unit.has_edge(uncovered[i], uncovered[j]))
                    sub.set_edge(i, j);
        for (const auto& comp : clusters_of(sub)) {
            std::vector<int> members;
            for (int idx : comp) members.push_back(uncovered[idx]);
            ctx.residual_clusters.push_back(std::move(members));
        }
    }

    detail::ClusterState root;
    root.color.assign(static_cast<std::size_t>(n) * n, detail::kRed);
    root.in_t.resize(n);
    root.in_f.resize(n);
    root.in_n.resize(n);
    for (int u = 0; u < n; ++u) {
        root.set_col(u, u, detail::kGreen); // diagonal unused
        for (int v = u + 1; v < n; ++v)
            if (unit.has_edge(u, v)) root.set_col(u, v, detail::kBlue);
    }

    detail::cluster_dfs(ctx, root);
    out.stats.wall_ms = timer.elapsed_ms();
    return out;
}

} // namespace diskscale
