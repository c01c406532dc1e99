#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diskscale/errors.hpp"
#include "diskscale/rational.hpp"

namespace diskscale {

/// Direction at a vertex with no incident edge route; gadget generators park
/// per-vertex blocker disks there.
enum class FreeDir { Left, Right, Up, Down };

inline std::pair<int, int> free_dir_step(FreeDir d) {
    switch (d) {
    case FreeDir::Left: return {-1, 0};
    case FreeDir::Right: return {1, 0};
    case FreeDir::Up: return {0, 1};
    case FreeDir::Down: return {0, -1};
    }
    return {0, 0};
}

struct EmbeddedVertex {
    int id = 0;
    Rational x;
    Rational y;
    FreeDir free = FreeDir::Up;
};

/// One edge's rectilinear route: polyline from u's position to v's position,
/// axis-parallel segments, at most 3 bends.
struct EmbeddedEdge {
    int u = 0;
    int v = 0;
    std::vector<std::pair<Rational, Rational>> route;
};

/// A cubic graph with a rectilinear planar embedding on the grid. Computing
/// such embeddings is out of scope; they arrive as fixtures.
struct EmbeddedGraph {
    std::vector<EmbeddedVertex> vertices;
    std::vector<EmbeddedEdge> edges;
};

namespace detail {

struct Seg {
    Rational x1, y1, x2, y2; // axis-parallel
    int edge = 0;            // owning edge index
    int index = 0;           // position within the route
};

inline bool seg_is_vertical(const Seg& s) { return s.x1 == s.x2; }

inline std::vector<Seg> edge_segments(const EmbeddedGraph& g) {
    std::vector<Seg> segs;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& route = g.edges[e].route;
        for (std::size_t i = 0; i + 1 < route.size(); ++i)
            segs.push_back({route[i].first, route[i].second, route[i + 1].first,
                            route[i + 1].second, static_cast<int>(e), static_cast<int>(i)});
    }
    return segs;
}

inline Rational seg_length(const Seg& s) {
    Rational d = seg_is_vertical(s) ? s.y2 - s.y1 : s.x2 - s.x1;
    return d < 0 ? Rational(-d) : d;
}

inline bool segs_share_endpoint(const Seg& a, const Seg& b) {
    auto same = [](const Rational& x1, const Rational& y1, const Rational& x2,
                   const Rational& y2) { return x1 == x2 && y1 == y2; };
    return same(a.x1, a.y1, b.x1, b.y1) || same(a.x1, a.y1, b.x2, b.y2) ||
           same(a.x2, a.y2, b.x1, b.y1) || same(a.x2, a.y2, b.x2, b.y2);
}

/// 0 = disjoint, 1 = single common point (stored in px/py), 2 = overlap.
inline int seg_intersection(const Seg& a, const Seg& b, Rational& px, Rational& py) {
    auto span = [](const Rational& u, const Rational& v) {
        return u <= v ? std::pair<Rational, Rational>{u, v}
                      : std::pair<Rational, Rational>{v, u};
    };
    bool va = seg_is_vertical(a), vb = seg_is_vertical(b);
    if (va && vb) {
        if (a.x1 != b.x1) return 0;
        auto [alo, ahi] = span(a.y1, a.y2);
        auto [blo, bhi] = span(b.y1, b.y2);
        Rational lo = std::max(alo, blo), hi = std::min(ahi, bhi);
        if (lo > hi) return 0;
        if (lo < hi) return 2;
        px = a.x1;
        py = lo;
        return 1;
    }
    if (!va && !vb) {
        if (a.y1 != b.y1) return 0;
        auto [alo, ahi] = span(a.x1, a.x2);
        auto [blo, bhi] = span(b.x1, b.x2);
        Rational lo = std::max(alo, blo), hi = std::min(ahi, bhi);
        if (lo > hi) return 0;
        if (lo < hi) return 2;
        px = lo;
        py = a.y1;
        return 1;
    }
    const Seg& v = va ? a : b;
    const Seg& h = va ? b : a;
    auto [ylo, yhi] = span(v.y1, v.y2);
    auto [xlo, xhi] = span(h.x1, h.x2);
    if (v.x1 < xlo || v.x1 > xhi || h.y1 < ylo || h.y1 > yhi) return 0;
    px = v.x1;
    py = h.y1;
    return 1;
}

inline Rational dist2_point_seg(const Rational& px, const Rational& py, const Seg& s) {
    auto clamp = [](const Rational& v, const Rational& a, const Rational& b) {
        const Rational& lo = a <= b ? a : b;
        const Rational& hi = a <= b ? b : a;
        return v < lo ? lo : (v > hi ? hi : v);
    };
    Rational cx = clamp(px, s.x1, s.x2), cy = clamp(py, s.y1, s.y2);
    Rational dx = px - cx, dy = py - cy;
    return dx * dx + dy * dy;
}

inline Rational dist2_segs(const Seg& a, const Seg& b) {
    Rational best = dist2_point_seg(a.x1, a.y1, b);
    best = std::min(best, dist2_point_seg(a.x2, a.y2, b));
    best = std::min(best, dist2_point_seg(b.x1, b.y1, a));
    return std::min(best, dist2_point_seg(b.x2, b.y2, a));
}

} // namespace detail

/// Structural validation of an embedding fixture: cubic, axis-parallel
/// routes with ≤ 3 bends anchored at the right vertices, pairwise disjoint
/// except at shared vertices, and genuinely free "free" directions.
/// Throws InputError naming the first offence.
inline void validate_embedding(const EmbeddedGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> degree(n, 0);
    for (const auto& v : g.vertices) {
        if (v.id < 0 || v.id >= n)
            throw InputError("vertex ids must form a range 0..n-1");
        if (++degree[v.id] != 1) throw InputError("duplicate vertex id " + std::to_string(v.id));
    }
    std::fill(degree.begin(), degree.end(), 0);
    auto vertex = [&](int id) -> const EmbeddedVertex& {
        for (const auto& v : g.vertices)
            if (v.id == id) return v;
        throw InputError("edge references unknown vertex " + std::to_string(id));
    };

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        std::string name = "edge " + std::to_string(edge.u) + "-" + std::to_string(edge.v);
        const auto& pu = vertex(edge.u);
        const auto& pv = vertex(edge.v);
        ++degree[pu.id];
        ++degree[pv.id];
        if (edge.route.size() < 2 || edge.route.size() > 5)
            throw InputError(name + ": route must have 2..5 points (at most 3 bends)");
        if (edge.route.front() != std::pair{pu.x, pu.y} ||
            edge.route.back() != std::pair{pv.x, pv.y})
            throw InputError(name + ": route endpoints must sit on the vertex positions");
        for (std::size_t i = 0; i + 1 < edge.route.size(); ++i) {
            bool same_x = edge.route[i].first == edge.route[i + 1].first;
            bool same_y = edge.route[i].second == edge.route[i + 1].second;
            if (same_x == same_y) // both ⇒ zero-length, neither ⇒ diagonal
                throw InputError(name + ": route segments must be axis-parallel and nonzero");
        }
    }
    for (const auto& v : g.vertices)
        if (degree[v.id] != 3)
            throw InputError("vertex " + std::to_string(v.id) + " has degree " +
                             std::to_string(degree[v.id]) + ", embedding must be cubic");

    auto segs = detail::edge_segments(g);
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& a = segs[i];
            const auto& b = segs[j];
            Rational px, py;
            int kind = detail::seg_intersection(a, b, px, py);
            if (kind == 0) continue;
            if (kind == 2)
                throw InputError("overlapping route segments on edges " +
                                 std::to_string(a.edge) + " and " + std::to_string(b.edge));
            if (a.edge == b.edge) {
                if (b.index != a.index + 1 && a.index != b.index + 1)
                    throw InputError("edge " + std::to_string(a.edge) +
                                     ": route touches itself");
                continue; // consecutive segments share their bend
            }
            bool at_shared_vertex = false;
            for (const auto& v : g.vertices) {
                if (v.x != px || v.y != py) continue;
                auto touches = [&](int e) {
                    return g.edges[e].u == v.id || g.edges[e].v == v.id;
                };
                at_shared_vertex = touches(a.edge) && touches(b.edge);
                break;
            }
            if (!at_shared_vertex)
                throw InputError("routes of edges " + std::to_string(a.edge) + " and " +
                                 std::to_string(b.edge) + " cross outside a shared vertex");
        }

    // Free directions must not collide with the first step of any route.
    for (const auto& v : g.vertices) {
        auto [dx, dy] = free_dir_step(v.free);
        for (const auto& edge : g.edges) {
            const std::pair<Rational, Rational>* next = nullptr;
            if (edge.u == v.id) next = &edge.route[1];
            if (edge.v == v.id) next = &edge.route[edge.route.size() - 2];
            if (!next) continue;
            Rational sx = next->first - v.x, sy = next->second - v.y;
            bool along = (dx > 0 && sx > 0 && sy == 0) || (dx < 0 && sx < 0 && sy == 0) ||
                         (dy > 0 && sy > 0 && sx == 0) || (dy < 0 && sy < 0 && sx == 0);
            if (along)
                throw InputError("vertex " + std::to_string(v.id) +
                                 ": free direction is used by an incident edge");
        }
    }
}

/// Smallest squared distance between route segments that share no endpoint;
/// the chain generators scale the drawing until this clears their
/// separation requirement. Returns nullopt when every pair touches.
inline std::optional<Rational> min_route_separation2(const EmbeddedGraph& g) {
    auto segs = detail::edge_segments(g);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (detail::segs_share_endpoint(segs[i], segs[j])) continue;
            Rational d2 = detail::dist2_segs(segs[i], segs[j]);
            if (!best || d2 < *best) best = d2;
        }
    return best;
}

} // namespace diskscale
