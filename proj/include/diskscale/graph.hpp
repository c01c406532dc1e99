#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "diskscale/errors.hpp"

namespace diskscale {

using Bitset = boost::dynamic_bitset<>;

/// Simple undirected graph over vertices 0..n-1, dense bitset rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

    [[nodiscard]] std::size_t size() const { return adj_.size(); }

    [[nodiscard]] bool has_edge(std::size_t u, std::size_t v) const { return adj_[u][v]; }

    void set_edge(std::size_t u, std::size_t v, bool present = true) {
        if (u == v) return; // no self-loops, ever
        adj_[u][v] = present;
        adj_[v][u] = present;
    }

    [[nodiscard]] const Bitset& row(std::size_t u) const { return adj_[u]; }

    [[nodiscard]] std::size_t degree(std::size_t u) const { return adj_[u].count(); }

    [[nodiscard]] std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& r : adj_) twice += r.count();
        return twice / 2;
    }

    bool operator==(const Graph& other) const = default;

private:
    std::vector<Bitset> adj_;
};

/// Target graph classes the solvers can aim for.
enum class GraphClass { Cluster, Complete, Connected, Edgeless };

/// Lexicographically smallest induced path (u,v,w): uv, vw edges, uw not,
/// with u < w so each P3 is reported once. none iff g is a cluster graph.
inline std::optional<std::array<int, 3>> find_induced_p3(const Graph& g) {
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = g.row(a).find_first(); b != Bitset::npos;
             b = g.row(a).find_next(b)) {
            // candidates c: adjacent to b, not adjacent to a, c > a, c != b
            Bitset cand = g.row(b) - g.row(a);
            cand.reset(a);
            for (std::size_t c = cand.find_next(a); c != Bitset::npos;
                 c = cand.find_next(c)) {
                if (c == b) continue;
                return std::array<int, 3>{static_cast<int>(a), static_cast<int>(b),
                                          static_cast<int>(c)};
            }
        }
    }
    return std::nullopt;
}

/// List of connected components (sorted by smallest member, members ascending).
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<int>> comps;
    Bitset seen(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{static_cast<int>(s)};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w = g.row(v).find_first(); w != Bitset::npos;
                 w = g.row(v).find_next(w))
                if (!seen[w]) {
                    seen.set(w);
                    stack.push_back(static_cast<int>(w));
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool recognize(const Graph& g, GraphClass cls) {
    const std::size_t n = g.size();
    switch (cls) {
    case GraphClass::Cluster:
        return !find_induced_p3(g).has_value();
    case GraphClass::Complete:
        return g.edge_count() == n * (n - 1) / 2;
    case GraphClass::Connected:
        return connected_components(g).size() <= 1;
    case GraphClass::Edgeless:
        return g.edge_count() == 0;
    }
    return false; // unreachable
}

/// Maximal vertex-disjoint packing of induced P3s, grown greedily by
/// repeatedly taking the lexicographically smallest P3 among uncovered
/// vertices. Deterministic, so branching built on top is reproducible.
struct P3Packing {
    std::vector<std::array<int, 3>> triples;
    Bitset covered;
};

inline P3Packing maximal_p3_packing(const Graph& g) {
    const std::size_t n = g.size();
    P3Packing pack;
    pack.covered.resize(n);
    bool found = true;
    while (found) {
        found = false;
        for (std::size_t a = 0; a < n && !found; ++a) {
            if (pack.covered[a]) continue;
            Bitset row_a = g.row(a) - pack.covered;
            for (std::size_t b = row_a.find_first(); b != Bitset::npos && !found;
                 b = row_a.find_next(b)) {
                Bitset cand = g.row(b) - g.row(a);
                cand -= pack.covered;
                cand.reset(a);
                for (std::size_t c = cand.find_next(a); c != Bitset::npos;
                     c = cand.find_next(c)) {
                    if (c == b) continue;
                    pack.triples.push_back({static_cast<int>(a), static_cast<int>(b),
                                            static_cast<int>(c)});
                    pack.covered.set(a);
                    pack.covered.set(b);
                    pack.covered.set(c);
                    found = true;
                    break;
                }
            }
        }
    }
    return pack;
}

/// Connected components of a cluster graph, each checked to be a clique.
/// Throws InputError when the input has an induced P3.
inline std::vector<std::vector<int>> clusters_of(const Graph& g) {
    auto comps = connected_components(g);
    for (const auto& comp : comps)
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.has_edge(comp[i], comp[j]))
                    throw InputError("clusters_of: graph is not a cluster graph");
    return comps;
}

} // namespace diskscale
