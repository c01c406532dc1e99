#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/graph.hpp"

namespace diskscale {

/// Outcome of a witness check. `culprit_ids` names the disks behind the
/// first violated condition (a P3 triple, an out-of-range disk, ...).
struct VerifyResult {
    bool ok = false;
    std::string message;
    std::vector<int> culprit_ids;
    explicit operator bool() const { return ok; }
};

namespace detail {

/// Disks grouped by identical (x, y, radius). Within a class every pair is
/// coincident (distance 0, always adjacent), and any two classes are either
/// fully adjacent or fully non-adjacent, so the disk graph is a blow-up of
/// the class graph. This keeps checking million-disk gadget instances cheap.
struct Collapsed {
    std::vector<int> rep;       ///< smallest member id per class
    std::vector<int> second;    ///< second-smallest member id, or -1
    std::vector<long long> count;
    Graph graph;                ///< class-level disk graph
};

inline Collapsed collapse_classes(const std::vector<Point>& points,
                                  const RadiusAssignment& r) {
    const std::size_t n = points.size();
    Collapsed c;
    std::vector<double> radius; // per class

    // Coincident copies are emitted consecutively by the generators, so a
    // run-merge pass keeps the hash map tiny even on huge instances.
    std::unordered_map<std::string, int> index;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && points[j].x == points[i].x && points[j].y == points[i].y &&
               r.radii[j] == r.radii[i])
            ++j;
        std::string key = rational_to_string(points[i].x) + '|' +
                          rational_to_string(points[i].y) + '|' +
                          std::to_string(std::bit_cast<std::uint64_t>(r.radii[i]));
        auto [it, fresh] = index.emplace(key, static_cast<int>(c.rep.size()));
        int cls = it->second;
        if (fresh) {
            c.rep.push_back(static_cast<int>(i));
            c.second.push_back(j > i + 1 ? static_cast<int>(i + 1) : -1);
            c.count.push_back(static_cast<long long>(j - i));
        } else {
            if (c.second[cls] == -1) c.second[cls] = static_cast<int>(i);
            c.count[cls] += static_cast<long long>(j - i);
        }
        i = j;
    }

    const std::size_t m = c.rep.size();
    c.graph = Graph(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (disks_intersect(dist2(points[c.rep[a]], points[c.rep[b]]),
                                r.radii[c.rep[a]], r.radii[c.rep[b]]))
                c.graph.set_edge(a, b);
    return c;
}

} // namespace detail

/// Checks a radius assignment against an instance and target class:
/// (a) at most k disks scaled, (b) every scaled radius within
/// [r_min − τ, r_max + τ], (c) the resulting disk graph lies in `cls`.
/// Reports the first violated condition with culprit disk ids.
inline VerifyResult verify_solution(const Instance& inst, const RadiusAssignment& r,
                                    GraphClass cls) {
    const std::size_t n = inst.points.size();
    if (r.radii.size() != n)
        throw InputError("verify_solution: expected " + std::to_string(n) +
                         " radii, got " + std::to_string(r.radii.size()));

    // (a) budget
    long long scaled = 0;
    for (double v : r.radii)
        if (v != 1.0) ++scaled;
    if (scaled > inst.k) {
        VerifyResult res{false,
                         "budget exceeded: " + std::to_string(scaled) +
                             " scaled disks > k = " + std::to_string(inst.k),
                         {}};
        for (std::size_t p = 0; p < n; ++p)
            if (r.radii[p] != 1.0 && res.culprit_ids.size() < 16)
                res.culprit_ids.push_back(static_cast<int>(p));
        return res;
    }

    // (b) radius range (τ slack absorbs binary64 rounding from the LP)
    const double lo = to_double(inst.r_min) - kEdgeTol;
    const double hi = to_double(inst.r_max) + kEdgeTol;
    for (std::size_t p = 0; p < n; ++p) {
        double v = r.radii[p];
        if (v == 1.0) continue;
        if (v < lo || v > hi)
            return {false,
                    "radius out of range: disk " + std::to_string(p) + " has radius " +
                        std::to_string(v),
                    {static_cast<int>(p)}};
    }

    // (c) class membership, via the collapsed class graph
    auto c = detail::collapse_classes(inst.points, r);
    const std::size_t m = c.rep.size();

    switch (cls) {
    case GraphClass::Cluster: {
        if (auto p3 = find_induced_p3(c.graph)) {
            auto [a, b, cc] = *p3;
            return {false,
                    "induced P3 on disks (" + std::to_string(c.rep[a]) + ", " +
                        std::to_string(c.rep[b]) + ", " + std::to_string(c.rep[cc]) + ")",
                    {c.rep[a], c.rep[b], c.rep[cc]}};
        }
        return {true, "cluster graph", {}};
    }
    case GraphClass::Complete: {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (!c.graph.has_edge(a, b))
                    return {false,
                            "disks " + std::to_string(c.rep[a]) + " and " +
                                std::to_string(c.rep[b]) + " do not intersect",
                            {c.rep[a], c.rep[b]}};
        return {true, "complete graph", {}};
    }
    case GraphClass::Connected: {
        auto comps = connected_components(c.graph);
        if (comps.size() <= 1) return {true, "connected graph", {}};
        std::size_t big = 0;
        for (std::size_t idx = 1; idx < comps.size(); ++idx)
            if (comps[idx].size() > comps[big].size()) big = idx;
        // tie favours the component holding the smallest id: components are
        // ordered by smallest member, and > keeps the earlier one.
        int outside = -1;
        for (std::size_t idx = 0; idx < comps.size() && outside == -1; ++idx)
            if (idx != big) outside = c.rep[comps[idx][0]];
        return {false,
                "disconnected: disk " + std::to_string(outside) +
                    " lies outside the largest component (" +
                    std::to_string(comps.size()) + " components)",
                {outside}};
    }
    case GraphClass::Edgeless: {
        for (std::size_t a = 0; a < m; ++a)
            if (c.count[a] >= 2)
                return {false,
                        "disks " + std::to_string(c.rep[a]) + " and " +
                            std::to_string(c.second[a]) + " coincide",
                        {c.rep[a], c.second[a]}};
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (c.graph.has_edge(a, b))
                    return {false,
                            "disks " + std::to_string(c.rep[a]) + " and " +
                                std::to_string(c.rep[b]) + " intersect",
                            {c.rep[a], c.rep[b]}};
        return {true, "edgeless graph", {}};
    }
    }
    return {false, "unknown class", {}};
}

} // namespace diskscale
