#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace diskscale {

/// Maximum matching plus a König minimum vertex cover of the same size.
struct BipartiteMatching {
    std::size_t size = 0;
    std::vector<int> match_left;  ///< per left vertex: matched right vertex or -1
    std::vector<int> match_right; ///< per right vertex: matched left vertex or -1
    std::vector<int> cover_left;  ///< minimum vertex cover, left side (ascending)
    std::vector<int> cover_right; ///< minimum vertex cover, right side (ascending)
};

/// Kuhn's augmenting-path matching over an explicit bipartition, followed by
/// the König alternating-reachability construction for the cover.
inline BipartiteMatching max_bipartite_matching(
    int left, int right, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(left);
    for (auto [u, v] : edges) adj[u].push_back(v);

    BipartiteMatching result;
    result.match_left.assign(left, -1);
    result.match_right.assign(right, -1);

    std::vector<char> visited(right);
    auto augment = [&](auto&& self, int u) -> bool {
        for (int v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (result.match_right[v] == -1 || self(self, result.match_right[v])) {
                result.match_left[u] = v;
                result.match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < left; ++u) {
        visited.assign(right, 0);
        if (augment(augment, u)) ++result.size;
    }

    // König: alternate from the unmatched left vertices; the cover is
    // (left not reached) ∪ (right reached).
    std::vector<char> reach_l(left), reach_r(right);
    std::vector<int> queue;
    for (int u = 0; u < left; ++u)
        if (result.match_left[u] == -1) {
            reach_l[u] = 1;
            queue.push_back(u);
        }
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int v : adj[u]) {
            if (v == result.match_left[u] || reach_r[v]) continue;
            reach_r[v] = 1;
            int w = result.match_right[v];
            if (w != -1 && !reach_l[w]) {
                reach_l[w] = 1;
                queue.push_back(w);
            }
        }
    }
    for (int u = 0; u < left; ++u)
        if (!reach_l[u]) result.cover_left.push_back(u);
    for (int v = 0; v < right; ++v)
        if (reach_r[v]) result.cover_right.push_back(v);
    return result;
}

} // namespace diskscale
