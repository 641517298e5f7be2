#pragma once

#include "hermspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace testing {

/// Brute-force isomorphism oracle over all n! relabellings.
inline bool isomorphic_by_permutation(const hermspec::MixedGraph& a, const hermspec::MixedGraph& b) {
    const int n = a.order();
    if (n != b.order()) return false;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u)
            for (int v = 0; ok && v < n; ++v) ok = a.relation(u, v) == b.relation(p[u], p[v]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Relabels vertex v as perm[v].
inline hermspec::MixedGraph relabel(const hermspec::MixedGraph& d, const std::vector<int>& perm) {
    std::vector<hermspec::VertexPair> arcs, edges;
    for (auto [u, v] : d.arcs()) arcs.emplace_back(perm[u], perm[v]);
    for (auto [u, v] : d.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    return {d.order(), arcs, edges};
}

}  // namespace testing
