#pragma once

// Slow reference implementations used only to cross-check the library.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ctw/graph.hpp"

namespace oracle {

using ctw::Edge;
using ctw::Graph;
using ctw::Vertex;

/// Cutwidth by trying every permutation.
inline int permutation_cutwidth(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n), pos(n);
    std::iota(order.begin(), order.end(), 0);
    int best = g.edge_count();
    do {
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        int worst = 0;
        for (int gap = 0; gap + 1 < n; ++gap) {
            int c = 0;
            for (Edge e : g.edges())
                if (std::min(pos[e.u], pos[e.v]) <= gap && std::max(pos[e.u], pos[e.v]) > gap) ++c;
            worst = std::max(worst, c);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline bool independent(const Graph& g, std::uint32_t s) {
    for (Edge e : g.edges())
        if ((s >> e.u & 1) && (s >> e.v & 1)) return false;
    return true;
}

inline bool dominating(const Graph& g, std::uint32_t s) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (s >> v & 1) continue;
        bool hit = false;
        for (Vertex w : g.neighbors(v)) hit = hit || (s >> w & 1);
        if (!hit) return false;
    }
    return true;
}

inline bool covering(const Graph& g, std::uint32_t s) {
    for (Edge e : g.edges())
        if (!(s >> e.u & 1) && !(s >> e.v & 1)) return false;
    return true;
}

/// Every subset; n <= 20.
inline int subset_mis(const Graph& g) {
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s)
        if (independent(g, s)) best = std::max(best, std::popcount(s));
    return best;
}

inline int subset_mds(const Graph& g) {
    int best = g.vertex_count();
    for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s)
        if (std::popcount(s) < best && dominating(g, s)) best = std::popcount(s);
    return best;
}

inline int subset_mvc(const Graph& g) {
    int best = g.vertex_count();
    for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s)
        if (std::popcount(s) < best && covering(g, s)) best = std::popcount(s);
    return best;
}

namespace detail {

// Tries every assignment of vertices to k branch sets (0 = unused) and
// checks connectivity of each set plus the required adjacencies.
inline bool has_minor(const Graph& g, int k, const std::vector<std::pair<int, int>>& needed) {
    const int n = g.vertex_count();
    if (n < k) return false;
    std::vector<int> part(n, 0);
    auto connected_sets = [&]() {
        for (int b = 1; b <= k; ++b) {
            std::uint32_t members = 0;
            for (int v = 0; v < n; ++v)
                if (part[v] == b) members |= 1u << v;
            if (!members) return false;
            std::uint32_t seen = members & (~members + 1), frontier = seen;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t t = frontier; t; t &= t - 1)
                    for (Vertex w : g.neighbors(std::countr_zero(t)))
                        if ((members >> w & 1) && !(seen >> w & 1)) next |= 1u << w;
                seen |= next;
                frontier = next;
            }
            if (seen != members) return false;
        }
        return true;
    };
    auto adjacent_sets = [&]() {
        std::vector<std::vector<bool>> adj(k + 1, std::vector<bool>(k + 1, false));
        for (Edge e : g.edges()) adj[part[e.u]][part[e.v]] = adj[part[e.v]][part[e.u]] = true;
        for (auto [a, b] : needed)
            if (!adj[a][b]) return false;
        return true;
    };
    while (true) {
        if (adjacent_sets() && connected_sets()) return true;
        int i = 0;
        while (i < n && part[i] == k) part[i++] = 0;
        if (i == n) return false;
        ++part[i];
    }
}

}  // namespace detail

/// Wagner: planar iff no K5 and no K3,3 minor. Exponential; n <= 8.
inline bool minor_planar(const Graph& g) {
    std::vector<std::pair<int, int>> k5, k33;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) k5.emplace_back(a, b);
    for (int a = 1; a <= 3; ++a)
        for (int b = 4; b <= 6; ++b) k33.emplace_back(a, b);
    return !detail::has_minor(g, 5, k5) && !detail::has_minor(g, 6, k33);
}

}  // namespace oracle
