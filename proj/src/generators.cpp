#include "ctw/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ctw/error.hpp"

namespace ctw {

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

Graph star_graph(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder gb(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) gb.add_edge(i, a + j);
    return gb.build();
}

Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.build();
}

Graph random_connected_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        b.add_edge(perm[i], perm[pick(rng)]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.build();
}

LinearLayout random_layout(int n, Rng& rng) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return LinearLayout(std::move(order));
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) seen[w] = 1, ++count, stack.push_back(w);
    }
    return count == n;
}

namespace {

// Adjacency as a bitstring over vertex pairs i<j (row-major); canonical form is
// the lexicographically smallest bitstring over all relabelings.
std::uint32_t pair_code(int n, const std::vector<std::uint8_t>& adj, const std::vector<int>& perm) {
    std::uint32_t code = 0;
    int bitpos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bitpos)
            if (adj[perm[i] * n + perm[j]]) code |= std::uint32_t{1} << bitpos;
    return code;
}

}  // namespace

std::vector<Graph> graphs_up_to_isomorphism(int n) {
    if (n < 0 || n > 6) throw PreconditionError("graphs_up_to_isomorphism supports n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    std::vector<std::uint8_t> adj(n * n);
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << pairs); ++code) {
        std::fill(adj.begin(), adj.end(), 0);
        for (int k = 0; k < pairs; ++k)
            if (code & (std::uint32_t{1} << k)) adj[slots[k].first * n + slots[k].second] = adj[slots[k].second * n + slots[k].first] = 1;
        bool canonical = true;
        for (const auto& p : perms)
            if (pair_code(n, adj, p) < code) {
                canonical = false;
                break;
            }
        if (!canonical || !seen.insert(code).second) continue;
        GraphBuilder b(n);
        for (int k = 0; k < pairs; ++k)
            if (code & (std::uint32_t{1} << k)) b.add_edge(slots[k].first, slots[k].second);
        out.push_back(b.build());
    }
    return out;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(int n) {
    auto all = graphs_up_to_isomorphism(n);
    std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
    return all;
}

std::vector<std::pair<Edge, Edge>> disjoint_edge_pairs(const Graph& g) {
    std::vector<std::pair<Edge, Edge>> out;
    const auto& e = g.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!e[i].has(e[j].u) && !e[i].has(e[j].v)) out.emplace_back(e[i], e[j]);
    return out;
}

EdgePairHost random_edge_pair_host(int n, double p, Rng& rng) {
    if (n < 4) throw PreconditionError("random_edge_pair_host needs n >= 4");
    while (true) {
        Graph g = random_connected_graph(n, p, rng);
        auto pairs = disjoint_edge_pairs(g);
        if (pairs.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        auto [a, b] = pairs[pick(rng)];
        std::bernoulli_distribution flip(0.5);
        std::pair<Vertex, Vertex> e1{a.u, a.v}, e2{b.u, b.v};
        if (flip(rng)) std::swap(e1.first, e1.second);
        if (flip(rng)) std::swap(e2.first, e2.second);
        if (flip(rng)) std::swap(e1, e2);
        return {std::move(g), e1, e2};
    }
}

TriangleHost random_triangle_host(int extra_vertices, double p, Rng& rng) {
    // 0,1,2 = x,y,z and 3,4,5 = p,q,r; extra vertices follow
    const int n = 6 + extra_vertices;
    GraphBuilder b(n);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(0, 2);
    b.add_edge(3, 4);
    b.add_edge(4, 5);
    b.add_edge(3, 5);
    std::vector<Vertex> free{0, 1, 3, 4};
    for (int v = 6; v < n; ++v) free.push_back(v);
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < free.size(); ++i)
        for (std::size_t j = i + 1; j < free.size(); ++j)
            if (coin(rng)) b.add_edge(free[i], free[j]);
    return {b.build(), {0, 1, 2}, {3, 4, 5}};
}

}  // namespace ctw
