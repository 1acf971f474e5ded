#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "ctw/graph.hpp"

namespace ctw {

using Rng = std::mt19937_64;

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);
/// Random spanning tree (random attachment) plus G(n, p) edges.
Graph random_connected_graph(int n, double p, Rng& rng);
LinearLayout random_layout(int n, Rng& rng);

bool is_connected(const Graph& g);

/// One representative per isomorphism class, n <= 6.
std::vector<Graph> graphs_up_to_isomorphism(int n);
std::vector<Graph> connected_graphs_up_to_isomorphism(int n);

/// Unordered pairs of vertex-disjoint edges, each pair listed once.
std::vector<std::pair<Edge, Edge>> disjoint_edge_pairs(const Graph& g);

/// A host with two disjoint edges; the pair is (first, second).
struct EdgePairHost {
    Graph graph;
    std::pair<Vertex, Vertex> e1, e2;
};

/// Random connected host on n vertices (n >= 4) with a random pair of
/// disjoint edges.
EdgePairHost random_edge_pair_host(int n, double p, Rng& rng);

/// Host with triangles t1 = {x,y,z}, t2 = {p,q,r} whose apexes z, r have
/// degree 2; remaining vertices join the bases at random.
struct TriangleHost {
    Graph graph;
    std::array<Vertex, 3> t1, t2;
};

TriangleHost random_triangle_host(int extra_vertices, double p, Rng& rng);

}  // namespace ctw
