#include <doctest.h>

#include "ctw/error.hpp"
#include "ctw/generators.hpp"
#include "ctw/graph.hpp"
#include "oracles.hpp"

using namespace ctw;

TEST_CASE("graph construction normalizes and rejects bad edges") {
    std::vector<Edge> edges{{2, 0}, {0, 1}};
    Graph g(3, edges);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.degree(0) == 2);
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));

    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), PreconditionError);
    std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(3, dup), PreconditionError);
    std::vector<Edge> out{{0, 3}};
    CHECK_THROWS_AS(Graph(3, out), PreconditionError);
}

TEST_CASE("builder keeps labels and edits edges") {
    GraphBuilder b;
    Vertex a = b.add_vertex("a");
    Vertex c = b.add_vertex();
    Vertex d = b.add_vertex("d");
    CHECK(b.add_edge(a, c));
    CHECK_FALSE(b.add_edge(c, a));
    b.add_edge(c, d);
    b.remove_edge(a, c);
    CHECK_THROWS_AS(b.remove_edge(a, c), PreconditionError);
    Graph g = b.build();
    CHECK(g.edge_count() == 1);
    CHECK(g.label(a) == "a");
    CHECK(g.label(c).empty());
    CHECK(g.find_label("d") == d);
    CHECK_FALSE(g.find_label("zz").has_value());
}

TEST_CASE("layout validation") {
    CHECK_THROWS_AS(LinearLayout({0, 0, 1}), InvalidLayoutError);
    CHECK_THROWS_AS(LinearLayout({0, 3, 1}), InvalidLayoutError);
    LinearLayout l({2, 0, 1});
    CHECK(l.position(2) == 0);
    CHECK(l.at(2) == 1);
    CHECK_THROWS_AS(l.check_for(path_graph(4)), InvalidLayoutError);
}

TEST_CASE("cut profile of small layouts") {
    CHECK(cut_profile(path_graph(4), LinearLayout::identity(4)).max_width == 1);
    CutProfile k4 = cut_profile(complete_graph(4), LinearLayout::identity(4));
    CHECK(k4.widths == std::vector<int>{3, 4, 3});
    CHECK(cut_profile(Graph(5), LinearLayout::identity(5)).max_width == 0);
    CHECK(cut_profile(Graph(1), LinearLayout::identity(1)).widths.empty());
}

TEST_CASE("exact cutwidth on known families") {
    CHECK(exact_cutwidth(complete_graph(4)).cutwidth == 4);
    CHECK(exact_cutwidth(cycle_graph(7)).cutwidth == 2);
    CHECK(exact_cutwidth(path_graph(9)).cutwidth == 1);
    CHECK(exact_cutwidth(star_graph(6)).cutwidth == 3);
    CHECK(exact_cutwidth(Graph(0)).cutwidth == 0);
    CHECK_THROWS_AS(exact_cutwidth(path_graph(19)), OracleLimitError);
}

TEST_CASE("exact cutwidth matches the permutation oracle") {
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(2 + i % 6, 0.5, rng);
        CutwidthResult r = exact_cutwidth(g);
        CHECK(r.cutwidth == oracle::permutation_cutwidth(g));
        CHECK(cut_profile(g, r.layout).max_width == r.cutwidth);
    }
}

TEST_CASE("planarity agrees with the minor oracle") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(complete_bipartite(2, 5)));
    // Petersen graph
    GraphBuilder pb(10);
    for (int i = 0; i < 5; ++i) {
        pb.add_edge(i, (i + 1) % 5);
        pb.add_edge(i, i + 5);
        pb.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    CHECK_FALSE(is_planar(pb.build()));

    Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(5 + i % 3, 0.35 + 0.1 * (i % 4), rng);
        CHECK(is_planar(g) == oracle::minor_planar(g));
    }
}

TEST_CASE("path decomposition from a layout") {
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(1 + i % 12, 0.3, rng);
        LinearLayout l = random_layout(g.vertex_count(), rng);
        PathDecomposition pd = layout_to_path_decomposition(g, l);
        CHECK(check_path_decomposition(g, pd).empty());
        CHECK(pd.width <= std::max(cut_profile(g, l).max_width, 0));
    }
    PathDecomposition p = layout_to_path_decomposition(path_graph(5), LinearLayout::identity(5));
    CHECK(p.width == 1);
    PathDecomposition bad{{{0}, {2}}, 0};
    CHECK_FALSE(check_path_decomposition(path_graph(3), bad).empty());
}

TEST_CASE("identify, union and subgraphs") {
    Graph c4 = cycle_graph(4);
    IdentifyResult r = identify_vertices_mapped(c4, 0, 2);
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.edge_count() == 2);
    CHECK(r.old_to_new == std::vector<Vertex>{0, 1, 0, 2});

    Graph p3 = identify_vertices(path_graph(3), 0, 1);
    CHECK(p3.edge_count() == 1);

    Graph u = disjoint_union(path_graph(2), cycle_graph(3));
    CHECK(u.vertex_count() == 5);
    CHECK(u.has_edge(2, 4));

    std::vector<Vertex> drop{1};
    SubgraphResult s = remove_vertices(cycle_graph(4), drop);
    CHECK(s.graph.edge_count() == 2);
    CHECK(s.old_to_new == std::vector<Vertex>{0, -1, 1, 2});
    LinearLayout l = restrict_layout(LinearLayout({3, 1, 0, 2}), s.old_to_new);
    CHECK(l.order() == std::vector<Vertex>{2, 0, 1});
}

TEST_CASE("generators") {
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(graphs_up_to_isomorphism(4).size() == 11);
    CHECK(graphs_up_to_isomorphism(5).size() == 34);
    CHECK(connected_graphs_up_to_isomorphism(5).size() == 21);
    CHECK(disjoint_edge_pairs(path_graph(4)).size() == 1);
    Rng rng(0);
    for (int i = 0; i < 10; ++i) {
        EdgePairHost h = random_edge_pair_host(6, 0.3, rng);
        CHECK(is_connected(h.graph));
        CHECK(h.graph.has_edge(h.e1.first, h.e1.second));
        CHECK(h.graph.has_edge(h.e2.first, h.e2.second));
        TriangleHost t = random_triangle_host(3, 0.5, rng);
        CHECK(t.graph.degree(t.t1[2]) == 2);
        CHECK(t.graph.degree(t.t2[2]) == 2);
    }
}
