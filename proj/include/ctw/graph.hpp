#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctw {

/// Dense 0-based vertex identifier. External formats are 1-based; the
/// conversion happens in io.
using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
    bool has(Vertex w) const noexcept { return u == w || v == w; }
    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
};

/// Normalizes the endpoint order. Does not reject loops.
constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Finite simple undirected graph. Immutable once built; use GraphBuilder
/// (or the free transformation functions) to derive new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    /// Throws PreconditionError on loops, duplicates or out-of-range endpoints.
    Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    /// Sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted ascending.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// Empty string when the vertex carries no label.
    const std::string& label(Vertex v) const;
    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// First vertex whose label equals `text`.
    std::optional<Vertex> find_label(std::string_view text) const;

    /// Adjacency bitmask of v; only meaningful for graphs with at most 64 vertices.
    std::uint64_t neighbor_mask(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
};

/// Mutable accumulator for constructing graphs. Duplicate edges are
/// ignored; loops are rejected.
class GraphBuilder {
public:
    explicit GraphBuilder(int vertex_count = 0);
    explicit GraphBuilder(const Graph& g);

    Vertex add_vertex(std::string label = {});
    /// Returns the id of the first appended vertex.
    Vertex add_vertices(int count);
    /// Returns false if the edge already existed.
    bool add_edge(Vertex a, Vertex b);
    /// Throws PreconditionError if the edge is absent.
    void remove_edge(Vertex a, Vertex b);
    bool has_edge(Vertex a, Vertex b) const;
    void set_label(Vertex v, std::string label);

    int vertex_count() const noexcept { return n_; }
    Graph build() const;

private:
    void check(Vertex v) const;

    int n_;
    std::set<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Bijection vertices -> positions. Positions are 0-based internally; the
/// drawing places the vertex at position i on x = i + 1.
class LinearLayout {
public:
    LinearLayout() = default;
    /// Throws InvalidLayoutError unless `order` is a permutation of 0..n-1.
    explicit LinearLayout(std::vector<Vertex> order);
    static LinearLayout identity(int n);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    Vertex at(int position) const { return order_.at(position); }
    int position(Vertex v) const { return position_.at(v); }
    const std::vector<Vertex>& order() const noexcept { return order_; }

    /// Throws InvalidLayoutError if the layout does not cover exactly g's vertices.
    void check_for(const Graph& g) const;

    friend bool operator==(const LinearLayout& a, const LinearLayout& b) { return a.order_ == b.order_; }

private:
    std::vector<Vertex> order_;
    std::vector<int> position_;
};

struct CutProfile {
    /// widths[i] = number of edges crossing the gap after position i (n-1 entries).
    std::vector<int> widths;
    int max_width = 0;
};

struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;
    int width = -1;
};

CutProfile cut_profile(const Graph& g, const LinearLayout& layout);

inline constexpr int kDefaultCutwidthOracleLimit = 18;

struct CutwidthResult {
    int cutwidth = 0;
    LinearLayout layout;
};

/// Exact cutwidth by dynamic programming over the set of already placed
/// vertices. Throws OracleLimitError above `vertex_limit`.
CutwidthResult exact_cutwidth(const Graph& g, int vertex_limit = kDefaultCutwidthOracleLimit);

bool is_planar(const Graph& g);

/// Bag i holds the vertex at position i plus every earlier vertex that still
/// has a neighbor at position >= i.
PathDecomposition layout_to_path_decomposition(const Graph& g, const LinearLayout& layout);

/// Empty string when valid; otherwise a description of the first violated
/// path-decomposition property.
std::string check_path_decomposition(const Graph& g, const PathDecomposition& pd);

struct IdentifyResult {
    Graph graph;
    /// old vertex id -> new vertex id (u and v both map to the merged vertex).
    std::vector<Vertex> old_to_new;
};

/// Replaces u and v by one vertex w with N(w) = N({u,v}). w takes the smaller
/// id; later ids shift down by one. Parallel edges merge, the u-v edge (if
/// any) disappears.
IdentifyResult identify_vertices_mapped(const Graph& g, Vertex u, Vertex v);
Graph identify_vertices(const Graph& g, Vertex u, Vertex v);

/// Vertices of `b` are appended after those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

struct SubgraphResult {
    Graph graph;
    std::vector<Vertex> new_to_old;
    /// -1 for dropped vertices.
    std::vector<Vertex> old_to_new;
};

/// Keeps the listed vertices in ascending id order.
SubgraphResult induced_subgraph(const Graph& g, std::span<const Vertex> keep);
SubgraphResult remove_vertices(const Graph& g, std::span<const Vertex> drop);

/// Restriction of a layout to the kept vertices, renumbered through `old_to_new`.
LinearLayout restrict_layout(const LinearLayout& layout, std::span<const Vertex> old_to_new);

}  // namespace ctw
