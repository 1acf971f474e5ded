#include "ctw/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "ctw/error.hpp"

namespace ctw {

namespace {

const std::string kNoLabel;

std::string vertex_name(Vertex v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count < 0 ? 0 : vertex_count) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : Graph(vertex_count) {
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) throw PreconditionError("self-loop at vertex " + vertex_name(e.u));
        if (!contains(e.u) || !contains(e.v))
            throw PreconditionError("edge endpoint out of range: {" + vertex_name(e.u) + "," + vertex_name(e.v) + "}");
        edges_.push_back(make_edge(e.u, e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw PreconditionError("duplicate edge {" + vertex_name(dup->u) + "," + vertex_name(dup->v) + "}");
    for (Edge e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n_) throw PreconditionError("label count does not match vertex count");
        if (std::any_of(labels.begin(), labels.end(), [](const std::string& s) { return !s.empty(); }))
            labels_ = std::move(labels);
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
}

const std::string& Graph::label(Vertex v) const {
    if (labels_.empty()) return kNoLabel;
    return labels_.at(v);
}

std::optional<Vertex> Graph::find_label(std::string_view text) const {
    for (Vertex v = 0; v < static_cast<int>(labels_.size()); ++v)
        if (labels_[v] == text) return v;
    return std::nullopt;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    std::uint64_t m = 0;
    for (Vertex w : adj_.at(v))
        if (w < 64) m |= std::uint64_t{1} << w;
    return m;
}

// ---------------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
    labels_.resize(n_);
}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.vertex_count()), edges_(g.edges().begin(), g.edges().end()), labels_(g.labels()) {
    labels_.resize(n_);
}

void GraphBuilder::check(Vertex v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex " + vertex_name(v) + " out of range");
}

Vertex GraphBuilder::add_vertex(std::string label) {
    labels_.push_back(std::move(label));
    return n_++;
}

Vertex GraphBuilder::add_vertices(int count) {
    if (count < 0) throw PreconditionError("negative vertex count");
    Vertex first = n_;
    n_ += count;
    labels_.resize(n_);
    return first;
}

bool GraphBuilder::add_edge(Vertex a, Vertex b) {
    check(a);
    check(b);
    if (a == b) throw PreconditionError("self-loop at vertex " + vertex_name(a));
    return edges_.insert(make_edge(a, b)).second;
}

void GraphBuilder::remove_edge(Vertex a, Vertex b) {
    if (edges_.erase(make_edge(a, b)) == 0)
        throw PreconditionError("edge {" + vertex_name(a) + "," + vertex_name(b) + "} not present");
}

bool GraphBuilder::has_edge(Vertex a, Vertex b) const { return edges_.count(make_edge(a, b)) != 0; }

void GraphBuilder::set_label(Vertex v, std::string label) {
    check(v);
    labels_[v] = std::move(label);
}

Graph GraphBuilder::build() const {
    std::vector<Edge> e(edges_.begin(), edges_.end());
    return Graph(n_, e, labels_);
}

// ---------------------------------------------------------------- LinearLayout

LinearLayout::LinearLayout(std::vector<Vertex> order) : order_(std::move(order)), position_(order_.size(), -1) {
    const int n = static_cast<int>(order_.size());
    for (int i = 0; i < n; ++i) {
        Vertex v = order_[i];
        if (v < 0 || v >= n) throw InvalidLayoutError("layout entry " + vertex_name(v) + " out of range");
        if (position_[v] != -1) throw InvalidLayoutError("vertex " + vertex_name(v) + " appears twice in layout");
        position_[v] = i;
    }
}

LinearLayout LinearLayout::identity(int n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return LinearLayout(std::move(order));
}

void LinearLayout::check_for(const Graph& g) const {
    if (size() != g.vertex_count())
        throw InvalidLayoutError("layout has " + std::to_string(size()) + " vertices, graph has " +
                                 std::to_string(g.vertex_count()));
}

// ---------------------------------------------------------------- cuts

CutProfile cut_profile(const Graph& g, const LinearLayout& layout) {
    layout.check_for(g);
    const int n = g.vertex_count();
    CutProfile cp;
    if (n <= 1) return cp;
    // difference array: an edge between positions a<b covers gaps a..b-1
    std::vector<int> delta(n, 0);
    for (Edge e : g.edges()) {
        int a = layout.position(e.u), b = layout.position(e.v);
        if (a > b) std::swap(a, b);
        ++delta[a];
        --delta[b];
    }
    cp.widths.resize(n - 1);
    int run = 0;
    for (int i = 0; i + 1 < n; ++i) {
        run += delta[i];
        cp.widths[i] = run;
        cp.max_width = std::max(cp.max_width, run);
    }
    return cp;
}

CutwidthResult exact_cutwidth(const Graph& g, int vertex_limit) {
    const int n = g.vertex_count();
    if (n > vertex_limit)
        throw OracleLimitError("exact_cutwidth: " + std::to_string(n) + " vertices exceeds oracle limit " +
                               std::to_string(vertex_limit));
    if (n > 30) throw OracleLimitError("exact_cutwidth: subset table too large");
    if (n <= 1) return {0, LinearLayout::identity(n)};

    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> nbr(n);
    for (Vertex v = 0; v < n; ++v) nbr[v] = static_cast<std::uint32_t>(g.neighbor_mask(v));

    // cut[S] = edges between S and its complement
    std::vector<std::uint16_t> cut(std::size_t{full} + 1, 0);
    // best[S] = min over orders of S of the max cut over the nonempty prefixes of S
    std::vector<std::uint16_t> best(std::size_t{full} + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        std::uint32_t rest = s & (s - 1);
        cut[s] = static_cast<std::uint16_t>(cut[rest] + g.degree(low) - 2 * std::popcount(nbr[low] & rest));
        std::uint16_t inner = std::numeric_limits<std::uint16_t>::max();
        for (std::uint32_t t = s; t; t &= t - 1) {
            int v = std::countr_zero(t);
            inner = std::min(inner, best[s & ~(std::uint32_t{1} << v)]);
        }
        best[s] = s == full ? inner : std::max(inner, cut[s]);
    }

    std::vector<Vertex> order(n);
    std::uint32_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        // pick the lowest-id last vertex consistent with the optimum
        for (std::uint32_t t = s; t; t &= t - 1) {
            int v = std::countr_zero(t);
            std::uint32_t prev = s & ~(std::uint32_t{1} << v);
            std::uint16_t value = s == full ? best[prev] : std::max(best[prev], cut[s]);
            if (value == best[s]) {
                order[pos] = v;
                s = prev;
                break;
            }
        }
    }
    return {best[full], LinearLayout(std::move(order))};
}

bool is_planar(const Graph& g) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const int n = g.vertex_count();
    if (n <= 4) return true;
    if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
    BGraph bg(n);
    for (Edge e : g.edges()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

// ---------------------------------------------------------------- decompositions

PathDecomposition layout_to_path_decomposition(const Graph& g, const LinearLayout& layout) {
    layout.check_for(g);
    const int n = g.vertex_count();
    // last[v] = largest position of a neighbor of v (or v's own position)
    std::vector<int> last(n);
    for (Vertex v = 0; v < n; ++v) {
        last[v] = layout.position(v);
        for (Vertex w : g.neighbors(v)) last[v] = std::max(last[v], layout.position(w));
    }
    PathDecomposition pd;
    pd.bags.resize(n);
    std::vector<Vertex> live;
    for (int i = 0; i < n; ++i) {
        std::erase_if(live, [&](Vertex u) { return last[u] < i; });
        auto& bag = pd.bags[i];
        bag = live;
        bag.push_back(layout.at(i));
        pd.width = std::max(pd.width, static_cast<int>(bag.size()) - 1);
        live.push_back(layout.at(i));
    }
    return pd;
}

std::string check_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    const int n = g.vertex_count();
    std::vector<int> first(n, -1), last(n, -1), count(n, 0);
    int width = -1;
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
        const auto& bag = pd.bags[i];
        width = std::max(width, static_cast<int>(bag.size()) - 1);
        for (Vertex v : bag) {
            if (!g.contains(v)) return "bag " + std::to_string(i) + " holds unknown vertex " + vertex_name(v);
            if (first[v] == -1) first[v] = i;
            last[v] = i;
            ++count[v];
        }
    }
    if (width != pd.width) return "recorded width " + std::to_string(pd.width) + " != " + std::to_string(width);
    for (Vertex v = 0; v < n; ++v) {
        if (first[v] == -1) return "vertex " + vertex_name(v) + " is in no bag";
        if (count[v] != last[v] - first[v] + 1) return "bags of vertex " + vertex_name(v) + " are not contiguous";
    }
    for (Edge e : g.edges()) {
        // contiguity makes interval overlap equivalent to sharing a bag
        int lo = std::max(first[e.u], first[e.v]);
        int hi = std::min(last[e.u], last[e.v]);
        if (lo > hi) return "edge {" + vertex_name(e.u) + "," + vertex_name(e.v) + "} not covered";
        bool together = false;
        for (int i = lo; i <= hi && !together; ++i) {
            const auto& bag = pd.bags[i];
            together = std::find(bag.begin(), bag.end(), e.u) != bag.end() &&
                       std::find(bag.begin(), bag.end(), e.v) != bag.end();
        }
        if (!together) return "edge {" + vertex_name(e.u) + "," + vertex_name(e.v) + "} not covered";
    }
    return {};
}

// ---------------------------------------------------------------- transformations

IdentifyResult identify_vertices_mapped(const Graph& g, Vertex u, Vertex v) {
    if (!g.contains(u) || !g.contains(v)) throw PreconditionError("identify_vertices: vertex not in graph");
    if (u == v) throw PreconditionError("identify_vertices: u and v must differ");
    const Vertex keep = std::min(u, v), gone = std::max(u, v);
    IdentifyResult r;
    r.old_to_new.resize(g.vertex_count());
    for (Vertex w = 0; w < g.vertex_count(); ++w) r.old_to_new[w] = w < gone ? w : w - 1;
    r.old_to_new[gone] = keep;

    GraphBuilder b(g.vertex_count() - 1);
    for (Edge e : g.edges()) {
        Vertex a = r.old_to_new[e.u], c = r.old_to_new[e.v];
        if (a != c) b.add_edge(a, c);
    }
    if (g.has_labels()) {
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (w != gone) b.set_label(r.old_to_new[w], g.label(w));
        if (g.label(keep).empty()) b.set_label(keep, g.label(gone));
    }
    r.graph = b.build();
    return r;
}

Graph identify_vertices(const Graph& g, Vertex u, Vertex v) { return identify_vertices_mapped(g, u, v).graph; }

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder gb(a);
    const Vertex offset = gb.add_vertices(b.vertex_count());
    for (Edge e : b.edges()) gb.add_edge(e.u + offset, e.v + offset);
    if (b.has_labels())
        for (Vertex v = 0; v < b.vertex_count(); ++v) gb.set_label(v + offset, b.label(v));
    return gb.build();
}

SubgraphResult induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    SubgraphResult r;
    r.old_to_new.assign(g.vertex_count(), -1);
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (!g.contains(v)) throw PreconditionError("induced_subgraph: vertex " + vertex_name(v) + " not in graph");
        r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
        r.new_to_old.push_back(v);
    }
    GraphBuilder b(static_cast<int>(r.new_to_old.size()));
    for (Edge e : g.edges())
        if (r.old_to_new[e.u] >= 0 && r.old_to_new[e.v] >= 0) b.add_edge(r.old_to_new[e.u], r.old_to_new[e.v]);
    if (g.has_labels())
        for (Vertex v : r.new_to_old) b.set_label(r.old_to_new[v], g.label(v));
    r.graph = b.build();
    return r;
}

SubgraphResult remove_vertices(const Graph& g, std::span<const Vertex> drop) {
    std::vector<char> dropped(g.vertex_count(), 0);
    for (Vertex v : drop) {
        if (!g.contains(v)) throw PreconditionError("remove_vertices: vertex " + vertex_name(v) + " not in graph");
        dropped[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!dropped[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

LinearLayout restrict_layout(const LinearLayout& layout, std::span<const Vertex> old_to_new) {
    std::vector<Vertex> order;
    for (Vertex v : layout.order())
        if (old_to_new[v] >= 0) order.push_back(old_to_new[v]);
    return LinearLayout(std::move(order));
}

}  // namespace ctw
