#include "ctw/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "ctw/error.hpp"
#include "ctw/io.hpp"
#include "ctw/solvers.hpp"

namespace ctw {

std::string to_string(Problem p) { return p == Problem::is ? "is" : "ds"; }

Problem problem_from_string(const std::string& s) {
    if (s == "is") return Problem::is;
    if (s == "ds") return Problem::ds;
    throw ParseError("unknown problem '" + s + "' (expected is or ds)");
}

int CrossoverGadget::layout_width() const { return cut_profile(h, layout).max_width; }

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

int next_instance(const Graph& g, const std::string& tag) {
    const std::string prefix = tag + "#";
    int next = 0;
    for (const auto& label : g.labels()) {
        if (label.rfind(prefix, 0) != 0) continue;
        auto colon = label.find(':', prefix.size());
        if (colon == std::string::npos) continue;
        try {
            next = std::max(next, std::stoi(label.substr(prefix.size(), colon - prefix.size())) + 1);
        } catch (const std::exception&) {
        }
    }
    return next;
}

Vertex require_label(const Graph& g, const std::string& label) {
    auto v = g.find_label(label);
    if (!v) throw InvariantViolation("missing vertex labeled '" + label + "'");
    return *v;
}

// Calls visit(mask) for every k-subset of `pool` (given as vertex list).
template <class Visit>
bool for_each_subset(const std::vector<Vertex>& pool, int k, Visit visit) {
    const int n = static_cast<int>(pool.size());
    if (k > n) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= bit(pool[i]);
        if (visit(m)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Mask> closed_masks(const Graph& g) {
    std::vector<Mask> c(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) c[v] = g.neighbor_mask(v) | bit(v);
    return c;
}

Mask full(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

// Calls visit(S) for each minimum dominating set S whose vertices lie in
// `allowed`; returns the minimum size (or -1 if no dominating set exists).
int min_ds_restricted(const Graph& g, Mask allowed, const std::function<bool(Mask)>& visit) {
    const int n = g.vertex_count();
    auto closed = closed_masks(g);
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
        if (allowed & bit(v)) pool.push_back(v);
    for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
        bool found = false;
        bool stop = for_each_subset(pool, k, [&](Mask s) {
            Mask dom = 0;
            for (Mask t = s; t; t &= t - 1) dom |= closed[std::countr_zero(t)];
            if (dom != full(n)) return false;
            found = true;
            return visit ? visit(s) : true;
        });
        (void)stop;
        if (found) return k;
    }
    return -1;
}

void check_structural_size(const Graph& g, const char* name) {
    if (g.vertex_count() > kStructuralBruteLimit)
        throw OracleLimitError(std::string(name) + ": " + std::to_string(g.vertex_count()) +
                               " vertices exceeds brute-force limit " + std::to_string(kStructuralBruteLimit));
}

}  // namespace

// ---------------------------------------------------------------- structure

bool outer_face_certificate(const Graph& h, const std::array<Vertex, 4>& t) {
    GraphBuilder b(h);
    Vertex apex = b.add_vertex();
    for (Vertex v : t) b.add_edge(apex, v);
    // cycle u - v - u' - v'
    b.add_edge(t[0], t[2]);
    b.add_edge(t[2], t[1]);
    b.add_edge(t[1], t[3]);
    b.add_edge(t[3], t[0]);
    return is_planar(b.build());
}

void check_gadget_structure(const CrossoverGadget& gadget) {
    const auto& t = gadget.terminals;
    for (int i = 0; i < 4; ++i) {
        if (!gadget.h.contains(t[i])) throw PreconditionError("gadget terminal out of range");
        for (int j = 0; j < i; ++j)
            if (t[i] == t[j]) throw PreconditionError("gadget terminals must be distinct");
    }
    gadget.layout.check_for(gadget.h);
    if (!is_planar(gadget.h)) throw PreconditionError("gadget graph is not planar");
    if (!outer_face_certificate(gadget.h, t))
        throw PreconditionError("gadget terminals are not on one face in the order u, v, u', v'");
}

// ---------------------------------------------------------------- IS certification

bool BoundaryFunction::antitone() const {
    for (unsigned f = 0; f < 16; ++f)
        for (unsigned g = 0; g < 16; ++g)
            if ((f & g) == f && values[f] < values[g]) return false;
    return true;
}

std::string terminal_subset_name(unsigned subset) {
    static const char* names[4] = {"u", "u'", "v", "v'"};
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (!(subset & (1u << i))) continue;
        if (!first) s += ",";
        s += names[i];
        first = false;
    }
    return s + "}";
}

BoundaryFunction is_boundary_function(const CrossoverGadget& gadget) {
    if (gadget.problem != Problem::is) throw PreconditionError("boundary function requires an IS gadget");
    BoundaryFunction bf;
    for (unsigned f = 0; f < 16; ++f) {
        std::vector<Vertex> drop;
        for (int i = 0; i < 4; ++i)
            if (f & (1u << i)) drop.push_back(gadget.terminals[i]);
        auto sub = remove_vertices(gadget.h, drop);
        if (sub.graph.vertex_count() <= kBoundaryBruteLimit) {
            bf.values[f] = brute_is(sub.graph, kBoundaryBruteLimit);
        } else {
            bf.values[f] = dp_is(sub.graph, restrict_layout(gadget.layout, sub.old_to_new)).optimum;
        }
    }
    if (!bf.antitone()) throw InvariantViolation("boundary function is not antitone");
    return bf;
}

CertificationReport certify_is_gadget_report(const CrossoverGadget& gadget) {
    CertificationReport r;
    r.boundary = is_boundary_function(gadget);
    const int c = gadget.shift;
    const unsigned uu = 0b0011, vv = 0b1100;
    r.c1 = true;
    for (unsigned f = 0; f < 16; ++f) {
        if ((f & uu) == uu || (f & vv) == vv) continue;
        if (r.boundary(f) != c) {
            r.c1 = false;
            r.failures.push_back("C1: h(" + terminal_subset_name(f) + ") = " + std::to_string(r.boundary(f)) +
                                 ", expected " + std::to_string(c));
        }
    }
    r.c2 = true;
    for (unsigned f : {uu, vv}) {
        if (r.boundary(f) > c - 1) {
            r.c2 = false;
            r.failures.push_back("C2: h(" + terminal_subset_name(f) + ") = " + std::to_string(r.boundary(f)) +
                                 ", expected <= " + std::to_string(c - 1));
        }
    }
    r.c3 = r.boundary(0b1111) <= c - 2;
    if (!r.c3)
        r.failures.push_back("C3: h(" + terminal_subset_name(0b1111) + ") = " + std::to_string(r.boundary(0b1111)) +
                             ", expected <= " + std::to_string(c - 2));
    return r;
}

bool certify_is_gadget(const CrossoverGadget& gadget) { return certify_is_gadget_report(gadget).passed(); }

// ---------------------------------------------------------------- Def 3.2 replacement

GadgetInsertion replace_edges_by_gadget(const Graph& g, std::pair<Vertex, Vertex> e1, std::pair<Vertex, Vertex> e2,
                                        const CrossoverGadget& gadget, const std::string& tag) {
    auto [a, b] = e1;
    auto [c, d] = e2;
    if (!g.has_edge(a, b)) throw PreconditionError("replace_edges_by_gadget: first edge not in graph");
    if (!g.has_edge(c, d)) throw PreconditionError("replace_edges_by_gadget: second edge not in graph");
    if (a == c || a == d || b == c || b == d) throw PreconditionError("replace_edges_by_gadget: edges share an endpoint");

    GraphBuilder gb(g);
    gb.remove_edge(a, b);
    gb.remove_edge(c, d);
    const int k = next_instance(g, tag);
    const std::string prefix = tag + "#" + std::to_string(k) + ":";
    const Vertex first = gb.add_vertices(gadget.h.vertex_count());
    for (Vertex v = 0; v < gadget.h.vertex_count(); ++v) {
        const std::string& role = gadget.h.label(v);
        gb.set_label(first + v, prefix + (role.empty() ? std::to_string(v + 1) : role));
    }
    for (Edge e : gadget.h.edges()) gb.add_edge(first + e.u, first + e.v);
    const auto& t = gadget.terminals;
    gb.add_edge(a, first + t[0]);
    gb.add_edge(first + t[1], b);
    gb.add_edge(c, first + t[2]);
    gb.add_edge(first + t[3], d);
    return {gb.build(), first};
}

// ---------------------------------------------------------------- vertex-cover crossing graph

namespace {

constexpr int kHvcVertices = 18;

constexpr std::array<Edge, 31> kHvcEdges = {{
    // four triangles
    {4, 5}, {5, 6}, {4, 6},
    {7, 8}, {8, 9}, {7, 9},
    {10, 11}, {11, 12}, {10, 12},
    {13, 14}, {14, 15}, {13, 15},
    // central edge
    {16, 17},
    // terminals
    {0, 4}, {0, 5}, {0, 7}, {0, 8},
    {1, 10}, {1, 11}, {1, 13}, {1, 14},
    {2, 7}, {2, 13},
    {3, 4}, {3, 10},
    // links between the blocks
    {5, 17}, {6, 12}, {8, 16}, {9, 15}, {11, 17}, {14, 16},
}};

const std::array<const char*, kHvcVertices> kHvcNames = {
    "p", "q", "x", "y", "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2", "d3", "e1", "e2"};

Graph build_hvc() {
    std::vector<std::string> labels(kHvcNames.begin(), kHvcNames.end());
    return Graph(kHvcVertices, kHvcEdges, labels);
}

bool partition_search(const Graph& g, Mask remaining, int triangles, int edges) {
    if (!remaining) return triangles == 0 && edges == 0;
    int v = std::countr_zero(remaining);
    Mask rest = remaining & ~bit(v);
    Mask nb = g.neighbor_mask(v) & rest;
    for (Mask s = nb; s; s &= s - 1) {
        int w = std::countr_zero(s);
        if (edges > 0 && partition_search(g, rest & ~bit(w), triangles, edges - 1)) return true;
        if (triangles == 0) continue;
        Mask later = nb & g.neighbor_mask(w) & ~((bit(w) << 1) - 1);
        for (Mask t = later; t; t &= t - 1) {
            int x = std::countr_zero(t);
            if (partition_search(g, rest & ~bit(w) & ~bit(x), triangles - 1, edges)) return true;
        }
    }
    return false;
}

Mask terminal_mask(const TerminalGraph& t) { return bit(t.p) | bit(t.q) | bit(t.x) | bit(t.y); }

template <class Visit>
std::int64_t for_each_vertex_cover(const Graph& g, Visit visit) {
    const int n = g.vertex_count();
    if (n > kStructuralBruteLimit) throw OracleLimitError("vertex cover enumeration limited to 24 vertices");
    std::vector<Mask> nb(n);
    for (Vertex v = 0; v < n; ++v) nb[v] = g.neighbor_mask(v);
    std::int64_t count = 0;
    const Mask all = full(n);
    for (Mask s = 0; s <= all; ++s) {
        // complement must be independent
        Mask out = all & ~s;
        bool ok = true;
        for (Mask t = out; t && ok; t &= t - 1) ok = (nb[std::countr_zero(t)] & out) == 0;
        if (!ok) continue;
        ++count;
        visit(s);
    }
    return count;
}

}  // namespace

bool hvc_partition_check(const TerminalGraph& hvc) {
    Mask interior = full(hvc.graph.vertex_count()) & ~terminal_mask(hvc);
    return partition_search(hvc.graph, interior, 4, 1);
}

PropAxesReport prop_axes_report(const TerminalGraph& hvc) {
    PropAxesReport r;
    r.min_nonterminals = {1 << 20, 1 << 20, 1 << 20};
    const Mask terms = terminal_mask(hvc);
    const Mask pq = bit(hvc.p) | bit(hvc.q), xy = bit(hvc.x) | bit(hvc.y);
    r.covers_checked = for_each_vertex_cover(hvc.graph, [&](Mask s) {
        int l = ((s & pq) == 0) + ((s & xy) == 0);
        int inner = std::popcount(s & ~terms);
        r.min_nonterminals[l] = std::min(r.min_nonterminals[l], inner);
    });
    r.bound_holds = true;
    for (int l = 0; l < 3; ++l) r.bound_holds = r.bound_holds && r.min_nonterminals[l] >= 9 + l;
    r.tight = r.min_nonterminals[0] == 9;
    return r;
}

bool verify_prop_axes(const TerminalGraph& hvc) {
    auto r = prop_axes_report(hvc);
    return r.bound_holds && r.tight;
}

int constrained_vc_size(const TerminalGraph& hvc, std::vector<Vertex> must, std::vector<Vertex> must_not) {
    Mask in = 0, out = 0;
    for (Vertex v : must) in |= bit(v);
    for (Vertex v : must_not) out |= bit(v);
    int best = -1;
    for_each_vertex_cover(hvc.graph, [&](Mask s) {
        if ((s & in) != in || (s & out) != 0) return;
        int size = std::popcount(s);
        if (best < 0 || size < best) best = size;
    });
    return best;
}

const TerminalGraph& hvc_graph() {
    static const TerminalGraph instance = [] {
        TerminalGraph t{build_hvc()};
        if (t.graph.vertex_count() != 18) throw InvariantViolation("hvc: expected 18 vertices");
        if (!hvc_partition_check(t)) throw InvariantViolation("hvc gate (a): interior is not 4 triangles + 1 edge");
        for (Vertex a : {t.p, t.q})
            for (Vertex b : {t.x, t.y})
                if (constrained_vc_size(t, {a, b}, {}) != 11)
                    throw InvariantViolation("hvc gate (b): no 11-vertex cover with one terminal per axis");
        if (!verify_prop_axes(t)) throw InvariantViolation("hvc gate (c): axis bound fails");
        if (!outer_face_certificate(t.graph, {t.p, t.q, t.x, t.y}))
            throw InvariantViolation("hvc: terminals not on one face in the order p, x, q, y");
        return t;
    }();
    return instance;
}

// ---------------------------------------------------------------- IS gadget

const CrossoverGadget& gjs_is_gadget() {
    static const CrossoverGadget instance = [] {
        const TerminalGraph& hvc = hvc_graph();
        GraphBuilder b(hvc.graph);
        const Vertex e1 = require_label(hvc.graph, "e1"), e2 = require_label(hvc.graph, "e2");
        b.remove_edge(e1, e2);
        Vertex prev = e1;
        for (int i = 1; i <= 4; ++i) {
            Vertex s = b.add_vertex("s" + std::to_string(i));
            b.add_edge(prev, s);
            prev = s;
        }
        b.add_edge(prev, e2);
        CrossoverGadget g;
        g.problem = Problem::is;
        g.h = b.build();
        g.terminals = {hvc.p, hvc.q, hvc.x, hvc.y};
        g.layout = heuristic_layout(g.h);
        g.shift = 9;
        check_gadget_structure(g);
        auto report = certify_is_gadget_report(g);
        if (!report.passed()) throw InvariantViolation("IS gadget failed certification: " + report.failures.front());
        return g;
    }();
    return instance;
}

// ---------------------------------------------------------------- double path

namespace {

const std::array<const char*, 11> kSideRoles = {"a", "b", "c", "d", "e", "f", "g", "h", "t", "t1", "t2"};

std::string role(const std::string& prefix, const std::string& name, char side) {
    return prefix + name + "_" + side;
}

}  // namespace

DoublePathGates double_path_gates(const Graph& g, const std::string& prefix) {
    auto at = [&](const std::string& name, char side) { return require_label(g, role(prefix, name, side)); };
    Mask interior = 0;
    std::map<Vertex, int> compact;
    for (char side : {'x', 'y'})
        for (const char* r : kSideRoles) compact.emplace(at(r, side), static_cast<int>(compact.size()));
    // masks over the compact interior ids plus one extra bit for "outside"
    const int outside = static_cast<int>(compact.size());
    auto closed = [&](Vertex v) {
        Mask m = bit(compact.at(v));
        for (Vertex w : g.neighbors(v)) {
            auto it = compact.find(w);
            m |= it == compact.end() ? bit(outside) : bit(it->second);
        }
        return m;
    };
    interior = bit(outside) - 1;

    DoublePathGates gates;
    Mask seen = 0;
    gates.neighborhoods_disjoint = true;
    for (auto [name, side] : std::initializer_list<std::pair<const char*, char>>{
             {"b", 'x'}, {"b", 'y'}, {"t", 'x'}, {"t", 'y'}, {"t2", 'x'}, {"t2", 'y'}}) {
        Mask c = closed(at(name, side));
        if ((c & ~interior) || (c & seen)) gates.neighborhoods_disjoint = false;
        seen |= c;
    }

    Mask dom = 0;
    for (auto [name, side] : std::initializer_list<std::pair<const char*, char>>{
             {"b", 'x'}, {"b", 'y'}, {"e", 'x'}, {"e", 'y'}, {"g", 'x'}, {"g", 'y'}})
        dom |= closed(at(name, side));
    gates.interior_pattern = (dom & interior) == interior;

    dom = 0;
    for (auto [name, side] : std::initializer_list<std::pair<const char*, char>>{
             {"c", 'x'}, {"f", 'x'}, {"h", 'x'}, {"e", 'y'}, {"g", 'y'}, {"a", 'y'}})
        dom |= closed(at(name, side));
    const Mask want = interior & ~bit(compact.at(at("a", 'x')));
    // the only outside neighbor of a_y is the endpoint y
    gates.tail_pattern = (dom & want) == want && (dom & bit(outside)) != 0;
    return gates;
}

Graph insert_double_path(const Graph& g, Vertex x, Vertex y, const std::string& tag) {
    if (!g.has_edge(x, y)) throw PreconditionError("insert_double_path: edge not in graph");
    const int k = next_instance(g, tag);
    const std::string prefix = tag + "#" + std::to_string(k) + ":";
    GraphBuilder b(g);
    b.remove_edge(x, y);
    std::map<std::string, Vertex> id;
    for (char side : {'x', 'y'})
        for (const char* r : kSideRoles) id[std::string(r) + "_" + side] = b.add_vertex(role(prefix, r, side));
    auto v = [&](const char* r, char side) { return id.at(std::string(r) + "_" + side); };
    for (char side : {'x', 'y'}) {
        const char other = side == 'x' ? 'y' : 'x';
        b.add_edge(side == 'x' ? x : y, v("a", side));
        static const char* chain[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
        for (int i = 0; i + 1 < 8; ++i) b.add_edge(v(chain[i], side), v(chain[i + 1], side));
        b.add_edge(v("h", side), v("c", other));
        b.add_edge(v("t", side), v("e", side));
        b.add_edge(v("t", side), v("f", side));
        b.add_edge(v("t1", side), v("f", side));
        b.add_edge(v("t1", side), v("g", side));
        b.add_edge(v("t2", side), v("g", side));
        b.add_edge(v("t2", side), v("h", side));
    }
    Graph out = b.build();
    if (!double_path_gates(out, prefix).passed()) throw InvariantViolation("double path failed its structural gates");
    return out;
}

// ---------------------------------------------------------------- triangle replacement

Graph replace_triangle_crossing(const Graph& g, std::array<Vertex, 3> t1, std::array<Vertex, 3> t2,
                                const std::string& tag) {
    for (Vertex v : t1)
        if (!g.contains(v)) throw PreconditionError("replace_triangle_crossing: vertex not in graph");
    for (Vertex v : t2)
        if (!g.contains(v)) throw PreconditionError("replace_triangle_crossing: vertex not in graph");
    for (const auto& t : {t1, t2}) {
        if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
            throw PreconditionError("replace_triangle_crossing: not a triangle");
        if (g.degree(t[2]) != 2) throw PreconditionError("replace_triangle_crossing: apex must have degree 2");
    }
    for (Vertex a : t1)
        for (Vertex b : t2)
            if (a == b) throw PreconditionError("replace_triangle_crossing: triangles share a vertex");

    const TerminalGraph& hvc = hvc_graph();
    const int k = next_instance(g, tag);
    const std::string prefix = tag + "#" + std::to_string(k) + ":";
    const auto [x, y, z] = t1;
    const auto [p, q, r] = t2;
    GraphBuilder b(g);
    b.remove_edge(x, y);
    b.remove_edge(p, q);
    std::vector<Vertex> map(hvc.graph.vertex_count(), -1);
    map[hvc.p] = p;
    map[hvc.q] = q;
    map[hvc.x] = x;
    map[hvc.y] = y;
    for (Vertex v = 0; v < hvc.graph.vertex_count(); ++v)
        if (map[v] < 0) map[v] = b.add_vertex(prefix + hvc.graph.label(v));
    int i = 0;
    for (Edge e : hvc.graph.edges()) {
        b.add_edge(map[e.u], map[e.v]);
        Vertex w = b.add_vertex(prefix + "w" + std::to_string(++i));
        b.add_edge(w, map[e.u]);
        b.add_edge(w, map[e.v]);
    }
    const std::array<Vertex, 2> apexes = {z, r};
    return remove_vertices(b.build(), apexes).graph;
}

// ---------------------------------------------------------------- DS composite

namespace {

struct TrianglePair {
    const char* base_a[2];
    const char* apex_a;
    const char* base_b[2];
    const char* apex_b;
};

// Crossing triangle pairs between the double paths A (on e1) and B (on e2);
// A's triangle takes the p, q side of the crossing graph.
constexpr std::array<TrianglePair, 4> kCrossings = {{
    {{"e_x", "f_x"}, "t_x", {"e_x", "f_x"}, "t_x"},
    {{"g_x", "h_x"}, "t2_x", {"g_y", "h_y"}, "t2_y"},
    {{"g_y", "h_y"}, "t2_y", {"g_x", "h_x"}, "t2_x"},
    {{"e_y", "f_y"}, "t_y", {"e_y", "f_y"}, "t_y"},
}};

}  // namespace

std::vector<Graph> ds_compose_stages(const Graph& g, std::pair<Vertex, Vertex> e1, std::pair<Vertex, Vertex> e2) {
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first || e1.second == e2.second)
        throw PreconditionError("ds_compose_staged: edges share an endpoint");
    const int ka = next_instance(g, "dp");
    std::vector<Graph> stages;
    stages.push_back(insert_double_path(g, e1.first, e1.second, "dp"));
    stages.push_back(insert_double_path(stages.back(), e2.first, e2.second, "dp"));
    const std::string pa = "dp#" + std::to_string(ka) + ":", pb = "dp#" + std::to_string(ka + 1) + ":";
    for (const auto& c : kCrossings) {
        const Graph& cur = stages.back();
        auto at = [&](const std::string& prefix, const char* name) { return require_label(cur, prefix + name); };
        std::array<Vertex, 3> tb = {at(pb, c.base_b[0]), at(pb, c.base_b[1]), at(pb, c.apex_b)};
        std::array<Vertex, 3> ta = {at(pa, c.base_a[0]), at(pa, c.base_a[1]), at(pa, c.apex_a)};
        stages.push_back(replace_triangle_crossing(cur, tb, ta, "hvc"));
    }
    return stages;
}

Graph ds_compose_staged(const Graph& g, std::pair<Vertex, Vertex> e1, std::pair<Vertex, Vertex> e2) {
    return std::move(ds_compose_stages(g, e1, e2).back());
}

Graph ds_composite_template() {
    GraphBuilder b(0);
    for (const char* name : {"a", "b", "c", "d"}) b.add_vertex(name);
    b.add_edge(0, 1);
    b.add_edge(2, 3);
    return ds_compose_staged(b.build(), {0, 1}, {2, 3});
}

const CrossoverGadget& ds_crossover_gadget() {
    static const CrossoverGadget instance = [] {
        Graph full_template = ds_composite_template();
        std::vector<Vertex> hosts;
        for (const char* name : {"a", "b", "c", "d"}) hosts.push_back(require_label(full_template, name));
        Graph h = remove_vertices(full_template, hosts).graph;
        CrossoverGadget g;
        g.problem = Problem::ds;
        g.terminals = {require_label(h, "dp#0:a_x"), require_label(h, "dp#0:a_y"), require_label(h, "dp#1:a_x"),
                       require_label(h, "dp#1:a_y")};
        g.h = std::move(h);
        g.layout = heuristic_layout(g.h);
        g.shift = 2 * 6 + 4 * 9;
        if (g.h.vertex_count() != 216 || g.h.edge_count() != 404)
            throw InvariantViolation("DS gadget: unexpected size " + std::to_string(g.h.vertex_count()) + "/" +
                                     std::to_string(g.h.edge_count()));
        check_gadget_structure(g);
        return g;
    }();
    return instance;
}

// ---------------------------------------------------------------- dominating-set structure checks

bool verify_simplicial_avoidance(const Graph& g) {
    check_structural_size(g, "verify_simplicial_avoidance");
    const int n = g.vertex_count();
    Mask chosen = 0, blocked = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        auto nb = g.neighbors(v);
        if (!g.has_edge(nb[0], nb[1])) continue;
        if (blocked & bit(v)) continue;
        chosen |= bit(v);
        blocked |= g.neighbor_mask(v) | bit(v);
    }
    int opt = min_ds_restricted(g, full(n), nullptr);
    int avoiding = min_ds_restricted(g, full(n) & ~chosen, nullptr);
    return avoiding == opt;
}

bool verify_domset_is_vc(const Graph& g, const std::vector<Vertex>& u_set) {
    check_structural_size(g, "verify_domset_is_vc");
    Mask u = 0;
    for (Vertex v : u_set) {
        if (!g.contains(v)) throw PreconditionError("verify_domset_is_vc: vertex not in graph");
        u |= bit(v);
    }
    std::vector<Edge> inner;
    for (Edge e : g.edges())
        if ((u & bit(e.u)) && (u & bit(e.v))) inner.push_back(e);
    for (Edge e : inner) {
        bool watched = false;
        for (Vertex w = 0; w < g.vertex_count() && !watched; ++w)
            watched = !(u & bit(w)) && g.degree(w) == 2 && g.has_edge(w, e.u) && g.has_edge(w, e.v);
        if (!watched)
            throw PreconditionError("verify_domset_is_vc: edge {" + std::to_string(e.u + 1) + "," +
                                    std::to_string(e.v + 1) + "} has no private degree-two neighbor outside U");
    }
    bool found = false;
    min_ds_restricted(g, full(g.vertex_count()), [&](Mask s) {
        found = std::all_of(inner.begin(), inner.end(),
                            [&](Edge e) { return (s & bit(e.u)) || (s & bit(e.v)); });
        return found;
    });
    return found;
}

// ---------------------------------------------------------------- JSON

nlohmann::json gadget_to_json(const CrossoverGadget& gadget) {
    nlohmann::json j;
    j["problem"] = to_string(gadget.problem);
    j["shift"] = gadget.shift;
    j["terminals"] = nlohmann::json::array();
    for (Vertex t : gadget.terminals) j["terminals"].push_back(t + 1);
    j["graph"] = graph_to_json(gadget.h);
    j["layout"] = layout_to_json(gadget.layout);
    return j;
}

CrossoverGadget gadget_from_json(const nlohmann::json& j) {
    try {
        CrossoverGadget g;
        g.problem = problem_from_string(j.at("problem").get<std::string>());
        g.shift = j.at("shift").get<int>();
        g.h = graph_from_json(j.at("graph"));
        const auto& t = j.at("terminals");
        if (!t.is_array() || t.size() != 4) throw ParseError("gadget JSON: terminals must list four vertices");
        for (int i = 0; i < 4; ++i) {
            int v = t[i].get<int>();
            if (v < 1 || v > g.h.vertex_count()) throw ParseError("gadget JSON: terminal out of range");
            g.terminals[i] = v - 1;
        }
        g.layout = j.contains("layout") ? layout_from_json(j.at("layout")) : heuristic_layout(g.h);
        if (g.layout.size() != g.h.vertex_count()) throw ParseError("gadget JSON: layout does not match graph");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("gadget JSON: ") + e.what());
    }
}

}  // namespace ctw
