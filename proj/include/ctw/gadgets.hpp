#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ctw/graph.hpp"

namespace ctw {

enum class Problem { is, ds };

std::string to_string(Problem p);
/// Accepts "is" / "ds"; throws ParseError otherwise.
Problem problem_from_string(const std::string& s);

/// Four-terminal replacement for an edge crossing.
struct CrossoverGadget {
    Problem problem = Problem::is;
    Graph h;
    /// (u, u', v, v'): u-u' replaces the first edge, v-v' the second.
    std::array<Vertex, 4> terminals{};
    LinearLayout layout;
    int shift = 0;

    /// ctw of h under `layout`.
    int layout_width() const;
};

/// Planarity of h plus an apex on the four terminals plus the 4-cycle
/// u-v-u'-v'. Certifies the terminals lie on one face in that cyclic order.
bool outer_face_certificate(const Graph& h, const std::array<Vertex, 4>& terminals);

/// Throws PreconditionError unless terminals are distinct vertices of h, the
/// layout fits h and the outer-face certificate holds.
void check_gadget_structure(const CrossoverGadget& gadget);

/// Subsets F of the terminals are bitmasks: bit 0 = u, 1 = u', 2 = v, 3 = v'.
struct BoundaryFunction {
    /// values[F] = max |I| over independent sets I of h with I disjoint from F.
    std::array<int, 16> values{};

    int operator()(unsigned subset) const { return values.at(subset); }
    bool antitone() const;
};

std::string terminal_subset_name(unsigned subset);

inline constexpr int kBoundaryBruteLimit = 25;

BoundaryFunction is_boundary_function(const CrossoverGadget& gadget);

struct CertificationReport {
    BoundaryFunction boundary;
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
    /// Human-readable counterexamples, one per failing subset.
    std::vector<std::string> failures;

    bool passed() const { return c1 && c2 && c3; }
};

CertificationReport certify_is_gadget_report(const CrossoverGadget& gadget);
bool certify_is_gadget(const CrossoverGadget& gadget);

/// Result of inserting a gadget copy; vertices of h map to first + id.
struct GadgetInsertion {
    Graph graph;
    Vertex first = 0;
};

/// Removes {a,b} and {c,d}, appends a copy of h and adds a-u, u'-b, c-v, v'-d.
/// The copy's vertices are labeled "<tag>#<k>:<role>".
GadgetInsertion replace_edges_by_gadget(const Graph& g, std::pair<Vertex, Vertex> e1, std::pair<Vertex, Vertex> e2,
                                        const CrossoverGadget& gadget, const std::string& tag = "gadget");

/// Vertex-cover crossing graph with terminals p, q, x, y (ids 0..3) and 14
/// interior vertices.
struct TerminalGraph {
    Graph graph;
    Vertex p = 0, q = 1, x = 2, y = 3;
};

/// Validated on first use; a failing gate throws InvariantViolation.
const TerminalGraph& hvc_graph();

struct PropAxesReport {
    /// min_nonterminals[l] over vertex covers with l empty axes ({p,q}, {x,y}).
    std::array<int, 3> min_nonterminals{};
    bool bound_holds = false;
    bool tight = false;
    std::int64_t covers_checked = 0;
};

/// Enumerates all vertex covers of an 18-vertex terminal graph.
PropAxesReport prop_axes_report(const TerminalGraph& hvc);
bool verify_prop_axes(const TerminalGraph& hvc);

/// Smallest vertex cover of the terminal graph that contains `must` and
/// avoids `must_not` (terminal-only constraints), or -1 if none.
int constrained_vc_size(const TerminalGraph& hvc, std::vector<Vertex> must, std::vector<Vertex> must_not);

/// Four vertex-disjoint triangles plus one edge partitioning the non-terminals.
bool hvc_partition_check(const TerminalGraph& hvc);

/// IS crossover gadget with shift 9: the vertex-cover crossing graph with the
/// central interior edge subdivided by four vertices. Terminals (p, q, x, y).
const CrossoverGadget& gjs_is_gadget();

/// Replaces edge {x,y} by the 22-vertex double path. New vertices are labeled
/// "<tag>#<k>:<role>" with roles a_x .. h_x, t_x, t1_x, t2_x and the _y mirror
/// (t1/t2 are t' and t'').
Graph insert_double_path(const Graph& g, Vertex x, Vertex y, const std::string& tag = "dp");

struct DoublePathGates {
    bool neighborhoods_disjoint = false;
    bool interior_pattern = false;
    bool tail_pattern = false;
    bool passed() const { return neighborhoods_disjoint && interior_pattern && tail_pattern; }
};

/// Structural gates for the double path with the given instance label prefix.
DoublePathGates double_path_gates(const Graph& g, const std::string& prefix);

/// t1 = {x, y, z}, t2 = {p, q, r}; z and r must have degree 2. Deletes z, r
/// and the base edges {x,y}, {p,q}; inserts the vertex-cover crossing graph
/// with its terminals identified with p, q, x, y, then hangs a degree-two
/// vertex on every edge of the inserted copy.
Graph replace_triangle_crossing(const Graph& g, std::array<Vertex, 3> t1, std::array<Vertex, 3> t2,
                                const std::string& tag = "hvc");

/// 216-vertex DS gadget with shift 48 composed from two double paths and four
/// triangle replacements. Structural gates run on first use.
const CrossoverGadget& ds_crossover_gadget();

/// The template used to build ds_crossover_gadget before deleting its four
/// host vertices (labeled "a", "b", "c", "d").
Graph ds_composite_template();

/// Staged composition on a host: double paths on e1 and e2 followed by the
/// four triangle replacements. Equals replace_edges_by_gadget with the DS gadget.
Graph ds_compose_staged(const Graph& g, std::pair<Vertex, Vertex> e1, std::pair<Vertex, Vertex> e2);

/// The six intermediate graphs of ds_compose_staged: after each double path,
/// then after each triangle replacement.
std::vector<Graph> ds_compose_stages(const Graph& g, std::pair<Vertex, Vertex> e1, std::pair<Vertex, Vertex> e2);

inline constexpr int kStructuralBruteLimit = 24;

bool verify_simplicial_avoidance(const Graph& g);
bool verify_domset_is_vc(const Graph& g, const std::vector<Vertex>& u_set);

nlohmann::json gadget_to_json(const CrossoverGadget& gadget);
CrossoverGadget gadget_from_json(const nlohmann::json& j);

}  // namespace ctw
