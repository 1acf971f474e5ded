#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctw/gadgets.hpp"
#include "ctw/graph.hpp"

namespace ctw {

struct PlanarizationResult {
    /// Original vertices keep their ids; gadget copies are appended in
    /// element order and labeled "gadget#<k>:<role>".
    Graph g_prime;
    LinearLayout layout_prime;
    int t_prime = 0;
    int crossings_replaced = 0;
    int width_in = 0;
    int width_out = 0;
    int gadget_width = 0;
    /// Shift of the gadget used.
    int shift = 0;
    CutProfile profile_prime;
};

/// Replaces every crossing of the arc drawing of (g, layout), left to right,
/// by a copy of `gadget`. Layout blocks follow the element order; each
/// gadget block is ordered by the gadget's own layout. Runtime checks:
/// planarity, target shift, vertex/edge accounting and the per-gap cut bounds
/// (original vertex: width_in; gadget vertex: width_in + gadget_width + 4).
PlanarizationResult planarize(const Graph& g, const LinearLayout& layout, int t, const CrossoverGadget& gadget);

struct PlanarizationCheck {
    bool planar = false;
    bool width_bound = false;
    bool target = false;
    bool optimum_shift = false;
    int opt_before = 0;
    int opt_after = 0;
    std::string detail;

    bool passed() const { return planar && width_bound && target && optimum_shift; }
};

/// opt(G) by brute force (DP above the brute-force limit), opt(G') by the
/// layout DP over the narrower of heuristic_layout(G') and layout_prime.
PlanarizationCheck verify_planarization_report(const Graph& g, const LinearLayout& layout, int t,
                                               const PlanarizationResult& result, Problem problem);
bool verify_planarization(const Graph& g, const LinearLayout& layout, int t, const PlanarizationResult& result,
                          Problem problem);

/// Optimum of `problem` by brute force within the limit, else by the DP.
int solve_optimum(const Graph& g, Problem problem, const LinearLayout* layout_hint = nullptr);

struct HostTrial {
    int n = 0;
    int m = 0;
    std::pair<Vertex, Vertex> e1, e2;
    int opt_before = 0;
    int opt_after = 0;
    int dp_width = 0;
    std::int64_t max_live_states = 0;
    bool ok = false;
};

/// Random connected hosts with 4..max_n vertices (edge probability 0.4) and a
/// random pair of disjoint edges replaced by the gadget: opt(G) by brute
/// force, opt(G') by the layout DP. ok iff opt(G') = opt(G) + shift.
std::vector<HostTrial> gadget_host_trials(const CrossoverGadget& gadget, int hosts, std::uint64_t seed, int max_n);

}  // namespace ctw
