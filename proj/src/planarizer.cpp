#include "ctw/planarizer.hpp"

#include <algorithm>

#include "ctw/drawing.hpp"
#include "ctw/error.hpp"
#include "ctw/generators.hpp"
#include "ctw/solvers.hpp"

namespace ctw {

PlanarizationResult planarize(const Graph& g, const LinearLayout& layout, int t, const CrossoverGadget& gadget) {
    layout.check_for(g);
    check_gadget_structure(gadget);
    if (gadget.problem == Problem::is && !certify_is_gadget(gadget))
        throw PreconditionError("planarize: IS gadget does not pass certification");

    const ArcDrawing d = build_arc_drawing(g, layout);
    const std::vector<Element> elements = element_order(d);
    const Graph& h = gadget.h;
    const auto& term = gadget.terminals;

    PlanarizationResult r;
    r.width_in = cut_profile(g, layout).max_width;
    r.gadget_width = gadget.layout_width();
    r.shift = gadget.shift;

    GraphBuilder gb(g);
    std::vector<Vertex> tail(d.arcs.size()), head(d.arcs.size());
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        const Arc& a = d.arcs[i];
        tail[i] = layout.at(a.left - 1);
        head[i] = layout.at(a.right - 1);
    }
    std::vector<Vertex> order;
    order.reserve(g.vertex_count() + d.crossings.size() * h.vertex_count());
    int k = 0;
    for (const Element& el : elements) {
        if (el.kind == Element::Kind::vertex) {
            order.push_back(el.index);
            continue;
        }
        const Crossing& c = d.crossings[el.index];
        const int e1 = c.first, e2 = c.second;
        gb.remove_edge(tail[e1], head[e1]);
        gb.remove_edge(tail[e2], head[e2]);
        const std::string prefix = "gadget#" + std::to_string(k++) + ":";
        const Vertex first = gb.add_vertices(h.vertex_count());
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            gb.set_label(first + v, prefix + (h.label(v).empty() ? std::to_string(v + 1) : h.label(v)));
        for (Edge e : h.edges()) gb.add_edge(first + e.u, first + e.v);
        gb.add_edge(tail[e1], first + term[0]);
        gb.add_edge(first + term[1], head[e1]);
        gb.add_edge(tail[e2], first + term[2]);
        gb.add_edge(first + term[3], head[e2]);
        tail[e1] = first + term[1];
        tail[e2] = first + term[3];
        for (Vertex v : gadget.layout.order()) order.push_back(first + v);
    }

    r.g_prime = gb.build();
    r.layout_prime = LinearLayout(std::move(order));
    r.crossings_replaced = k;
    r.t_prime = t + k * gadget.shift;
    r.profile_prime = cut_profile(r.g_prime, r.layout_prime);
    r.width_out = r.profile_prime.max_width;

    const long long l = k;
    if (r.g_prime.vertex_count() != g.vertex_count() + l * h.vertex_count())
        throw InvariantViolation("planarize: vertex accounting mismatch");
    if (r.g_prime.edge_count() != g.edge_count() - 2 * l + l * (h.edge_count() + 4))
        throw InvariantViolation("planarize: edge accounting mismatch");
    const int claim2 = r.width_in + r.gadget_width + 4;
    for (int i = 0; i + 1 < r.layout_prime.size(); ++i) {
        const bool original = r.layout_prime.at(i) < g.vertex_count();
        const int bound = original ? r.width_in : claim2;
        if (r.profile_prime.widths[i] > bound)
            throw InvariantViolation("planarize: cut after position " + std::to_string(i + 1) + " is " +
                                     std::to_string(r.profile_prime.widths[i]) + " > " + std::to_string(bound));
    }
    if (r.width_out > claim2) throw InvariantViolation("planarize: width bound violated");
    if (!is_planar(r.g_prime)) throw InvariantViolation("planarize: output is not planar");
    return r;
}

int solve_optimum(const Graph& g, Problem problem, const LinearLayout* layout_hint) {
    if (g.vertex_count() <= kDefaultBruteForceLimit)
        return problem == Problem::is ? brute_is(g) : brute_ds(g);
    std::vector<LinearLayout> hints;
    if (layout_hint) hints.push_back(*layout_hint);
    LinearLayout layout = narrowest_layout(g, hints);
    return problem == Problem::is ? dp_is(g, layout).optimum : dp_ds(g, layout).optimum;
}

PlanarizationCheck verify_planarization_report(const Graph& g, const LinearLayout& layout, int t,
                                               const PlanarizationResult& result, Problem problem) {
    PlanarizationCheck c;
    c.planar = is_planar(result.g_prime);
    const int width_in = cut_profile(g, layout).max_width;
    const int width_out = cut_profile(result.g_prime, result.layout_prime).max_width;
    c.width_bound = width_in == result.width_in && width_out == result.width_out &&
                    width_out <= width_in + result.gadget_width + 4;
    c.target = result.t_prime == t + result.crossings_replaced * result.shift;
    c.opt_before = solve_optimum(g, problem, &layout);
    std::vector<LinearLayout> hints{result.layout_prime};
    LinearLayout best = narrowest_layout(result.g_prime, hints);
    c.opt_after = problem == Problem::is ? dp_is(result.g_prime, best).optimum : dp_ds(result.g_prime, best).optimum;
    c.optimum_shift = c.opt_after == c.opt_before + result.crossings_replaced * result.shift;
    if (!c.planar) c.detail += "output not planar; ";
    if (!c.width_bound) c.detail += "width bound or recorded widths wrong; ";
    if (!c.target) c.detail += "t' != t + l*c; ";
    if (!c.optimum_shift)
        c.detail += "opt shift " + std::to_string(c.opt_after - c.opt_before) + " != " +
                    std::to_string(result.crossings_replaced * result.shift) + "; ";
    return c;
}

bool verify_planarization(const Graph& g, const LinearLayout& layout, int t, const PlanarizationResult& result,
                          Problem problem) {
    return verify_planarization_report(g, layout, t, result, problem).passed();
}

std::vector<HostTrial> gadget_host_trials(const CrossoverGadget& gadget, int hosts, std::uint64_t seed, int max_n) {
    if (max_n < 4) throw PreconditionError("host trials need max_n >= 4");
    Rng rng(seed);
    std::uniform_int_distribution<int> size(4, max_n);
    std::vector<HostTrial> out;
    for (int i = 0; i < hosts; ++i) {
        EdgePairHost host = random_edge_pair_host(size(rng), 0.4, rng);
        HostTrial t;
        t.n = host.graph.vertex_count();
        t.m = host.graph.edge_count();
        t.e1 = host.e1;
        t.e2 = host.e2;
        t.opt_before = gadget.problem == Problem::is ? brute_is(host.graph) : brute_ds(host.graph);
        Graph gp = replace_edges_by_gadget(host.graph, host.e1, host.e2, gadget).graph;
        LinearLayout layout = heuristic_layout(gp);
        DPReport r = gadget.problem == Problem::is ? dp_is(gp, layout) : dp_ds(gp, layout);
        t.opt_after = r.optimum;
        t.dp_width = r.width_used;
        t.max_live_states = r.max_live_states;
        t.ok = t.opt_after == t.opt_before + gadget.shift;
        out.push_back(t);
    }
    return out;
}

}  // namespace ctw
