#include "ctw/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "ctw/error.hpp"

namespace ctw {

namespace {

using Mask = std::uint64_t;

void check_brute_size(const Graph& g, int limit, const char* name) {
    if (g.vertex_count() > limit || g.vertex_count() > 64)
        throw OracleLimitError(std::string(name) + ": " + std::to_string(g.vertex_count()) +
                               " vertices exceeds brute-force limit " + std::to_string(std::min(limit, 64)));
}

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nb(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) nb[v] = g.neighbor_mask(v);
    return nb;
}

Mask bit(int v) { return Mask{1} << v; }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

int mis(const std::vector<Mask>& nb, Mask live) {
    if (!live) return 0;
    int best_v = -1, best_d = -1, low_v = -1, low_d = 65;
    for (Mask t = live; t; t &= t - 1) {
        int v = std::countr_zero(t);
        int d = std::popcount(nb[v] & live);
        if (d > best_d) best_d = d, best_v = v;
        if (d < low_d) low_d = d, low_v = v;
    }
    // a vertex of degree <= 1 is always in some maximum independent set
    if (low_d <= 1) return 1 + mis(nb, live & ~(nb[low_v] | bit(low_v)));
    int with = 1 + mis(nb, live & ~(nb[best_v] | bit(best_v)));
    int without = mis(nb, live & ~bit(best_v));
    return std::max(with, without);
}

void vc_search(const std::vector<Mask>& nb, Mask uncovered_graph, int used, int& best) {
    // uncovered_graph: vertices not yet decided; edges among them are uncovered
    int v = -1, dv = 0;
    for (Mask t = uncovered_graph; t; t &= t - 1) {
        int w = std::countr_zero(t);
        int d = std::popcount(nb[w] & uncovered_graph);
        if (d > dv) dv = d, v = w;
    }
    if (v < 0) {
        best = std::min(best, used);
        return;
    }
    if (used + 1 >= best) return;
    // either v is in the cover, or all of its remaining neighbors are
    vc_search(nb, uncovered_graph & ~bit(v), used + 1, best);
    Mask nv = nb[v] & uncovered_graph;
    int k = std::popcount(nv);
    if (used + k < best) vc_search(nb, uncovered_graph & ~nv & ~bit(v), used + k, best);
}

}  // namespace

int brute_is(const Graph& g, int vertex_limit) {
    check_brute_size(g, vertex_limit, "brute_is");
    return mis(neighbor_masks(g), full_mask(g.vertex_count()));
}

int brute_vc(const Graph& g, int vertex_limit) {
    check_brute_size(g, vertex_limit, "brute_vc");
    int best = g.vertex_count();
    vc_search(neighbor_masks(g), full_mask(g.vertex_count()), 0, best);
    return best;
}

int brute_ds(const Graph& g, int vertex_limit) {
    check_brute_size(g, vertex_limit, "brute_ds");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<Mask> closed = neighbor_masks(g);
    int max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        closed[v] |= bit(v);
        max_deg = std::max(max_deg, g.degree(v));
    }
    const Mask all = full_mask(n);
    for (int k = (n + max_deg) / (max_deg + 1); k <= n; ++k) {
        // Gosper's hack over k-subsets of n bits
        Mask s = full_mask(k);
        while (true) {
            Mask dom = 0;
            for (Mask t = s; t; t &= t - 1) dom |= closed[std::countr_zero(t)];
            if (dom == all) return k;
            if (k == 0 || k == n) break;
            Mask c = s & (~s + 1);
            Mask r = s + c;
            if (r == 0 || (r & ~all)) break;
            s = (((r ^ s) >> 2) / c) | r;
            if (s & ~all) break;
        }
    }
    return n;
}

// ---------------------------------------------------------------- DP

namespace {

constexpr int kNegInf = std::numeric_limits<int>::min() / 2;
constexpr int kPosInf = std::numeric_limits<int>::max() / 2;

struct Table {
    int base;
    std::vector<Vertex> slots;
    std::vector<std::int64_t> pw;  // pw[j] = base^j, size slots+1
    std::vector<int> values;

    explicit Table(int b) : base(b), pw{1}, values{0} {}

    std::size_t size() const { return values.size(); }
    int slot_of(Vertex v) const {
        auto it = std::find(slots.begin(), slots.end(), v);
        return it == slots.end() ? -1 : static_cast<int>(it - slots.begin());
    }
};

std::int64_t count_finite(const std::vector<int>& values, int inf) {
    return std::count_if(values.begin(), values.end(), [&](int x) { return x != inf; });
}

std::int64_t ipow(int base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / base) return std::numeric_limits<std::int64_t>::max();
        r *= base;
    }
    return r;
}

void check_budget(int base, int width, const DPOptions& options, const char* name) {
    std::int64_t entries = ipow(base, width + 1);
    // two live tables at a time
    const double bytes = static_cast<double>(entries) * sizeof(int) * 2.0;
    if (bytes > static_cast<double>(options.memory_budget))
        throw ResourceError(std::string(name) + ": width " + std::to_string(width) + " needs " +
                                std::to_string(static_cast<long long>(bytes / (1 << 20))) +
                                " MiB, exceeds memory budget",
                            width);
}

// Removes slot j, combining entries with `pick` over the allowed digits.
template <class Pick>
void forget_slot(Table& t, int j, int allowed_digits, int inf, Pick pick) {
    const int b = t.base;
    const std::int64_t low_span = t.pw[j];
    const std::size_t new_size = t.size() / b;
    std::vector<int> next(new_size, inf);
    for (std::size_t idx = 0; idx < new_size; ++idx) {
        std::int64_t low = static_cast<std::int64_t>(idx) % low_span;
        std::int64_t high = static_cast<std::int64_t>(idx) / low_span;
        std::int64_t base_old = low + low_span * b * high;
        int acc = inf;
        for (int d = 0; d < allowed_digits; ++d) {
            int v = t.values[base_old + low_span * d];
            if (v != inf) acc = acc == inf ? v : pick(acc, v);
        }
        next[idx] = acc;
    }
    t.values = std::move(next);
    t.slots.erase(t.slots.begin() + j);
    t.pw.pop_back();
}

template <class Introduce>
DPReport run_dp(const Graph& g, const LinearLayout& layout, int base, int inf, const DPOptions& options,
                const char* name, Introduce introduce, int forget_digits, bool maximize) {
    PathDecomposition pd = layout_to_path_decomposition(g, layout);
    DPReport report;
    report.bag_count = static_cast<int>(pd.bags.size());
    report.width_used = pd.width;
    check_budget(base, std::max(pd.width, 0), options, name);
    auto pick = [maximize](int a, int b) { return maximize ? std::max(a, b) : std::min(a, b); };

    Table t(base);
    report.max_live_states = 1;
    for (std::size_t i = 0; i < pd.bags.size(); ++i) {
        const auto& bag = pd.bags[i];
        Vertex v = bag.back();
        // forget slots not in the new bag (bag = live earlier vertices + v)
        for (int j = static_cast<int>(t.slots.size()) - 1; j >= 0; --j)
            if (std::find(bag.begin(), bag.end(), t.slots[j]) == bag.end()) forget_slot(t, j, forget_digits, inf, pick);
        std::vector<int> nbr_slots;
        for (int j = 0; j < static_cast<int>(t.slots.size()); ++j)
            if (g.has_edge(v, t.slots[j])) nbr_slots.push_back(j);
        introduce(t, v, nbr_slots);
        t.slots.push_back(v);
        t.pw.push_back(t.pw.back() * base);
        report.max_live_states = std::max(report.max_live_states, count_finite(t.values, inf));
    }
    while (!t.slots.empty()) forget_slot(t, static_cast<int>(t.slots.size()) - 1, forget_digits, inf, pick);
    if (t.values[0] == inf) throw InvariantViolation(std::string(name) + ": no feasible solution");
    report.optimum = t.values[0];
    const std::int64_t ceiling = ipow(base, report.width_used + 1);
    if (report.max_live_states > ceiling)
        throw InvariantViolation(std::string(name) + ": live states exceed " + std::to_string(base) + "^(w+1)");
    return report;
}

}  // namespace

DPReport dp_is(const Graph& g, const LinearLayout& layout, const DPOptions& options) {
    layout.check_for(g);
    // digit 0 = out, 1 = in
    auto introduce = [](Table& t, Vertex, const std::vector<int>& nbr) {
        const std::size_t n = t.size();
        std::vector<int> next(n * 2, kNegInf);
        std::int64_t nbr_mask = 0;
        for (int j : nbr) nbr_mask |= std::int64_t{1} << j;
        for (std::size_t idx = 0; idx < n; ++idx) {
            int v = t.values[idx];
            if (v == kNegInf) continue;
            next[idx] = v;
            if ((static_cast<std::int64_t>(idx) & nbr_mask) == 0) next[idx + n] = v + 1;
        }
        t.values = std::move(next);
    };
    return run_dp(g, layout, 2, kNegInf, options, "dp_is", introduce, 2, true);
}

DPReport dp_ds(const Graph& g, const LinearLayout& layout, const DPOptions& options) {
    layout.check_for(g);
    // digit 0 = in the set, 1 = out and dominated, 2 = out and not yet dominated
    auto introduce = [](Table& t, Vertex, const std::vector<int>& nbr) {
        const std::size_t n = t.size();
        std::vector<int> next(n * 3, kPosInf);
        for (std::size_t idx = 0; idx < n; ++idx) {
            int v = t.values[idx];
            if (v == kPosInf) continue;
            bool has_in = false;
            std::int64_t promoted = static_cast<std::int64_t>(idx);
            for (int j : nbr) {
                int d = static_cast<int>((static_cast<std::int64_t>(idx) / t.pw[j]) % 3);
                if (d == 0) has_in = true;
                if (d == 2) promoted -= t.pw[j];
            }
            // new vertex in the set: dominates undominated neighbors
            int& in_slot = next[promoted];
            in_slot = std::min(in_slot, v + 1);
            // new vertex out
            std::size_t out_idx = idx + n * (has_in ? 1 : 2);
            next[out_idx] = std::min(next[out_idx], v);
        }
        t.values = std::move(next);
    };
    return run_dp(g, layout, 3, kPosInf, options, "dp_ds", introduce, 2, false);
}

// ---------------------------------------------------------------- layouts

namespace {

// Ordered lexicographically: DP width first, then cutwidth, then the
// approximate DS table volume and the spread of the cut profile.
struct LayoutScore {
    int separation = 0;
    int cut = 0;
    double bag_volume = 0;
    std::int64_t cut_squares = 0;

    auto operator<=>(const LayoutScore&) const = default;
};

LayoutScore score_order(const Graph& g, const std::vector<Vertex>& order, std::vector<int>& pos,
                        std::vector<int>& d_sep, std::vector<int>& d_cut) {
    const int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::fill(d_sep.begin(), d_sep.end(), 0);
    std::fill(d_cut.begin(), d_cut.end(), 0);
    for (Vertex v = 0; v < n; ++v) {
        int last = pos[v];
        for (Vertex w : g.neighbors(v)) {
            last = std::max(last, pos[w]);
            if (pos[w] > pos[v]) ++d_cut[pos[v]], --d_cut[pos[w]];
        }
        if (last > pos[v]) ++d_sep[pos[v]], --d_sep[last];
    }
    LayoutScore s;
    int sep = 0, cut = 0;
    for (int i = 0; i + 1 < n; ++i) {
        sep += d_sep[i];
        cut += d_cut[i];
        s.separation = std::max(s.separation, sep);
        s.cut = std::max(s.cut, cut);
        s.bag_volume += std::pow(3.0, sep);
        s.cut_squares += std::int64_t{cut} * cut;
    }
    return s;
}

class Scorer {
public:
    explicit Scorer(const Graph& g) : g_(g), pos_(g.vertex_count()), d_sep_(g.vertex_count() + 1), d_cut_(g.vertex_count() + 1) {}
    LayoutScore operator()(const std::vector<Vertex>& order) { return score_order(g_, order, pos_, d_sep_, d_cut_); }

private:
    const Graph& g_;
    std::vector<int> pos_, d_sep_, d_cut_;
};

// Appends the vertex giving the smallest next cut; ties prefer more edges back
// to placed vertices, then the lower id.
std::vector<Vertex> greedy_cut_order(const Graph& g, Vertex start) {
    const int n = g.vertex_count();
    std::vector<Vertex> order{start};
    order.reserve(n);
    std::vector<int> back(n, 0);
    std::vector<char> placed(n, 0);
    placed[start] = 1;
    int cut = g.degree(start);
    for (Vertex w : g.neighbors(start)) ++back[w];
    for (int step = 1; step < n; ++step) {
        Vertex pick = -1;
        int pick_cut = 0, pick_back = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int c = cut + g.degree(v) - 2 * back[v];
            if (pick < 0 || c < pick_cut || (c == pick_cut && back[v] > pick_back))
                pick = v, pick_cut = c, pick_back = back[v];
        }
        placed[pick] = 1;
        order.push_back(pick);
        cut = pick_cut;
        for (Vertex w : g.neighbors(pick)) ++back[w];
    }
    return order;
}

// Appends the vertex giving the fewest placed vertices with unplaced
// neighbors; ties prefer more placed neighbors, then the lower id. A vertex
// without placed neighbors is taken only when nothing else is open.
std::vector<Vertex> greedy_separation_order(const Graph& g, Vertex start) {
    const int n = g.vertex_count();
    std::vector<int> open_deg(n);
    for (Vertex v = 0; v < n; ++v) open_deg[v] = g.degree(v);
    std::vector<char> placed(n, 0), live(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    int live_count = 0;
    auto place = [&](Vertex v) {
        placed[v] = 1;
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!placed[w]) continue;
            --open_deg[v];
            if (--open_deg[w] == 0 && live[w]) live[w] = 0, --live_count;
        }
        if (open_deg[v] > 0) live[v] = 1, ++live_count;
    };
    place(start);
    for (int step = 1; step < n; ++step) {
        Vertex pick = -1;
        int pick_key = 0, pick_adj = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int adj = 0, closes = 0;
            for (Vertex w : g.neighbors(v))
                if (placed[w]) {
                    ++adj;
                    if (open_deg[w] == 1) ++closes;
                }
            int key = live_count - closes + (g.degree(v) > adj ? 1 : 0);
            if (adj == 0 && live_count > 0) key += n + 1;
            if (pick < 0 || key < pick_key || (key == pick_key && adj > pick_adj)) pick = v, pick_key = key, pick_adj = adj;
        }
        place(pick);
    }
    return order;
}

// Windowed descent: single-vertex moves and segment reversals, accepted when
// the score strictly improves.
void refine(const Graph& g, std::vector<Vertex>& order, int window, int max_passes) {
    const int n = static_cast<int>(order.size());
    Scorer score(g);
    LayoutScore best = score(order);
    std::vector<Vertex> trial;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool improved = false;
        for (int i = 0; i < n; ++i) {
            for (int j = std::max(0, i - window); j <= std::min(n - 1, i + window); ++j) {
                if (j == i) continue;
                for (int kind = 0; kind < 2; ++kind) {
                    if (kind == 1 && j < i + 2) continue;
                    trial = order;
                    if (kind == 1) {
                        std::reverse(trial.begin() + i, trial.begin() + j + 1);
                    } else {
                        Vertex v = trial[i];
                        trial.erase(trial.begin() + i);
                        trial.insert(trial.begin() + j, v);
                    }
                    LayoutScore s = score(trial);
                    if (s < best) {
                        best = s;
                        order.swap(trial);
                        improved = true;
                    }
                }
            }
        }
        if (!improved) break;
    }
}

}  // namespace

LinearLayout heuristic_layout(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return LinearLayout::identity(n);
    Vertex min_deg = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(min_deg)) min_deg = v;

    Scorer score(g);
    std::vector<Vertex> best = greedy_cut_order(g, min_deg);
    LayoutScore best_score = score(best);
    auto consider = [&](std::vector<Vertex> order) {
        LayoutScore s = score(order);
        if (s < best_score) best_score = s, best = std::move(order);
    };
    // every start vertex for small graphs, only the minimum-degree one otherwise
    const bool small = n <= 400;
    for (Vertex s = 0; s < n; ++s)
        if (small || s == min_deg) consider(greedy_separation_order(g, s));
    if (small) refine(g, best, 8, 6);
    return LinearLayout(std::move(best));
}

LinearLayout narrowest_layout(const Graph& g, std::span<const LinearLayout> candidates) {
    LinearLayout best = heuristic_layout(g);
    int best_width = layout_to_path_decomposition(g, best).width;
    for (const auto& c : candidates) {
        int w = layout_to_path_decomposition(g, c).width;
        if (w < best_width) best = c, best_width = w;
    }
    return best;
}

}  // namespace ctw
