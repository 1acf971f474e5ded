#pragma once

#include <cstddef>
#include <cstdint>

#include "ctw/graph.hpp"

namespace ctw {

inline constexpr int kDefaultBruteForceLimit = 24;
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;

/// Maximum independent set size by branching on a maximum-degree vertex.
int brute_is(const Graph& g, int vertex_limit = kDefaultBruteForceLimit);
/// Minimum dominating set size by enumerating subsets in increasing size.
int brute_ds(const Graph& g, int vertex_limit = kDefaultBruteForceLimit);
/// Minimum vertex cover size by branching on uncovered edges.
int brute_vc(const Graph& g, int vertex_limit = kDefaultBruteForceLimit);

struct DPReport {
    int optimum = 0;
    /// Peak number of finite table entries over all bags.
    std::int64_t max_live_states = 0;
    int bag_count = 0;
    int width_used = -1;
};

struct DPOptions {
    std::size_t memory_budget = kDefaultMemoryBudget;
};

/// Maximum independent set over layout_to_path_decomposition(g, layout).
/// Table entries per bag: 2^|bag|. Throws ResourceError above the budget.
DPReport dp_is(const Graph& g, const LinearLayout& layout, const DPOptions& options = {});

/// Minimum dominating set. Each bag vertex is in the set, out and dominated,
/// or out and not yet dominated; forgetting an undominated vertex is rejected.
DPReport dp_ds(const Graph& g, const LinearLayout& layout, const DPOptions& options = {});

/// Greedy order that appends the vertex giving the smallest next cut (ties:
/// more edges back to placed vertices, then lower id), refined by windowed
/// vertex moves and segment reversals on (max cut, sum of squared cuts).
LinearLayout heuristic_layout(const Graph& g);

/// heuristic_layout and the supplied candidates, whichever yields the
/// narrowest path decomposition (first wins on ties).
LinearLayout narrowest_layout(const Graph& g, std::span<const LinearLayout> candidates = {});

}  // namespace ctw
