#pragma once

#include "isolation/graph.hpp"
#include "isolation/harness/report.hpp"

#include <cstdint>
#include <vector>

namespace isolation::harness {

struct SearchOptions {
    int nmin = 4;
    int nmax = 12;
    long long budget = 1000;
    std::uint64_t seed = 0;
    /// Restart from a random tree after this many steps without a new best.
    int restart_after = 250;
};

struct Improvement {
    long long step = 0;
    Graph graph;
    int iota = 0;
    Ratio ratio;
};

/// Hill climbing over connected graphs without induced 6-cycles whose order
/// lies in [nmin, nmax], excluding P3, C3, C7 and C11. The objective is
/// ι₁(G)/n computed exactly.
struct SearchState {
    Graph current;
    Ratio current_ratio;
    Graph best;
    Ratio best_ratio;
    VertexSet best_witness;
    std::uint64_t seed = 0;
    long long steps = 0;
    long long accepted = 0;
    int restarts = 0;
    int restart_after = 0;
    std::vector<Improvement> history;
};

/// True iff the graph may be visited by the search.
auto search_eligible(const Graph & g, int nmin, int nmax) -> bool;

/// Starting point: G_t on a path with P3 gadgets when 4t fits the range,
/// otherwise the path on nmin vertices.
auto initial_search_graph(int nmin, int nmax) -> Graph;

/// Requires 4 <= nmin <= nmax.
auto run_search(const SearchOptions & options) -> SearchState;

} // namespace isolation::harness
