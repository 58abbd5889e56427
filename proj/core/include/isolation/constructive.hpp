#pragma once

#include "isolation/error.hpp"
#include "isolation/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace isolation {

/// Which forbidden-cycle hypothesis the inductive construction relies on.
enum class Track {
    thm16, ///< no 6-cycles
    thm17, ///< no induced 5- or 6-cycles
};

auto to_string(Track track) -> const char *;

struct CaseStep {
    std::string label;
    /// Vertices this step adds to the witness (ids of the input graph).
    VertexSet fragment;
    /// Vertex set of the subgraph the step was taken in.
    VertexSet scope;
};

struct CaseTrace {
    std::vector<CaseStep> steps;
    bool used_fallback = false;

    [[nodiscard]] auto fragments_union() const -> VertexSet;
};

struct ConstructOptions {
    /// Debug aid: when a subgraph of order <= 20 exhausts the case analysis,
    /// solve it exactly instead of failing. Recorded in the trace.
    bool fallback_to_exact = false;
};

struct Construction {
    VertexSet witness;
    CaseTrace trace;
};

/// Thrown when no branch of the case analysis applies or a step fails its
/// certificate check. Always indicates a defect, never a property of the input.
class CaseExhaustion : public IsolationError {
public:
    CaseExhaustion(const std::string & message, CaseTrace trace, std::string subgraph);

    [[nodiscard]] auto trace() const -> const CaseTrace & { return _trace; }
    /// The subgraph being solved, in edge-list format with its local ids.
    [[nodiscard]] auto subgraph() const -> const std::string & { return _subgraph; }

private:
    CaseTrace _trace;
    std::string _subgraph;
};

/// One-isolating set of size <= floor(n/4) for a path or a cycle outside
/// {P3, C3, C6, C7, C11}.
auto construct_path_or_cycle(const Graph & g) -> VertexSet;

/// Fragment internal to an S-graph H attached through y: empty for P3 and C3,
/// the smaller-id vertex at distance 3 from y for C7, both such vertices for
/// C11. The first overload uses the standard labelling (path 0-1-2, cycle
/// 0..L-1).
auto s_graph_witness(SKind kind, Vertex y) -> VertexSet;
auto s_graph_witness(const Graph & h, Vertex y) -> VertexSet;

struct AttachmentGroups {
    std::vector<int> h_b; ///< S-components H with N(H) = {x}
    std::vector<int> h_g; ///< other components H with N(H) = {x}
};

/// Components of G - N[v] split into S-graphs (h_b) and the rest (h_g).
struct ComponentPartition {
    Vertex pivot = 0;
    int degree = 0;
    std::vector<VertexSet> components;
    std::vector<SKind> kinds;
    std::vector<VertexSet> attachments; ///< N(H) for each component
    std::vector<int> h_b;
    std::vector<int> h_g;
    std::map<Vertex, AttachmentGroups> per_attachment; ///< keyed by every x in N(v)
    int k3 = 0;
    int k7 = 0;
    int k11 = 0;
};

/// Partition at the smallest-id vertex of maximum degree. Requires a connected
/// graph with 3 <= Δ <= n-2.
auto partition_pivot(const Graph & g) -> ComponentPartition;

/// Same partition around an explicitly chosen vertex v (deg v >= 1, N[v] != V).
auto partition_at(const Graph & g, Vertex v) -> ComponentPartition;

auto construct_theorem16(const Graph & g, const ConstructOptions & options = {}) -> Construction;
auto construct_theorem17(const Graph & g, const ConstructOptions & options = {}) -> Construction;
auto construct(const Graph & g, Track track, const ConstructOptions & options = {}) -> Construction;

} // namespace isolation
