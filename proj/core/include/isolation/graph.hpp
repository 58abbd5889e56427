#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace isolation {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    [[nodiscard]] auto contains(Vertex v) const -> bool;
    void insert(Vertex v);
    void insert(const VertexSet & other);
    [[nodiscard]] auto united(const VertexSet & other) const -> VertexSet;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return _members.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return _members.empty(); }
    [[nodiscard]] auto members() const noexcept -> const std::vector<Vertex> & { return _members; }
    [[nodiscard]] auto begin() const noexcept { return _members.begin(); }
    [[nodiscard]] auto end() const noexcept { return _members.end(); }

    /// True iff every member lies in [0, order).
    [[nodiscard]] auto within(int order) const -> bool;

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
    std::vector<Vertex> _members;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs are merged; self-loops
    /// and endpoints outside [0, n) are rejected with IsolationError.
    static auto from_edge_list(int n, std::span<const Edge> pairs) -> Graph;
    static auto from_edge_list(int n, std::initializer_list<Edge> pairs) -> Graph;

    [[nodiscard]] auto order() const noexcept -> int { return static_cast<int>(_adjacency.size()); }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _edge_count; }
    [[nodiscard]] auto neighbors(Vertex v) const -> std::span<const Vertex> { return _adjacency[v]; }
    [[nodiscard]] auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency[v].size()); }
    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Edges (u, v) with u < v in lexicographic order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<std::vector<Vertex>> _adjacency;
    std::size_t _edge_count = 0;
};

/// An induced subgraph together with the ids its vertices had in the parent.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;

    [[nodiscard]] auto lift(const VertexSet & local) const -> VertexSet;
};

struct MaxDegree {
    int degree = 0;
    Vertex vertex = 0;
};

enum class SKind { none, p3, c3, c7, c11 };

inline constexpr int infinite_distance = std::numeric_limits<int>::max();

auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto star_graph(int leaves) -> Graph;
auto empty_graph(int n) -> Graph;

/// Disjoint union; vertices of `b` are shifted by a.order().
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

auto closed_neighborhood(const Graph & g, const VertexSet & d) -> VertexSet;
auto open_neighborhood(const Graph & g, const VertexSet & d) -> VertexSet;

auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Subgraph;
auto delete_vertices(const Graph & g, const VertexSet & removed) -> Subgraph;
auto delete_closed_neighborhood(const Graph & g, const VertexSet & d) -> Subgraph;

/// Connected components ordered by their smallest original vertex id.
auto components(const Graph & g) -> std::vector<Subgraph>;
auto is_connected(const Graph & g) -> bool;

/// Maximum degree and the smallest vertex attaining it; throws on n = 0.
auto max_degree(const Graph & g) -> MaxDegree;

auto classify_s_graph(const Graph & g) -> SKind;
auto s_kind_order(SKind kind) -> int;
auto to_string(SKind kind) -> const char *;

/// Unweighted distances from `source`; unreachable vertices hold infinite_distance.
auto bfs_distance(const Graph & g, Vertex source) -> std::vector<int>;

} // namespace isolation
