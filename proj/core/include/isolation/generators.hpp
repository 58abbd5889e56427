#pragma once

#include "isolation/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace isolation {

/// Forbidden-cycle classes handled by the two constructive tracks.
enum class AdmissibleClass {
    c6_free,
    induced56_free,
};

auto is_admissible(const Graph & g, AdmissibleClass cls) -> bool;

struct ExtremalSpec {
    Graph backbone;
    std::vector<SKind> gadget_kinds;
    /// Vertex of each gadget joined to its backbone vertex; empty means 0 for all.
    std::vector<Vertex> join_points;
    /// Pendant leaves attached to backbone vertex 0 (0..3).
    int leaves = 0;
    /// Class the backbone must belong to; unset accepts either class.
    std::optional<AdmissibleClass> target;
};

struct ExtremalInstance {
    Graph graph;
    VertexSet designated_witness;
    /// Backbone vertex i together with the vertices of its gadget.
    std::vector<VertexSet> blocks;
    int leaves = 0;
};

/// Backbone vertices keep ids 0..t-1, gadget i follows in order, leaves come
/// last. Throws IsolationError(bad_spec) or (inadmissible_backbone).
auto build_extremal(const ExtremalSpec & spec) -> ExtremalInstance;

/// Connected graph of the class: a Prüfer-random spanning tree followed by
/// random edge insertions that keep the class, until target_edges edges exist
/// or 50 * target_edges insertions have been rejected.
auto random_admissible(int n, std::size_t target_edges, AdmissibleClass cls, std::uint64_t seed) -> Graph;

inline constexpr int max_enumeration_graph_order = 8;
inline constexpr int max_canonical_order = 11;

/// Canonical adjacency code: two graphs of equal order share a code iff they
/// are isomorphic. Permutations are restricted to ones that respect an
/// ordering by isomorphism-invariant vertex signatures.
auto canonical_code(const Graph & g) -> std::uint64_t;
auto canonical_form(const Graph & g) -> Graph;

/// Every graph of order n up to isomorphism, in canonical form, sorted by code.
auto enumerate_graphs(int n) -> std::vector<Graph>;

/// Connected graphs of order n up to isomorphism, sorted by code.
auto enumerate_connected(int n) -> std::vector<Graph>;

} // namespace isolation
