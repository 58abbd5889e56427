#pragma once

#include "isolation/graph.hpp"

namespace isolation {

/// A k-isolating set D together with Δ(G − N[D]).
struct IsolationCertificate {
    int k = 1;
    VertexSet witness;
    int residual_max_degree = 0;
    bool optimal = false;

    [[nodiscard]] auto size() const -> int { return static_cast<int>(witness.size()); }
};

struct IsolationCheck {
    bool isolating = false;
    int residual_max_degree = 0;
};

/// Δ(G − N[D]); 0 when the residual graph is empty.
auto residual_max_degree(const Graph & g, const VertexSet & d) -> int;

auto is_k_isolating(const Graph & g, const VertexSet & d, int k) -> IsolationCheck;

enum class ExactMethod {
    branch_and_bound,
    /// increasing-cardinality subset enumeration, order <= 20 per component;
    /// kept as an independent oracle
    subset_enumeration,
};

/// Largest component order the exact solvers accept.
inline constexpr int max_exact_component_order = 64;
inline constexpr int max_enumeration_order = 20;

/// Minimum k-isolating set, solved per connected component and summed.
/// Throws IsolationError(order_too_large) when a component exceeds the
/// method's limit.
auto iota_exact(const Graph & g, int k, ExactMethod method = ExactMethod::branch_and_bound) -> IsolationCertificate;

/// Valid, not necessarily minimum, k-isolating set: repeatedly add the vertex
/// whose closed neighbourhood contains the most violating vertices.
auto greedy_upper_bound(const Graph & g, int k) -> IsolationCertificate;

/// Hypothesis of the composition lemma: D ⊆ S isolates G[S] with residual
/// degree <= k and no edge joins S \ N[D] to V \ S.
auto compose_lemma22(const Graph & g, const VertexSet & s, const VertexSet & d, int k) -> bool;

/// Weaker hypothesis that still makes D ∪ D' k-isolating for any k-isolating
/// D' of G − S: every edge leaving S \ N[D] ends inside N[D].
auto composition_holds(const Graph & g, const VertexSet & s, const VertexSet & d, int k) -> bool;

} // namespace isolation
