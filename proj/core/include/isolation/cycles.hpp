#pragma once

#include "isolation/graph.hpp"

#include <optional>
#include <vector>

namespace isolation {

/// A cycle listed in traversal order. `induced` is set when no chord exists
/// among the listed vertices.
struct CycleWitness {
    std::vector<Vertex> vertices;
    bool induced = false;
};

struct AdmissibilityReport {
    bool c6_free = true;
    bool induced5_free = true;
    bool induced6_free = true;
    std::optional<CycleWitness> six_cycle;
    std::optional<CycleWitness> induced_five_cycle;
    std::optional<CycleWitness> induced_six_cycle;

    [[nodiscard]] auto induced56_free() const -> bool { return induced5_free && induced6_free; }
};

/// Exhaustive search for a cycle on exactly `length` vertices. The returned
/// cycle starts at its smallest vertex, and its second vertex is smaller than
/// its last one.
auto find_cycle_of_length(const Graph & g, int length) -> std::optional<CycleWitness>;

/// Exhaustive search for a chordless cycle on exactly `length` vertices.
auto find_induced_cycle_of_length(const Graph & g, int length) -> std::optional<CycleWitness>;

/// True iff adding the (absent) edge {u, w} would create a cycle of the given
/// length through it; with `induced`, only chordless ones count.
auto edge_closes_cycle(const Graph & g, Vertex u, Vertex w, int length, bool induced) -> bool;

/// Length of a shortest cycle, or infinite_distance for forests.
auto girth(const Graph & g) -> int;

auto classify_admissibility(const Graph & g) -> AdmissibilityReport;

/// Checks that the listed vertices form a cycle of g (and a chordless one when
/// `w.induced` is set).
auto is_valid_cycle(const Graph & g, const CycleWitness & w) -> bool;

} // namespace isolation
