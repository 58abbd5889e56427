#pragma once

#include "isolation/constructive.hpp"
#include "isolation/graph.hpp"
#include "isolation/harness/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isolation::harness {

struct GraphInput {
    std::string source; ///< file name, for the report
    std::vector<Graph> graphs;
};

auto cmd_compute(const GraphInput & input, int k) -> RunReport;

/// Violations count the graphs on which the witness is not k-isolating.
auto cmd_verify(const GraphInput & input, const VertexSet & witness, int k) -> RunReport;

struct ConstructRequest {
    Track track = Track::thm16;
    bool trace = false;
    bool fallback_to_exact = false;
};

/// Graphs outside the track's hypothesis are rejected per graph and are not
/// violations; a failed or oversized construction is.
auto cmd_construct(const GraphInput & input, const ConstructRequest & request) -> RunReport;

struct ExtremalRequest {
    int t = 1;
    std::vector<SKind> kinds; ///< one per backbone vertex, or a single kind for all
    std::vector<Vertex> join_points;
    int leaves = 0;
    std::string backbone = "path"; ///< path, star, cycle or complete on t vertices
    std::string out;               ///< edge-list destination; empty skips writing
    bool exact = false;            ///< also compute the exact value
};

auto cmd_extremal(const ExtremalRequest & request) -> RunReport;

enum class Assertion { thm11, thm15, thm16, thm17 };

struct ScanRequest {
    int nmax = 8;
    Assertion assertion = Assertion::thm16;
    int k = 1; ///< only used by thm11
};

auto cmd_scan(const ScanRequest & request) -> RunReport;

struct SearchRequest {
    int nmin = 4;
    int nmax = 12;
    long long budget = 1000;
    std::uint64_t seed = 0;
    int restart_after = 250;
    std::string out; ///< best instance destination; empty skips writing
};

auto cmd_search(const SearchRequest & request) -> RunReport;

auto parse_kind(const std::string & name) -> SKind;
auto parse_assertion(const std::string & name) -> Assertion;
auto parse_track(const std::string & name) -> Track;
/// Comma-separated list of non-negative integers; blank means empty.
auto parse_vertex_csv(const std::string & text) -> std::vector<Vertex>;

} // namespace isolation::harness
