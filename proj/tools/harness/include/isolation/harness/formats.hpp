#pragma once

#include "isolation/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace isolation::harness {

enum class GraphFormat { edge_list, graph6 };

inline constexpr int max_graph6_order = 62;

/// One or more blocks of `n m` followed by m lines `u v`; `#` starts a comment.
auto parse_edge_list(std::string_view text) -> std::vector<Graph>;
auto write_edge_list(const Graph & g) -> std::string;

auto parse_graph6_line(std::string_view line) -> Graph;
auto write_graph6(const Graph & g) -> std::string;
/// One graph per non-empty line; a leading `>>graph6<<` header is skipped.
auto parse_graph6(std::string_view text) -> std::vector<Graph>;

/// Edge-list when the first significant character is a digit, graph6 otherwise.
auto detect_format(std::string_view text) -> GraphFormat;
auto parse_graphs(std::string_view text) -> std::vector<Graph>;

/// Reads and parses a file; "-" reads standard input.
auto read_graph_file(const std::string & path) -> std::vector<Graph>;
void write_text_file(const std::string & path, const std::string & text);

} // namespace isolation::harness
