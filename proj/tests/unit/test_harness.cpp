#include "isolation/exact.hpp"
#include "isolation/generators.hpp"
#include "isolation/harness/commands.hpp"
#include "isolation/harness/formats.hpp"
#include "isolation/harness/search.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace isolation;
using namespace isolation::harness;

namespace {

auto input_of(std::vector<Graph> graphs) -> GraphInput
{
    return {"memory", std::move(graphs)};
}

auto parse_error_code(const std::function<void()> & f) -> bool
{
    try {
        f();
    }
    catch (const IsolationError & e) {
        return e.code() == ErrorCode::parse_error;
    }
    return false;
}

} // namespace

TEST(Formats, graph6_known_strings)
{
    EXPECT_EQ(write_graph6(path_graph(3)), "Bg");
    EXPECT_EQ(write_graph6(cycle_graph(3)), "Bw");
    EXPECT_EQ(write_graph6(complete_graph(1)), "@");
    EXPECT_EQ(parse_graph6_line("Bw"), cycle_graph(3));
    EXPECT_EQ(parse_graph6_line("Bg").size(), 2U);
}

TEST(Formats, graph6_round_trip)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(seed % 40), 0.2, seed);
        EXPECT_EQ(parse_graph6_line(write_graph6(g)), g);
    }
    EXPECT_EQ(parse_graph6_line(write_graph6(path_graph(62))), path_graph(62));
    EXPECT_THROW(write_graph6(path_graph(63)), IsolationError);
}

TEST(Formats, graph6_rejects_bad_input)
{
    EXPECT_TRUE(parse_error_code([] { parse_graph6_line("B"); }));
    EXPECT_TRUE(parse_error_code([] { parse_graph6_line("Bww"); }));
    EXPECT_TRUE(parse_error_code([] { parse_graph6_line("B "); }));
    EXPECT_TRUE(parse_error_code([] { parse_graph6_line("Bx"); })); // padding bit set
}

TEST(Formats, edge_list_round_trip_and_blocks)
{
    const Graph c7 = cycle_graph(7);
    const auto back = parse_edge_list(write_edge_list(c7));
    ASSERT_EQ(back.size(), 1U);
    EXPECT_EQ(back[0], c7);

    const auto two = parse_edge_list("# two graphs\n3 2\n0 1\n1 2\n\n2 0\n");
    ASSERT_EQ(two.size(), 2U);
    EXPECT_EQ(two[0], path_graph(3));
    EXPECT_EQ(two[1], empty_graph(2));
}

TEST(Formats, edge_list_rejects_bad_input)
{
    EXPECT_TRUE(parse_error_code([] { parse_edge_list("3 2\n0 1\n"); }));
    EXPECT_TRUE(parse_error_code([] { parse_edge_list("3 1\n0 x\n"); }));
    EXPECT_TRUE(parse_error_code([] { parse_edge_list("2 1\n0 5\n"); }));
    EXPECT_TRUE(parse_error_code([] { parse_edge_list("2 1\n1 1\n"); }));
    EXPECT_TRUE(parse_error_code([] { parse_edge_list("-3 0\n"); }));
}

TEST(Formats, detection)
{
    EXPECT_EQ(detect_format("# comment\n3 0\n"), GraphFormat::edge_list);
    EXPECT_EQ(detect_format(">>graph6<<Bw\n"), GraphFormat::graph6);
    EXPECT_EQ(detect_format("Bw\nBg\n"), GraphFormat::graph6);
    EXPECT_EQ(parse_graphs(">>graph6<<Bw\nBg\n").size(), 2U);
}

TEST(Formats, reads_fixture_files)
{
    const std::string data = ISOLATION_TEST_DATA;
    const auto fig = read_graph_file(data + "/g4_extremal.txt");
    ASSERT_EQ(fig.size(), 1U);
    EXPECT_EQ(fig[0].order(), 28);
    EXPECT_EQ(read_graph_file(data + "/c7.txt")[0], cycle_graph(7));
    EXPECT_THROW(read_graph_file(data + "/malformed.txt"), IsolationError);
    EXPECT_THROW(read_graph_file(data + "/no_such_file.txt"), IsolationError);
}

TEST(Commands, compute)
{
    auto report = cmd_compute(input_of({cycle_graph(7), path_graph(2), disjoint_union(path_graph(3), path_graph(3))}), 1);
    ASSERT_EQ(report.records.size(), 3U);
    EXPECT_EQ(report.records[0]["iota"], 2);
    EXPECT_EQ(report.records[1]["iota"], 0);
    EXPECT_EQ(report.records[2]["iota"], 2);
    EXPECT_EQ(report.exit_code(), exit_success);
}

TEST(Commands, compute_extremal_fixture)
{
    const auto graphs = read_graph_file(std::string(ISOLATION_TEST_DATA) + "/g4_extremal.txt");
    auto report = cmd_compute(input_of(graphs), 1);
    EXPECT_EQ(report.records[0]["iota"], 7);
}

TEST(Commands, verify)
{
    auto ok = cmd_verify(input_of({cycle_graph(7)}), {0, 4}, 1);
    EXPECT_EQ(ok.exit_code(), exit_success);
    EXPECT_EQ(ok.records[0]["isolating"], true);

    auto bad = cmd_verify(input_of({cycle_graph(3)}), {}, 1);
    EXPECT_EQ(bad.exit_code(), exit_violations);
    EXPECT_EQ(bad.records[0]["residual_max_degree"], 2);
}

TEST(Commands, construct)
{
    auto report = cmd_construct(input_of({path_graph(7), cycle_graph(6)}), {Track::thm16, true, false});
    ASSERT_EQ(report.records.size(), 2U);
    EXPECT_EQ(report.records[0]["status"], "ok");
    EXPECT_EQ(report.records[0]["witness_size"], 1);
    EXPECT_EQ(report.records[0]["verified"], true);
    EXPECT_TRUE(report.records[0].contains("trace"));
    EXPECT_EQ(report.records[1]["status"], "rejected");
    EXPECT_EQ(report.records[1]["cycle"].size(), 6U);
    EXPECT_EQ(report.exit_code(), exit_success);
}

TEST(Commands, extremal)
{
    ExtremalRequest request;
    request.t = 4;
    request.kinds = {SKind::p3, SKind::p3, SKind::c7, SKind::c11};
    request.exact = true;
    auto report = cmd_extremal(request);
    ASSERT_EQ(report.records.size(), 1U);
    EXPECT_EQ(report.records[0]["witness_size"], 7);
    EXPECT_EQ(report.records[0]["verified"], true);
    EXPECT_EQ(report.records[0]["iota"], 7);

    request.t = 3;
    request.kinds = {SKind::c7};
    request.backbone = "star";
    request.exact = false;
    auto star = cmd_extremal(request);
    EXPECT_EQ(star.records[0]["witness_size"], 6);
}

TEST(Commands, scan_small)
{
    auto report = cmd_scan({6, Assertion::thm16, 1});
    EXPECT_EQ(report.violations, 0);
    ASSERT_EQ(report.records.size(), 6U);
    EXPECT_EQ(report.records[3]["connected"], 6);
    auto thm11 = cmd_scan({6, Assertion::thm11, 0});
    EXPECT_EQ(thm11.violations, 0);
    EXPECT_THROW(cmd_scan({9, Assertion::thm16, 1}), IsolationError);
}

TEST(Commands, parsers)
{
    EXPECT_EQ(parse_kind("C11"), SKind::c11);
    EXPECT_EQ(parse_kind("p3"), SKind::p3);
    EXPECT_THROW(parse_kind("C5"), IsolationError);
    EXPECT_EQ(parse_track("thm17"), Track::thm17);
    EXPECT_EQ(parse_assertion("thm15"), Assertion::thm15);
    EXPECT_EQ(parse_vertex_csv("3,1, 2"), (std::vector<Vertex>{3, 1, 2}));
    EXPECT_TRUE(parse_vertex_csv("").empty());
    EXPECT_THROW(parse_vertex_csv("1,-2"), IsolationError);
}

TEST(Search, eligibility)
{
    EXPECT_FALSE(search_eligible(cycle_graph(7), 4, 12));
    EXPECT_FALSE(search_eligible(cycle_graph(6), 4, 12));
    EXPECT_TRUE(search_eligible(cycle_graph(5), 4, 12));
    EXPECT_FALSE(search_eligible(empty_graph(5), 4, 12));
    EXPECT_FALSE(search_eligible(path_graph(13), 4, 12));
    EXPECT_TRUE(search_eligible(initial_search_graph(4, 12), 4, 12));
    EXPECT_EQ(initial_search_graph(4, 12).order(), 4);
    EXPECT_EQ(initial_search_graph(6, 12).order(), 8);
    EXPECT_EQ(initial_search_graph(5, 7).order(), 5);
}

TEST(Search, zero_budget_keeps_initial_graph)
{
    SearchOptions options{4, 12, 0, 1, 250};
    auto state = run_search(options);
    EXPECT_EQ(state.best, initial_search_graph(4, 12));
    EXPECT_EQ(state.steps, 0);
    EXPECT_TRUE((state.best_ratio == Ratio{1, 4}));
}

TEST(Search, deterministic_and_verified)
{
    SearchOptions options{5, 10, 300, 42, 50};
    auto a = run_search(options);
    auto b = run_search(options);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.steps, b.steps);
    EXPECT_EQ(a.accepted, b.accepted);
    EXPECT_TRUE(search_eligible(a.best, 5, 10));
    EXPECT_EQ(Ratio(iota_exact(a.best, 1).size(), a.best.order()), a.best_ratio);
    EXPECT_TRUE(is_k_isolating(a.best, a.best_witness, 1).isolating);
    // history is strictly increasing
    for (std::size_t i = 1; i < a.history.size(); ++i)
        EXPECT_TRUE(a.history[i - 1].ratio < a.history[i].ratio);

    auto report = cmd_search({5, 10, 300, 42, 50, ""});
    EXPECT_EQ(report.to_json().dump(), cmd_search({5, 10, 300, 42, 50, ""}).to_json().dump());
    EXPECT_EQ(report.exit_code(), exit_success);
}

TEST(Search, rejects_bad_ranges)
{
    EXPECT_THROW(run_search({3, 10, 10, 0, 10}), IsolationError);
    EXPECT_THROW(run_search({9, 8, 10, 0, 10}), IsolationError);
}

TEST(Report, ratio)
{
    EXPECT_TRUE((Ratio{2, 8} == Ratio{1, 4}));
    EXPECT_TRUE((Ratio{1, 4} < Ratio{2, 7}));
    EXPECT_EQ(Ratio(6, 8).reduced().str(), "3/4");
}
