#include "isolation/constructive.hpp"
#include "isolation/cycles.hpp"
#include "isolation/exact.hpp"
#include "isolation/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace isolation;

namespace {

auto error_code_of(const std::function<void()> & f) -> ErrorCode
{
    try {
        f();
    }
    catch (const IsolationError & e) {
        return e.code();
    }
    ADD_FAILURE() << "no IsolationError thrown";
    return ErrorCode::parse_error;
}

auto class_of(Track t) -> AdmissibleClass
{
    return t == Track::thm16 ? AdmissibleClass::c6_free : AdmissibleClass::induced56_free;
}

// Checks the full contract of one construction against the oracles.
void expect_sound(const Graph & g, Track t)
{
    SCOPED_TRACE(to_string(t));
    const auto result = construct(g, t);
    EXPECT_TRUE(oracle::is_k_isolating(g, result.witness.members(), 1));
    EXPECT_LE(4 * static_cast<int>(result.witness.size()), g.order());
    EXPECT_FALSE(result.trace.used_fallback);
    EXPECT_EQ(result.trace.fragments_union(), result.witness);
}

// A pivot of degree d with S-gadgets wired to its neighbours, the shape the
// inductive cases are about.
auto local_configuration(std::mt19937_64 & rng, bool induced_track) -> Graph
{
    const int d = 3 + static_cast<int>(rng() % (induced_track ? 3 : 2));
    std::set<Edge> edges;
    auto add = [&](int a, int b) {
        if (a != b)
            edges.insert({std::min(a, b), std::max(a, b)});
    };
    const int lengths[4] = {3, 3, 7, 11};
    int n = d + 1;
    for (int i = 1; i <= d; ++i)
        add(0, i);
    if (d == 3 && rng() % 2) {
        // the pivot itself sits on an S-cycle or P3 through two neighbours
        const int len = lengths[rng() % 4];
        std::vector<int> walk{1, 0, 2};
        if (len != 3 || rng() % 2) {
            for (int i = 0; i < len - 3; ++i)
                walk.push_back(n++);
            walk.push_back(1);
        }
        for (std::size_t i = 0; i + 1 < walk.size(); ++i)
            add(walk[i], walk[i + 1]);
    }
    const int inner = n;
    const int gadgets = 1 + static_cast<int>(rng() % (d == 3 ? 2 : 4));
    for (int k = 0; k < gadgets; ++k) {
        const int len = lengths[rng() % 4];
        const bool path = len == 3 && rng() % 2;
        const int off = n;
        for (int i = 0; i + 1 < len; ++i)
            add(off + i, off + i + 1);
        if (! path)
            add(off, off + len - 1);
        n += len;
        const int links = 2 + static_cast<int>(rng() % 4);
        for (int l = 0; l < links; ++l) {
            const int a = 1 + static_cast<int>(rng() % d);
            int c = off + static_cast<int>(rng() % 2 ? rng() % std::min(len, 3) : rng() % len);
            if (rng() % 2 == 0 && len > 3)
                c = off + len - 1 - static_cast<int>(rng() % 3);
            add(a, c);
        }
    }
    const int extras = static_cast<int>(rng() % 4);
    for (int e = 0; e < extras; ++e)
        add(1 + static_cast<int>(rng() % (inner - 1)), 1 + static_cast<int>(rng() % (inner - 1)));
    if (rng() % 3 == 0) {
        const int a = 1 + static_cast<int>(rng() % d);
        add(a, n);
        add(n, n + 1);
        add(n + 1, n + 2);
        add(n + 1, n + 3);
        n += 4;
    }
    return Graph::from_edge_list(n, std::vector<Edge>(edges.begin(), edges.end()));
}

} // namespace

TEST(Constructive, path_and_cycle_patterns)
{
    EXPECT_EQ(construct_path_or_cycle(cycle_graph(5)).size(), 1U);
    EXPECT_EQ(construct_path_or_cycle(path_graph(7)), (VertexSet{3}));
    EXPECT_TRUE(construct_path_or_cycle(path_graph(2)).empty());
    for (int n = 4; n <= 40; ++n) {
        const Graph p = path_graph(n);
        const auto dp = construct_path_or_cycle(p);
        EXPECT_TRUE(is_k_isolating(p, dp, 1).isolating) << "P" << n;
        EXPECT_LE(static_cast<int>(dp.size()), n / 4) << "P" << n;
        if (n == 6 || n == 7 || n == 11)
            continue;
        const Graph c = cycle_graph(n);
        const auto dc = construct_path_or_cycle(c);
        EXPECT_TRUE(is_k_isolating(c, dc, 1).isolating) << "C" << n;
        EXPECT_LE(static_cast<int>(dc.size()), n / 4) << "C" << n;
        if (n <= 18) {
            EXPECT_EQ(static_cast<int>(dp.size()), oracle::iota(p, 1)) << "P" << n;
            EXPECT_EQ(static_cast<int>(dc.size()), oracle::iota(c, 1)) << "C" << n;
        }
    }
}

TEST(Constructive, path_and_cycle_errors)
{
    EXPECT_THROW(construct_path_or_cycle(cycle_graph(7)), IsolationError);
    EXPECT_THROW(construct_path_or_cycle(path_graph(3)), IsolationError);
    EXPECT_THROW(construct_path_or_cycle(star_graph(3)), IsolationError);
    EXPECT_THROW(construct_path_or_cycle(empty_graph(2)), IsolationError);
}

TEST(Constructive, s_graph_witness)
{
    EXPECT_EQ(s_graph_witness(SKind::c7, 0), (VertexSet{3}));
    EXPECT_EQ(s_graph_witness(SKind::c11, 0), (VertexSet{3, 8}));
    EXPECT_TRUE(s_graph_witness(SKind::p3, 0).empty());
    EXPECT_TRUE(s_graph_witness(SKind::c3, 1).empty());
    EXPECT_EQ(error_code_of([] { s_graph_witness(SKind::none, 0); }), ErrorCode::invalid_kind);
    EXPECT_EQ(error_code_of([] { s_graph_witness(SKind::c7, 7); }), ErrorCode::vertex_out_of_range);
    EXPECT_EQ(error_code_of([] { s_graph_witness(path_graph(4), 0); }), ErrorCode::invalid_kind);
}

// Attaching x to y and adding x to the set isolates the gadget: the defining
// property of the per-gadget witness.
TEST(Constructive, s_graph_witness_isolates_pendant_gadget)
{
    for (SKind kind : {SKind::p3, SKind::c3, SKind::c7, SKind::c11}) {
        const int len = s_kind_order(kind);
        const Graph h = kind == SKind::p3 ? path_graph(3) : cycle_graph(len);
        for (Vertex y = 0; y < len; ++y) {
            std::vector<Edge> edges = h.edges();
            edges.emplace_back(y, len);
            const Graph g = Graph::from_edge_list(len + 1, edges);
            VertexSet d = s_graph_witness(h, y);
            d.insert(len);
            EXPECT_TRUE(is_k_isolating(g, d, 1).isolating) << to_string(kind) << " y=" << y;
            EXPECT_EQ(4 * static_cast<int>(d.size()), len + 1);
        }
    }
}

TEST(Constructive, partition_of_spider)
{
    // star K_{1,3} whose arms are P4s from the centre
    std::vector<Edge> edges;
    int next = 1;
    for (int arm = 0; arm < 3; ++arm) {
        edges.emplace_back(0, next);
        edges.emplace_back(next, next + 1);
        edges.emplace_back(next + 1, next + 2);
        edges.emplace_back(next + 2, next + 3);
        next += 4;
    }
    const Graph g = Graph::from_edge_list(next, edges);
    const auto p = partition_pivot(g);
    EXPECT_EQ(p.pivot, 0);
    EXPECT_EQ(p.degree, 3);
    ASSERT_EQ(p.components.size(), 3U);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(p.kinds[i], SKind::p3);
        EXPECT_EQ(p.attachments[i].size(), 1U);
    }
    EXPECT_EQ(p.k3, 3);
    EXPECT_EQ(p.h_b.size(), 3U);
    EXPECT_TRUE(p.h_g.empty());
    EXPECT_EQ(p.per_attachment.size(), 3U);
    for (const auto & [x, groups] : p.per_attachment)
        EXPECT_EQ(groups.h_b.size(), 1U) << x;
}

TEST(Constructive, partition_of_extremal_instance)
{
    auto inst = build_extremal({complete_graph(1), {SKind::c7}, {0}, 0, std::nullopt});
    const auto p = partition_pivot(inst.graph);
    EXPECT_GE(p.degree, 3);
    VertexSet covered = closed_neighborhood(inst.graph, {p.pivot});
    for (const auto & comp : p.components)
        covered.insert(comp);
    EXPECT_EQ(static_cast<int>(covered.size()), inst.graph.order());
}

TEST(Constructive, partition_errors)
{
    EXPECT_EQ(error_code_of([] { partition_pivot(cycle_graph(7)); }), ErrorCode::precondition_violation);
    EXPECT_EQ(error_code_of([] { partition_pivot(star_graph(4)); }), ErrorCode::precondition_violation);
    EXPECT_EQ(error_code_of([] { partition_at(path_graph(4), 9); }), ErrorCode::vertex_out_of_range);
}

TEST(Constructive, small_examples)
{
    auto c5 = construct(cycle_graph(5), Track::thm16);
    EXPECT_EQ(c5.witness.size(), 1U);
    EXPECT_TRUE(is_k_isolating(cycle_graph(5), c5.witness, 1).isolating);
    ASSERT_FALSE(c5.trace.steps.empty());

    auto p7 = construct(path_graph(7), Track::thm17);
    EXPECT_EQ(p7.witness.size(), 1U);

    Graph chorded_c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    auto chorded = construct(chorded_c5, Track::thm17);
    EXPECT_EQ(chorded.witness.size(), 1U);
    EXPECT_TRUE(is_k_isolating(chorded_c5, chorded.witness, 1).isolating);

    EXPECT_TRUE(construct(complete_graph(1), Track::thm16).witness.empty());
    EXPECT_TRUE(construct(path_graph(2), Track::thm16).witness.empty());
}

TEST(Constructive, extremal_instances_are_tight)
{
    auto fig = build_extremal({path_graph(4), {SKind::p3, SKind::p3, SKind::c7, SKind::c11}, {}, 0, std::nullopt});
    for (Track t : {Track::thm16, Track::thm17}) {
        auto r = construct(fig.graph, t);
        EXPECT_EQ(r.witness.size(), 7U);
        EXPECT_TRUE(is_k_isolating(fig.graph, r.witness, 1).isolating);
    }
}

TEST(Constructive, precondition_errors)
{
    EXPECT_EQ(error_code_of([] { construct(cycle_graph(3), Track::thm16); }), ErrorCode::precondition_violation);
    EXPECT_EQ(error_code_of([] { construct(cycle_graph(11), Track::thm17); }), ErrorCode::precondition_violation);
    EXPECT_EQ(error_code_of([] { construct(cycle_graph(6), Track::thm16); }), ErrorCode::precondition_violation);
    EXPECT_EQ(error_code_of([] { construct(disjoint_union(path_graph(2), path_graph(2)), Track::thm16); }),
        ErrorCode::precondition_violation);
    EXPECT_EQ(error_code_of([] { construct(cycle_graph(5), Track::thm17); }),
        ErrorCode::contains_induced_forbidden_cycle);
    EXPECT_EQ(error_code_of([] { construct(cycle_graph(6), Track::thm17); }),
        ErrorCode::contains_induced_forbidden_cycle);
}

TEST(Constructive, track_entry_points_agree_with_dispatch)
{
    Graph g = random_admissible(30, 40, AdmissibleClass::induced56_free, 3);
    EXPECT_EQ(construct_theorem17(g).witness, construct(g, Track::thm17).witness);
    Graph h = random_admissible(30, 40, AdmissibleClass::c6_free, 3);
    EXPECT_EQ(construct_theorem16(h).witness, construct(h, Track::thm16).witness);
}

// Every admissible connected graph up to order 8.
TEST(Constructive, exhaustive_small_orders)
{
    for (Track t : {Track::thm16, Track::thm17}) {
        int checked = 0;
        for (int n = 1; n <= 8; ++n)
            for (const Graph & g : enumerate_connected(n)) {
                if (classify_s_graph(g) != SKind::none || ! is_admissible(g, class_of(t)))
                    continue;
                ++checked;
                const auto r = construct(g, t);
                ASSERT_TRUE(is_k_isolating(g, r.witness, 1).isolating);
                ASSERT_LE(4 * static_cast<int>(r.witness.size()), n);
                ASSERT_GE(static_cast<int>(r.witness.size()), iota_exact(g, 1).size());
            }
        EXPECT_GT(checked, 1000);
    }
}

TEST(Constructive, local_configurations)
{
    std::mt19937_64 rng(20240601);
    int checked = 0;
    for (int it = 0; it < 6000; ++it) {
        const bool induced = rng() % 2;
        const Track t = induced ? Track::thm17 : Track::thm16;
        const Graph g = local_configuration(rng, induced);
        if (! is_connected(g) || classify_s_graph(g) != SKind::none || ! is_admissible(g, class_of(t)))
            continue;
        ++checked;
        expect_sound(g, t);
    }
    EXPECT_GT(checked, 500);
}

TEST(Constructive, random_admissible_instances)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        for (Track t : {Track::thm16, Track::thm17}) {
            const int n = 10 + static_cast<int>(seed % 40);
            const Graph g = random_admissible(n, n + seed % 15, class_of(t), seed);
            if (classify_s_graph(g) == SKind::none)
                expect_sound(g, t);
        }
}

TEST(Constructive, fallback_is_recorded_only_when_used)
{
    ConstructOptions options;
    options.fallback_to_exact = true;
    auto r = construct(random_admissible(20, 26, AdmissibleClass::c6_free, 5), Track::thm16, options);
    EXPECT_FALSE(r.trace.used_fallback);
}
