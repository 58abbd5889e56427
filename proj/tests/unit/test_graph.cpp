#include "isolation/error.hpp"
#include "isolation/graph.hpp"

#include <gtest/gtest.h>

using namespace isolation;

namespace {

template <typename F>
auto error_code_of(F && f) -> ErrorCode
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

auto sorted_members(const Subgraph & s) -> std::vector<Vertex>
{
    std::vector<Vertex> out = s.to_parent;
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Graph, builds_small_named_graphs)
{
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(p3.order(), 3);
    EXPECT_EQ(p3.size(), 2U);
    EXPECT_EQ(classify_s_graph(p3), SKind::p3);

    Graph c3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    EXPECT_EQ(classify_s_graph(c3), SKind::c3);
    EXPECT_TRUE(c3.adjacent(2, 0));
    EXPECT_TRUE(c3.adjacent(0, 2));
}

TEST(Graph, duplicate_edges_collapse)
{
    Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.size(), 1U);
    EXPECT_EQ(g.degree(0), 1);
}

TEST(Graph, rejects_bad_edges)
{
    EXPECT_EQ(error_code_of([] { Graph::from_edge_list(2, {{0, 2}}); }), ErrorCode::endpoint_out_of_range);
    EXPECT_EQ(error_code_of([] { Graph::from_edge_list(2, {{-1, 0}}); }), ErrorCode::endpoint_out_of_range);
    EXPECT_EQ(error_code_of([] { Graph::from_edge_list(-1, {}); }), ErrorCode::endpoint_out_of_range);
    EXPECT_EQ(error_code_of([] { Graph::from_edge_list(3, {{1, 1}}); }), ErrorCode::self_loop);
}

TEST(Graph, closed_neighborhood)
{
    EXPECT_EQ(closed_neighborhood(path_graph(3), {1}), (VertexSet{0, 1, 2}));
    EXPECT_EQ(closed_neighborhood(cycle_graph(7), {0}), (VertexSet{0, 1, 6}));
    EXPECT_TRUE(closed_neighborhood(cycle_graph(7), {}).empty());
    EXPECT_EQ(open_neighborhood(path_graph(4), {1, 2}), (VertexSet{0, 3}));
    EXPECT_EQ(error_code_of([] { closed_neighborhood(path_graph(3), {3}); }), ErrorCode::vertex_out_of_range);
}

TEST(Graph, delete_closed_neighborhood_of_cycles)
{
    Subgraph c7 = delete_closed_neighborhood(cycle_graph(7), {0});
    EXPECT_EQ(sorted_members(c7), (std::vector<Vertex>{2, 3, 4, 5}));
    EXPECT_EQ(classify_s_graph(c7.graph), SKind::none);
    EXPECT_EQ(c7.graph.size(), 3U);
    EXPECT_EQ(max_degree(c7.graph).degree, 2);

    EXPECT_EQ(delete_closed_neighborhood(path_graph(3), {1}).graph.order(), 0);

    Subgraph c11 = delete_closed_neighborhood(cycle_graph(11), {0, 4});
    // vertex 10 is adjacent to 0, so an isolated vertex and a P4 remain
    EXPECT_EQ(sorted_members(c11), (std::vector<Vertex>{2, 6, 7, 8, 9}));
    auto parts = components(c11.graph);
    ASSERT_EQ(parts.size(), 2U);
    std::vector<int> orders{parts[0].graph.order(), parts[1].graph.order()};
    std::sort(orders.begin(), orders.end());
    EXPECT_EQ(orders, (std::vector<int>{1, 4}));
}

TEST(Graph, lift_maps_back_to_parent)
{
    Subgraph s = delete_vertices(path_graph(5), {0, 2});
    EXPECT_EQ(s.lift({0, 2}), (VertexSet{1, 4}));
}

TEST(Graph, components)
{
    Graph two = disjoint_union(path_graph(3), cycle_graph(3));
    auto parts = components(two);
    ASSERT_EQ(parts.size(), 2U);
    EXPECT_EQ(parts[0].graph.order(), 3);
    EXPECT_EQ(parts[1].graph.order(), 3);
    EXPECT_EQ(components(cycle_graph(7)).size(), 1U);
    EXPECT_EQ(components(empty_graph(4)).size(), 4U);
    EXPECT_FALSE(is_connected(two));
    EXPECT_TRUE(is_connected(cycle_graph(7)));
}

TEST(Graph, bfs_distances)
{
    EXPECT_EQ(bfs_distance(cycle_graph(7), 0), (std::vector<int>{0, 1, 2, 3, 3, 2, 1}));
    EXPECT_EQ(bfs_distance(path_graph(3), 0), (std::vector<int>{0, 1, 2}));
    auto d = bfs_distance(disjoint_union(path_graph(2), path_graph(2)), 0);
    EXPECT_EQ(d[1], 1);
    EXPECT_EQ(d[2], infinite_distance);
    EXPECT_EQ(d[3], infinite_distance);
    EXPECT_EQ(error_code_of([] { bfs_distance(path_graph(2), 5); }), ErrorCode::vertex_out_of_range);
}

TEST(Graph, max_degree)
{
    EXPECT_EQ(max_degree(star_graph(5)).degree, 5);
    EXPECT_EQ(max_degree(star_graph(5)).vertex, 0);
    EXPECT_EQ(max_degree(empty_graph(3)).degree, 0);
    EXPECT_EQ(error_code_of([] { max_degree(Graph{}); }), ErrorCode::empty_graph);
}

TEST(Graph, classify_s_graphs)
{
    EXPECT_EQ(classify_s_graph(path_graph(3)), SKind::p3);
    EXPECT_EQ(classify_s_graph(cycle_graph(3)), SKind::c3);
    EXPECT_EQ(classify_s_graph(cycle_graph(7)), SKind::c7);
    EXPECT_EQ(classify_s_graph(cycle_graph(11)), SKind::c11);
    for (int n : {4, 5, 6, 8, 9, 10, 12})
        EXPECT_EQ(classify_s_graph(cycle_graph(n)), SKind::none) << n;
    EXPECT_EQ(classify_s_graph(path_graph(4)), SKind::none);
    EXPECT_EQ(classify_s_graph(disjoint_union(path_graph(3), path_graph(3))), SKind::none);
    // relabelled P3
    EXPECT_EQ(classify_s_graph(Graph::from_edge_list(3, {{0, 2}, {2, 1}})), SKind::p3);
    EXPECT_EQ(s_kind_order(SKind::c11), 11);
    EXPECT_EQ(s_kind_order(SKind::p3), 3);
}

TEST(Graph, vertex_set_is_sorted_and_unique)
{
    VertexSet s{4, 1, 4, 2};
    EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 2, 4}));
    s.insert(3);
    s.insert(1);
    EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 2, 3, 4}));
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(0));
    EXPECT_TRUE(s.within(5));
    EXPECT_FALSE(s.within(4));
    EXPECT_EQ(VertexSet({1}).united({0, 1}), (VertexSet{0, 1}));
}
