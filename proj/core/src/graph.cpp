#include "isolation/graph.hpp"
#include "isolation/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace isolation {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
    case ErrorCode::endpoint_out_of_range: return "EndpointOutOfRange";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::empty_graph: return "EmptyGraph";
    case ErrorCode::precondition_violation: return "PreconditionViolation";
    case ErrorCode::contains_induced_forbidden_cycle: return "ContainsInducedForbiddenCycle";
    case ErrorCode::internal_case_exhaustion: return "InternalCaseExhaustion";
    case ErrorCode::invalid_kind: return "InvalidKind";
    case ErrorCode::bad_spec: return "BadSpec";
    case ErrorCode::inadmissible_backbone: return "InadmissibleBackbone";
    case ErrorCode::order_too_large: return "OrderTooLarge";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

IsolationError::IsolationError(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    _code(code)
{
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) :
    VertexSet(std::vector<Vertex>(members))
{
}

VertexSet::VertexSet(std::vector<Vertex> members) :
    _members(std::move(members))
{
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
}

auto VertexSet::contains(Vertex v) const -> bool
{
    return std::binary_search(_members.begin(), _members.end(), v);
}

void VertexSet::insert(Vertex v)
{
    auto it = std::lower_bound(_members.begin(), _members.end(), v);
    if (it == _members.end() || *it != v)
        _members.insert(it, v);
}

void VertexSet::insert(const VertexSet & other)
{
    *this = united(other);
}

auto VertexSet::united(const VertexSet & other) const -> VertexSet
{
    VertexSet result;
    result._members.reserve(_members.size() + other._members.size());
    std::set_union(_members.begin(), _members.end(), other._members.begin(), other._members.end(),
        std::back_inserter(result._members));
    return result;
}

auto VertexSet::within(int order) const -> bool
{
    return _members.empty() || (_members.front() >= 0 && _members.back() < order);
}

auto Graph::from_edge_list(int n, std::span<const Edge> pairs) -> Graph
{
    if (n < 0)
        throw IsolationError(ErrorCode::endpoint_out_of_range, "negative vertex count");

    Graph g;
    g._adjacency.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw IsolationError(ErrorCode::endpoint_out_of_range,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v)
            throw IsolationError(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(u));
        g._adjacency[u].push_back(v);
        g._adjacency[v].push_back(u);
    }

    for (auto & list : g._adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g._edge_count += list.size();
    }
    g._edge_count /= 2;
    return g;
}

auto Graph::from_edge_list(int n, std::initializer_list<Edge> pairs) -> Graph
{
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    const auto & list = _adjacency[u];
    return std::binary_search(list.begin(), list.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_edge_count);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : _adjacency[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Subgraph::lift(const VertexSet & local) const -> VertexSet
{
    std::vector<Vertex> lifted;
    lifted.reserve(local.size());
    for (Vertex v : local)
        lifted.push_back(to_parent[v]);
    return VertexSet(std::move(lifted));
}

auto path_graph(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

auto cycle_graph(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

auto complete_graph(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

auto star_graph(int leaves) -> Graph
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, e);
}

auto empty_graph(int n) -> Graph
{
    return Graph::from_edge_list(n, std::span<const Edge>{});
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto e = a.edges();
    for (auto [u, v] : b.edges())
        e.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edge_list(a.order() + b.order(), e);
}

auto closed_neighborhood(const Graph & g, const VertexSet & d) -> VertexSet
{
    if (! d.within(g.order()))
        throw IsolationError(ErrorCode::vertex_out_of_range, "vertex set does not belong to the graph");
    std::vector<Vertex> out(d.begin(), d.end());
    for (Vertex v : d)
        out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    return VertexSet(std::move(out));
}

auto open_neighborhood(const Graph & g, const VertexSet & d) -> VertexSet
{
    std::vector<Vertex> out;
    for (Vertex v : d)
        for (Vertex w : g.neighbors(v))
            if (! d.contains(w))
                out.push_back(w);
    return VertexSet(std::move(out));
}

auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Subgraph
{
    std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
    Subgraph result;
    for (Vertex v : keep) {
        local[v] = static_cast<Vertex>(result.to_parent.size());
        result.to_parent.push_back(v);
    }

    std::vector<Edge> e;
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v))
            if (v < w && local[w] >= 0)
                e.emplace_back(local[v], local[w]);
    result.graph = Graph::from_edge_list(static_cast<int>(result.to_parent.size()), e);
    return result;
}

auto delete_vertices(const Graph & g, const VertexSet & removed) -> Subgraph
{
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (! removed.contains(v))
            keep.push_back(v);
    return induced_subgraph(g, VertexSet(std::move(keep)));
}

auto delete_closed_neighborhood(const Graph & g, const VertexSet & d) -> Subgraph
{
    return delete_vertices(g, closed_neighborhood(g, d));
}

auto components(const Graph & g) -> std::vector<Subgraph>
{
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    std::vector<Subgraph> result;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] >= 0)
            continue;
        std::vector<Vertex> members{s};
        label[s] = static_cast<int>(result.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w : g.neighbors(members[i]))
                if (label[w] < 0) {
                    label[w] = label[s];
                    members.push_back(w);
                }
        result.push_back(induced_subgraph(g, VertexSet(std::move(members))));
    }
    return result;
}

auto is_connected(const Graph & g) -> bool
{
    if (g.order() == 0)
        return true;
    auto dist = bfs_distance(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == infinite_distance; });
}

auto max_degree(const Graph & g) -> MaxDegree
{
    if (g.order() == 0)
        throw IsolationError(ErrorCode::empty_graph, "max_degree of the null graph");
    MaxDegree best{g.degree(0), 0};
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > best.degree)
            best = {g.degree(v), v};
    return best;
}

auto classify_s_graph(const Graph & g) -> SKind
{
    const int n = g.order();
    if (n != 3 && n != 7 && n != 11)
        return SKind::none;
    if (! is_connected(g))
        return SKind::none;

    int twos = 0, ones = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 2)
            ++twos;
        else if (g.degree(v) == 1)
            ++ones;
        else
            return SKind::none;
    }

    if (twos == n)
        return n == 3 ? SKind::c3 : n == 7 ? SKind::c7 : SKind::c11;
    if (n == 3 && ones == 2 && twos == 1)
        return SKind::p3;
    return SKind::none;
}

auto s_kind_order(SKind kind) -> int
{
    switch (kind) {
    case SKind::p3:
    case SKind::c3: return 3;
    case SKind::c7: return 7;
    case SKind::c11: return 11;
    case SKind::none: break;
    }
    return 0;
}

auto to_string(SKind kind) -> const char *
{
    switch (kind) {
    case SKind::p3: return "P3";
    case SKind::c3: return "C3";
    case SKind::c7: return "C7";
    case SKind::c11: return "C11";
    case SKind::none: break;
    }
    return "None";
}

auto bfs_distance(const Graph & g, Vertex source) -> std::vector<int>
{
    if (source < 0 || source >= g.order())
        throw IsolationError(ErrorCode::vertex_out_of_range, "bfs source " + std::to_string(source));

    std::vector<int> dist(static_cast<std::size_t>(g.order()), infinite_distance);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (! queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (dist[w] == infinite_distance) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

} // namespace isolation
