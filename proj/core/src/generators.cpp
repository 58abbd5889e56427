#include "isolation/generators.hpp"
#include "isolation/cycles.hpp"
#include "isolation/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace isolation {

auto is_admissible(const Graph & g, AdmissibleClass cls) -> bool
{
    if (cls == AdmissibleClass::c6_free)
        return ! find_cycle_of_length(g, 6);
    return ! find_induced_cycle_of_length(g, 5) && ! find_induced_cycle_of_length(g, 6);
}

namespace {

    auto gadget(SKind kind) -> Graph
    {
        switch (kind) {
        case SKind::p3: return path_graph(3);
        case SKind::c3: return cycle_graph(3);
        case SKind::c7: return cycle_graph(7);
        case SKind::c11: return cycle_graph(11);
        case SKind::none: break;
        }
        throw IsolationError(ErrorCode::bad_spec, "gadget kind must be one of P3, C3, C7, C11");
    }

} // namespace

auto build_extremal(const ExtremalSpec & spec) -> ExtremalInstance
{
    const Graph & f = spec.backbone;
    const int t = f.order();
    if (t < 1)
        throw IsolationError(ErrorCode::bad_spec, "backbone must have at least one vertex");
    if (static_cast<int>(spec.gadget_kinds.size()) != t)
        throw IsolationError(ErrorCode::bad_spec,
            "expected " + std::to_string(t) + " gadget kinds, got " + std::to_string(spec.gadget_kinds.size()));
    if (! spec.join_points.empty() && static_cast<int>(spec.join_points.size()) != t)
        throw IsolationError(ErrorCode::bad_spec, "join point count differs from backbone order");
    if (spec.leaves < 0 || spec.leaves > 3)
        throw IsolationError(ErrorCode::bad_spec, "leaf augmentation must be between 0 and 3");
    if (! is_connected(f))
        throw IsolationError(ErrorCode::inadmissible_backbone, "backbone is disconnected");

    const bool admissible = spec.target ? is_admissible(f, *spec.target)
                                        : is_admissible(f, AdmissibleClass::c6_free)
            || is_admissible(f, AdmissibleClass::induced56_free);
    if (! admissible)
        throw IsolationError(ErrorCode::inadmissible_backbone, "backbone contains a forbidden cycle");

    std::vector<Edge> edges = f.edges();
    ExtremalInstance out;
    out.leaves = spec.leaves;
    std::vector<Vertex> witness;
    int next = t;
    for (Vertex i = 0; i < t; ++i) {
        Graph h = gadget(spec.gadget_kinds[i]);
        const Vertex join = spec.join_points.empty() ? 0 : spec.join_points[i];
        if (join < 0 || join >= h.order())
            throw IsolationError(ErrorCode::bad_spec, "join point outside gadget " + std::to_string(i));

        const int offset = next;
        for (auto [a, b] : h.edges())
            edges.emplace_back(a + offset, b + offset);
        edges.emplace_back(i, join + offset);

        std::vector<Vertex> block{i};
        for (Vertex a = 0; a < h.order(); ++a)
            block.push_back(a + offset);
        out.blocks.emplace_back(std::move(block));

        witness.push_back(i);
        if (h.order() > 3) {
            // distance 4 from v_i is distance 3 from the join vertex
            auto dist = bfs_distance(h, join);
            std::vector<Vertex> far;
            for (Vertex a = 0; a < h.order(); ++a)
                if (dist[a] == 3)
                    far.push_back(a + offset);
            if (h.order() == 7)
                far.resize(1);
            witness.insert(witness.end(), far.begin(), far.end());
        }
        next += h.order();
    }
    for (int leaf = 0; leaf < spec.leaves; ++leaf)
        edges.emplace_back(0, next++);

    out.graph = Graph::from_edge_list(next, edges);
    out.designated_witness = VertexSet(std::move(witness));
    return out;
}

namespace {

    auto random_tree(int n, std::mt19937_64 & rng) -> std::vector<Edge>
    {
        std::vector<Edge> edges;
        if (n <= 1)
            return edges;
        if (n == 2)
            return {{0, 1}};

        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> code(static_cast<std::size_t>(n - 2));
        for (int & c : code)
            c = pick(rng);

        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int c : code)
            ++degree[c];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                leaves.insert(v);
        for (int c : code) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
            if (--degree[c] == 1)
                leaves.insert(c);
        }
        int a = *leaves.begin();
        int b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        return edges;
    }

    auto closes_forbidden(const Graph & g, Vertex u, Vertex w, AdmissibleClass cls) -> bool
    {
        if (cls == AdmissibleClass::c6_free)
            return edge_closes_cycle(g, u, w, 6, false);
        return edge_closes_cycle(g, u, w, 5, true) || edge_closes_cycle(g, u, w, 6, true);
    }

} // namespace

auto random_admissible(int n, std::size_t target_edges, AdmissibleClass cls, std::uint64_t seed) -> Graph
{
    if (n < 1)
        throw IsolationError(ErrorCode::precondition_violation, "random_admissible needs n >= 1");

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges = random_tree(n, rng);
    Graph g = Graph::from_edge_list(n, edges);

    const std::size_t max_edges = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t stall_limit = 50 * target_edges;
    std::size_t failures = 0;
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (g.size() < target_edges && g.size() < max_edges && failures < stall_limit) {
        Vertex u = pick(rng), w = pick(rng);
        if (u == w || g.adjacent(u, w) || closes_forbidden(g, u, w, cls)) {
            ++failures;
            continue;
        }
        edges.emplace_back(std::min(u, w), std::max(u, w));
        g = Graph::from_edge_list(n, edges);
    }
    return g;
}

namespace {

    // Bits are ordered column by column: pair (a, b), a < b, sits at index
    // b(b-1)/2 + a counted from the most significant end, so fixing the
    // vertices at positions 0..b fixes a prefix of the code.
    class Canonicalizer {
    public:
        explicit Canonicalizer(const Graph & g) :
            _g(g), _n(g.order()), _bits(_n * (_n - 1) / 2)
        {
            // One round of signature refinement: degree, then sorted
            // neighbour degrees.
            std::vector<std::pair<int, std::vector<int>>> signature(static_cast<std::size_t>(_n));
            for (Vertex v = 0; v < _n; ++v) {
                signature[v].first = g.degree(v);
                for (Vertex w : g.neighbors(v))
                    signature[v].second.push_back(g.degree(w));
                std::sort(signature[v].second.begin(), signature[v].second.end());
            }
            std::vector<Vertex> by_signature(static_cast<std::size_t>(_n));
            for (Vertex v = 0; v < _n; ++v)
                by_signature[v] = v;
            std::stable_sort(by_signature.begin(), by_signature.end(),
                [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });

            _cell_of_position.resize(static_cast<std::size_t>(_n));
            _cell_of_vertex.resize(static_cast<std::size_t>(_n));
            int cell = -1;
            for (int pos = 0; pos < _n; ++pos) {
                Vertex v = by_signature[pos];
                if (pos == 0 || signature[v] != signature[by_signature[pos - 1]])
                    ++cell;
                _cell_of_position[pos] = cell;
                _cell_of_vertex[v] = cell;
            }
        }

        auto run() -> std::uint64_t
        {
            _at.assign(static_cast<std::size_t>(_n), -1);
            _used.assign(static_cast<std::size_t>(_n), false);
            _best = ~std::uint64_t{0};
            place(0, 0);
            return _n < 2 ? 0 : _best;
        }

    private:
        void place(int pos, std::uint64_t code)
        {
            if (pos == _n) {
                _best = std::min(_best, code);
                return;
            }
            const int prefix_before = pos * (pos - 1) / 2;
            const int prefix_after = prefix_before + pos;
            for (Vertex v = 0; v < _n; ++v) {
                if (_used[v] || _cell_of_vertex[v] != _cell_of_position[pos])
                    continue;
                std::uint64_t next = code;
                for (int a = 0; a < pos; ++a)
                    if (_g.adjacent(_at[a], v))
                        next |= std::uint64_t{1} << (_bits - 1 - (prefix_before + a));
                if (prefix_after > 0 && (next >> (_bits - prefix_after)) > (_best >> (_bits - prefix_after)))
                    continue;
                _at[pos] = v;
                _used[v] = true;
                place(pos + 1, next);
                _used[v] = false;
            }
        }

        const Graph & _g;
        int _n;
        int _bits;
        std::vector<int> _cell_of_position;
        std::vector<int> _cell_of_vertex;
        std::vector<Vertex> _at;
        std::vector<bool> _used;
        std::uint64_t _best = 0;
    };

    auto decode(int n, std::uint64_t code) -> Graph
    {
        const int bits = n * (n - 1) / 2;
        std::vector<Edge> edges;
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a)
                if ((code >> (bits - 1 - (b * (b - 1) / 2 + a))) & 1U)
                    edges.emplace_back(a, b);
        return Graph::from_edge_list(n, edges);
    }

    auto enumerate(int n, bool connected_only) -> std::vector<Graph>
    {
        if (n < 0 || n > max_enumeration_graph_order)
            throw IsolationError(ErrorCode::order_too_large,
                "enumeration supports orders 0.." + std::to_string(max_enumeration_graph_order));
        if (n == 0)
            return connected_only ? std::vector<Graph>{} : std::vector<Graph>{Graph{}};
        if (n == 1)
            return {empty_graph(1)};

        // A connected graph always has a vertex whose removal keeps it
        // connected, so extending connected graphs of order n-1 suffices.
        std::set<std::uint64_t> codes;
        for (const Graph & base : enumerate(n - 1, connected_only)) {
            const auto base_edges = base.edges();
            for (unsigned subset = connected_only ? 1U : 0U; subset < (1U << (n - 1)); ++subset) {
                std::vector<Edge> edges = base_edges;
                for (int v = 0; v < n - 1; ++v)
                    if (subset & (1U << v))
                        edges.emplace_back(v, n - 1);
                codes.insert(canonical_code(Graph::from_edge_list(n, edges)));
            }
        }
        std::vector<Graph> out;
        out.reserve(codes.size());
        for (std::uint64_t code : codes)
            out.push_back(decode(n, code));
        return out;
    }

} // namespace

auto canonical_code(const Graph & g) -> std::uint64_t
{
    if (g.order() > max_canonical_order)
        throw IsolationError(ErrorCode::order_too_large,
            "canonical form supports orders up to " + std::to_string(max_canonical_order));
    return Canonicalizer(g).run();
}

auto canonical_form(const Graph & g) -> Graph
{
    return decode(g.order(), canonical_code(g));
}

auto enumerate_graphs(int n) -> std::vector<Graph>
{
    return enumerate(n, false);
}

auto enumerate_connected(int n) -> std::vector<Graph>
{
    return enumerate(n, true);
}

} // namespace isolation
