#include "isolation/exact.hpp"
#include "isolation/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace isolation {

namespace {

    using Mask = std::uint64_t;

    auto bit(int v) -> Mask { return Mask{1} << v; }

    auto lowest(Mask m) -> int { return std::countr_zero(m); }

    struct MaskGraph {
        int n = 0;
        std::vector<Mask> adj;
        std::vector<Mask> closed;

        explicit MaskGraph(const Graph & g) :
            n(g.order()), adj(static_cast<std::size_t>(g.order()), 0), closed(static_cast<std::size_t>(g.order()), 0)
        {
            for (Vertex v = 0; v < n; ++v) {
                for (Vertex w : g.neighbors(v))
                    adj[v] |= bit(w);
                closed[v] = adj[v] | bit(v);
            }
        }

        [[nodiscard]] auto all() const -> Mask { return n == 64 ? ~Mask{0} : bit(n) - 1; }

        [[nodiscard]] auto violators(Mask alive, int k) const -> Mask
        {
            Mask out = 0;
            for (Mask rest = alive; rest; rest &= rest - 1) {
                int u = lowest(rest);
                if (std::popcount(adj[u] & alive) > k)
                    out |= bit(u);
            }
            return out;
        }

        // Vertices whose choice would destroy the star formed by u and its
        // first k+1 surviving neighbours.
        [[nodiscard]] auto star_hitters(int u, Mask alive, int k) const -> Mask
        {
            Mask hit = closed[u];
            Mask nb = adj[u] & alive;
            for (int taken = 0; taken <= k && nb; ++taken, nb &= nb - 1)
                hit |= closed[lowest(nb)];
            return hit;
        }
    };

    class BranchAndBound {
    public:
        BranchAndBound(const MaskGraph & g, int k) : _g(g), _k(k) {}

        auto solve(Mask greedy_solution) -> Mask
        {
            const int upper = std::popcount(greedy_solution);
            for (int budget = lower_bound(_g.all(), 0); budget < upper; ++budget) {
                _chosen = 0;
                if (search(_g.all(), 0, budget))
                    return _chosen;
            }
            return greedy_solution;
        }

    private:
        // Violators whose hitter sets are pairwise disjoint each need their own
        // chosen vertex.
        auto lower_bound(Mask alive, Mask forbidden) const -> int
        {
            int bound = 0;
            Mask used = 0;
            for (Mask rest = _g.violators(alive, _k); rest; rest &= rest - 1) {
                Mask hit = _g.star_hitters(lowest(rest), alive, _k) & ~forbidden;
                if ((hit & used) == 0) {
                    ++bound;
                    used |= hit;
                }
            }
            return bound;
        }

        auto search(Mask alive, Mask forbidden, int budget) -> bool
        {
            Mask bad = _g.violators(alive, _k);
            if (! bad)
                return true;
            if (budget == 0 || lower_bound(alive, forbidden) > budget)
                return false;

            Mask branch = 0;
            int best = 65;
            for (Mask rest = bad; rest; rest &= rest - 1) {
                Mask hit = _g.star_hitters(lowest(rest), alive, _k) & ~forbidden;
                int size = std::popcount(hit);
                if (size < best) {
                    best = size;
                    branch = hit;
                }
            }
            if (! branch)
                return false;

            std::array<int, 64> order{};
            int count = 0;
            for (Mask rest = branch; rest; rest &= rest - 1)
                order[count++] = lowest(rest);
            std::stable_sort(order.begin(), order.begin() + count, [&](int a, int b) {
                return std::popcount(_g.closed[a] & alive) > std::popcount(_g.closed[b] & alive);
            });

            Mask excluded = forbidden;
            for (int i = 0; i < count; ++i) {
                int c = order[i];
                _chosen |= bit(c);
                if (search(alive & ~_g.closed[c], excluded, budget - 1))
                    return true;
                _chosen &= ~bit(c);
                excluded |= bit(c);
            }
            return false;
        }

        const MaskGraph & _g;
        int _k;
        Mask _chosen = 0;
    };

    auto greedy_mask(const MaskGraph & g, int k) -> Mask
    {
        Mask alive = g.all(), chosen = 0;
        for (Mask bad = g.violators(alive, k); bad; bad = g.violators(alive, k)) {
            int best_vertex = -1, best_cover = -1;
            for (int c = 0; c < g.n; ++c) {
                int cover = std::popcount(g.closed[c] & bad);
                if (cover > best_cover) {
                    best_cover = cover;
                    best_vertex = c;
                }
            }
            chosen |= bit(best_vertex);
            alive &= ~g.closed[best_vertex];
        }
        return chosen;
    }

    auto subset_enumeration(const MaskGraph & g, int k) -> Mask
    {
        const int n = g.n;
        for (int size = 0; size <= n; ++size) {
            // lexicographic combinations of `size` vertices
            std::vector<int> idx(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i)
                idx[i] = i;
            while (true) {
                Mask chosen = 0, covered = 0;
                for (int v : idx) {
                    chosen |= bit(v);
                    covered |= g.closed[v];
                }
                if (! g.violators(g.all() & ~covered, k))
                    return chosen;

                int i = size - 1;
                while (i >= 0 && idx[i] == n - size + i)
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (int j = i + 1; j < size; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
        return g.all();
    }

    auto to_set(const Subgraph & part, Mask m) -> VertexSet
    {
        std::vector<Vertex> out;
        for (; m; m &= m - 1)
            out.push_back(part.to_parent[lowest(m)]);
        return VertexSet(std::move(out));
    }

    auto certificate(const Graph & g, VertexSet witness, int k, bool optimal) -> IsolationCertificate
    {
        IsolationCertificate cert;
        cert.k = k;
        cert.residual_max_degree = residual_max_degree(g, witness);
        cert.witness = std::move(witness);
        cert.optimal = optimal;
        return cert;
    }

} // namespace

auto residual_max_degree(const Graph & g, const VertexSet & d) -> int
{
    std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : closed_neighborhood(g, d))
        removed[v] = true;
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (removed[v])
            continue;
        int deg = 0;
        for (Vertex w : g.neighbors(v))
            if (! removed[w])
                ++deg;
        best = std::max(best, deg);
    }
    return best;
}

auto is_k_isolating(const Graph & g, const VertexSet & d, int k) -> IsolationCheck
{
    if (! d.within(g.order()))
        throw IsolationError(ErrorCode::vertex_out_of_range, "vertex set does not belong to the graph");
    int delta = residual_max_degree(g, d);
    return {delta <= k, delta};
}

auto iota_exact(const Graph & g, int k, ExactMethod method) -> IsolationCertificate
{
    if (k < 0)
        throw IsolationError(ErrorCode::precondition_violation, "k must be non-negative");

    VertexSet witness;
    for (const auto & part : components(g)) {
        const int order = part.graph.order();
        const int limit = method == ExactMethod::subset_enumeration ? max_enumeration_order : max_exact_component_order;
        if (order > limit)
            throw IsolationError(ErrorCode::order_too_large,
                "component of order " + std::to_string(order) + " exceeds exact-search limit " + std::to_string(limit));
        if (order <= k + 1)
            continue;

        MaskGraph mg(part.graph);
        Mask chosen = method == ExactMethod::subset_enumeration ? subset_enumeration(mg, k)
                                                                : BranchAndBound(mg, k).solve(greedy_mask(mg, k));
        witness.insert(to_set(part, chosen));
    }
    return certificate(g, std::move(witness), k, true);
}

auto greedy_upper_bound(const Graph & g, int k) -> IsolationCertificate
{
    if (k < 0)
        throw IsolationError(ErrorCode::precondition_violation, "k must be non-negative");

    // Works on the whole graph rather than per component so it also serves
    // graphs beyond the bitmask limit.
    std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
    VertexSet chosen;
    auto residual_degree = [&](Vertex v) {
        int deg = 0;
        for (Vertex w : g.neighbors(v))
            if (! removed[w])
                ++deg;
        return deg;
    };

    while (true) {
        std::vector<bool> bad(static_cast<std::size_t>(g.order()), false);
        bool any = false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (! removed[v] && residual_degree(v) > k)
                bad[v] = any = true;
        if (! any)
            break;

        Vertex best_vertex = -1;
        int best_cover = -1;
        for (Vertex c = 0; c < g.order(); ++c) {
            int cover = bad[c] ? 1 : 0;
            for (Vertex w : g.neighbors(c))
                cover += bad[w] ? 1 : 0;
            if (cover > best_cover) {
                best_cover = cover;
                best_vertex = c;
            }
        }
        chosen.insert(best_vertex);
        removed[best_vertex] = true;
        for (Vertex w : g.neighbors(best_vertex))
            removed[w] = true;
    }
    return certificate(g, std::move(chosen), k, false);
}

namespace {

    auto isolates_induced(const Graph & g, const VertexSet & s, const VertexSet & d, int k) -> bool
    {
        for (Vertex v : d)
            if (! s.contains(v))
                return false;
        auto part = induced_subgraph(g, s);
        std::vector<Vertex> local;
        for (Vertex v : d)
            local.push_back(static_cast<Vertex>(
                std::lower_bound(part.to_parent.begin(), part.to_parent.end(), v) - part.to_parent.begin()));
        return residual_max_degree(part.graph, VertexSet(std::move(local))) <= k;
    }

} // namespace

auto compose_lemma22(const Graph & g, const VertexSet & s, const VertexSet & d, int k) -> bool
{
    if (! s.within(g.order()) || ! d.within(g.order()))
        throw IsolationError(ErrorCode::vertex_out_of_range, "vertex set does not belong to the graph");
    if (! isolates_induced(g, s, d, k))
        return false;
    auto dominated = closed_neighborhood(g, d);
    for (Vertex u : s) {
        if (dominated.contains(u))
            continue;
        for (Vertex w : g.neighbors(u))
            if (! s.contains(w))
                return false;
    }
    return true;
}

auto composition_holds(const Graph & g, const VertexSet & s, const VertexSet & d, int k) -> bool
{
    if (! s.within(g.order()) || ! d.within(g.order()))
        throw IsolationError(ErrorCode::vertex_out_of_range, "vertex set does not belong to the graph");
    if (! isolates_induced(g, s, d, k))
        return false;
    auto dominated = closed_neighborhood(g, d);
    for (Vertex u : s) {
        if (dominated.contains(u))
            continue;
        for (Vertex w : g.neighbors(u))
            if (! s.contains(w) && ! dominated.contains(w))
                return false;
    }
    return true;
}

} // namespace isolation
