#include "isolation/harness/search.hpp"

#include "isolation/cycles.hpp"
#include "isolation/error.hpp"
#include "isolation/exact.hpp"
#include "isolation/generators.hpp"

#include <random>

namespace isolation::harness {

auto search_eligible(const Graph & g, int nmin, int nmax) -> bool
{
    return g.order() >= nmin && g.order() <= nmax && is_connected(g) && classify_s_graph(g) == SKind::none
        && ! find_induced_cycle_of_length(g, 6);
}

auto initial_search_graph(int nmin, int nmax) -> Graph
{
    const int t = (nmin + 3) / 4;
    if (4 * t <= nmax) {
        ExtremalSpec spec;
        spec.backbone = path_graph(t);
        spec.gadget_kinds.assign(static_cast<std::size_t>(t), SKind::p3);
        return build_extremal(spec).graph;
    }
    return path_graph(nmin);
}

namespace {

    auto ratio_of(const Graph & g, VertexSet * witness = nullptr) -> Ratio
    {
        auto cert = iota_exact(g, 1);
        if (witness)
            *witness = cert.witness;
        return Ratio{cert.size(), g.order()};
    }

    auto flip_edge(const Graph & g, Vertex u, Vertex w) -> Graph
    {
        std::vector<Edge> edges;
        bool present = false;
        for (auto e : g.edges()) {
            if (e == Edge{std::min(u, w), std::max(u, w)})
                present = true;
            else
                edges.push_back(e);
        }
        if (! present)
            edges.emplace_back(std::min(u, w), std::max(u, w));
        return Graph::from_edge_list(g.order(), edges);
    }

    auto add_pendant(const Graph & g, Vertex at) -> Graph
    {
        auto edges = g.edges();
        edges.emplace_back(at, g.order());
        return Graph::from_edge_list(g.order() + 1, edges);
    }

    class Climber {
    public:
        explicit Climber(const SearchOptions & o) : _o(o), _rng(o.seed) {}

        auto run() -> SearchState
        {
            SearchState s;
            s.seed = _o.seed;
            s.restart_after = _o.restart_after;
            s.current = initial_search_graph(_o.nmin, _o.nmax);
            s.current_ratio = ratio_of(s.current);
            s.best = s.current;
            s.best_ratio = ratio_of(s.best, &s.best_witness);
            s.history.push_back({0, s.best, static_cast<int>(s.best_ratio.num), s.best_ratio});

            long long stall = 0;
            for (long long step = 1; step <= _o.budget; ++step) {
                s.steps = step;
                if (stall >= _o.restart_after) {
                    restart(s);
                    stall = 0;
                    continue;
                }
                ++stall;
                Graph next = propose(s.current);
                if (! search_eligible(next, _o.nmin, _o.nmax))
                    continue;
                VertexSet witness;
                const Ratio r = ratio_of(next, &witness);
                if (r < s.current_ratio)
                    continue;
                ++s.accepted;
                s.current = std::move(next);
                s.current_ratio = r;
                if (s.best_ratio < r) {
                    s.best = s.current;
                    s.best_ratio = r;
                    s.best_witness = witness;
                    s.history.push_back({step, s.best, static_cast<int>(r.num), r});
                    stall = 0;
                }
            }
            return s;
        }

    private:
        auto pick(int bound) -> int { return std::uniform_int_distribution<int>(0, bound - 1)(_rng); }

        auto propose(const Graph & g) -> Graph
        {
            const int n = g.order();
            const int roll = pick(20);
            if (roll < 3 && n < _o.nmax)
                return add_pendant(g, pick(n));
            if (roll < 6 && n > _o.nmin) {
                std::vector<Vertex> leaves;
                for (Vertex u = 0; u < n; ++u)
                    if (g.degree(u) == 1)
                        leaves.push_back(u);
                if (! leaves.empty())
                    return delete_vertices(g, {leaves[pick(static_cast<int>(leaves.size()))]}).graph;
            }
            const Vertex u = pick(n);
            Vertex w = pick(n - 1);
            if (w >= u)
                ++w;
            return flip_edge(g, u, w);
        }

        void restart(SearchState & s)
        {
            ++s.restarts;
            const int n = _o.nmin + pick(_o.nmax - _o.nmin + 1);
            const auto seed = std::uniform_int_distribution<std::uint64_t>()(_rng);
            Graph tree = random_admissible(n, static_cast<std::size_t>(n - 1), AdmissibleClass::induced56_free, seed);
            s.current = std::move(tree);
            s.current_ratio = ratio_of(s.current);
            if (s.best_ratio < s.current_ratio) {
                s.best = s.current;
                s.best_ratio = ratio_of(s.best, &s.best_witness);
                s.history.push_back({s.steps, s.best, static_cast<int>(s.best_ratio.num), s.best_ratio});
            }
        }

        SearchOptions _o;
        std::mt19937_64 _rng;
    };

} // namespace

auto run_search(const SearchOptions & options) -> SearchState
{
    if (options.nmin < 4 || options.nmin > options.nmax)
        throw IsolationError(ErrorCode::precondition_violation, "search needs 4 <= nmin <= nmax");
    if (options.nmax > max_exact_component_order)
        throw IsolationError(ErrorCode::order_too_large,
            "search orders are limited to " + std::to_string(max_exact_component_order));
    if (options.budget < 0 || options.restart_after < 1)
        throw IsolationError(ErrorCode::precondition_violation, "budget must be >= 0 and restart interval >= 1");
    return Climber(options).run();
}

} // namespace isolation::harness
