#include "isolation/cycles.hpp"
#include "isolation/error.hpp"

#include <algorithm>
#include <deque>

namespace isolation {

namespace {

    // Depth-first extension of a simple path rooted at path[0]. Only vertices
    // larger than the root are used, so every cycle is found from its minimum
    // vertex. In induced mode, a new vertex may not be adjacent to any earlier
    // path vertex except its predecessor (and the root, on the closing step).
    class CycleSearch {
    public:
        CycleSearch(const Graph & g, int length, bool induced) :
            _g(g), _length(length), _induced(induced), _on_path(static_cast<std::size_t>(g.order()), false)
        {
        }

        auto run() -> std::optional<CycleWitness>
        {
            for (Vertex root = 0; root < _g.order(); ++root) {
                _path.assign(1, root);
                _on_path[root] = true;
                bool found = extend();
                _on_path[root] = false;
                if (found)
                    return CycleWitness{_path, _induced};
            }
            return std::nullopt;
        }

    private:
        auto chord_free(Vertex w, bool closing) const -> bool
        {
            // path[0..size-2] must not be adjacent to w, except the root when closing.
            for (std::size_t i = 0; i + 1 < _path.size(); ++i) {
                if (i == 0 && closing)
                    continue;
                if (_g.adjacent(_path[i], w))
                    return false;
            }
            return true;
        }

        auto extend() -> bool
        {
            const Vertex root = _path.front();
            const Vertex last = _path.back();
            const bool closing = static_cast<int>(_path.size()) + 1 == _length;

            for (Vertex w : _g.neighbors(last)) {
                if (w <= root || _on_path[w])
                    continue;
                if (closing) {
                    if (! _g.adjacent(w, root) || w <= _path[1])
                        continue;
                    if (_induced && ! chord_free(w, true))
                        continue;
                    _path.push_back(w);
                    return true;
                }
                if (_induced && _path.size() >= 2) {
                    // the root may only be adjacent to path[1] and the final vertex
                    if (_g.adjacent(_path.front(), w))
                        continue;
                    if (! chord_free(w, false))
                        continue;
                }
                _path.push_back(w);
                _on_path[w] = true;
                if (extend())
                    return true;
                _on_path[w] = false;
                _path.pop_back();
            }
            return false;
        }

        const Graph & _g;
        int _length;
        bool _induced;
        std::vector<Vertex> _path;
        std::vector<bool> _on_path;
    };

    // Simple paths from `from` to `to` on exactly `vertices` vertices, avoiding
    // the direct edge; used to test whether a prospective edge closes a cycle.
    auto path_exists(const Graph & g, Vertex from, Vertex to, int vertices, bool induced) -> bool
    {
        std::vector<Vertex> path{from};
        std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);
        on_path[from] = true;

        auto ok_induced = [&](Vertex w, bool final_step) {
            // w may touch only its predecessor among the path vertices. The pair
            // {from, to} becomes the new edge, so `to` may also touch `from`.
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (final_step && i == 0)
                    continue;
                if (g.adjacent(path[i], w))
                    return false;
            }
            const bool penultimate = static_cast<int>(path.size()) + 2 == vertices;
            if (! final_step && ! penultimate && g.adjacent(w, to))
                return false;
            return true;
        };

        auto rec = [&](auto && self) -> bool {
            const Vertex last = path.back();
            const bool final_step = static_cast<int>(path.size()) + 1 == vertices;
            for (Vertex w : g.neighbors(last)) {
                if (on_path[w])
                    continue;
                if (final_step) {
                    if (w != to)
                        continue;
                    if (induced && ! ok_induced(w, true))
                        continue;
                    return true;
                }
                if (w == to)
                    continue;
                if (induced && ! ok_induced(w, false))
                    continue;
                path.push_back(w);
                on_path[w] = true;
                if (self(self))
                    return true;
                on_path[w] = false;
                path.pop_back();
            }
            return false;
        };
        return rec(rec);
    }

} // namespace

auto find_cycle_of_length(const Graph & g, int length) -> std::optional<CycleWitness>
{
    if (length < 3)
        throw IsolationError(ErrorCode::precondition_violation, "cycle length must be at least 3");
    auto found = CycleSearch(g, length, false).run();
    if (found) {
        // report whether the particular cycle happens to be chordless
        CycleWitness probe{found->vertices, true};
        found->induced = is_valid_cycle(g, probe);
    }
    return found;
}

auto find_induced_cycle_of_length(const Graph & g, int length) -> std::optional<CycleWitness>
{
    if (length < 3)
        throw IsolationError(ErrorCode::precondition_violation, "cycle length must be at least 3");
    return CycleSearch(g, length, true).run();
}

auto edge_closes_cycle(const Graph & g, Vertex u, Vertex w, int length, bool induced) -> bool
{
    return path_exists(g, u, w, length, induced);
}

auto girth(const Graph & g) -> int
{
    int best = infinite_distance;
    const int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), infinite_distance);
        std::deque<Vertex> queue{s};
        dist[s] = 0;
        parent[s] = -1;
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == infinite_distance) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

auto classify_admissibility(const Graph & g) -> AdmissibilityReport
{
    AdmissibilityReport report;
    report.six_cycle = find_cycle_of_length(g, 6);
    report.induced_five_cycle = find_induced_cycle_of_length(g, 5);
    report.induced_six_cycle = find_induced_cycle_of_length(g, 6);
    report.c6_free = ! report.six_cycle;
    report.induced5_free = ! report.induced_five_cycle;
    report.induced6_free = ! report.induced_six_cycle;
    return report;
}

auto is_valid_cycle(const Graph & g, const CycleWitness & w) -> bool
{
    const auto & c = w.vertices;
    const auto len = c.size();
    if (len < 3)
        return false;
    std::vector<Vertex> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (Vertex v : c)
        if (v < 0 || v >= g.order())
            return false;
    for (std::size_t i = 0; i < len; ++i)
        if (! g.adjacent(c[i], c[(i + 1) % len]))
            return false;
    if (w.induced) {
        std::size_t edges_inside = 0;
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 1; j < len; ++j)
                if (g.adjacent(c[i], c[j]))
                    ++edges_inside;
        if (edges_inside != len)
            return false;
    }
    return true;
}

} // namespace isolation
