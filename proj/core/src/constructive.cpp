#include "solver.hpp"

#include "isolation/cycles.hpp"
#include "isolation/exact.hpp"

#include <algorithm>
#include <sstream>

namespace isolation {

auto to_string(Track track) -> const char *
{
    return track == Track::thm16 ? "thm16" : "thm17";
}

auto CaseTrace::fragments_union() const -> VertexSet
{
    VertexSet all;
    for (const auto & step : steps)
        all.insert(step.fragment);
    return all;
}

CaseExhaustion::CaseExhaustion(const std::string & message, CaseTrace trace, std::string subgraph) :
    IsolationError(ErrorCode::internal_case_exhaustion, message), _trace(std::move(trace)), _subgraph(std::move(subgraph))
{
}

namespace detail {

    auto Ring::around(const Graph & g, const VertexSet & members, Vertex anchor, Vertex toward) -> Ring
    {
        auto first = neighbours_in(g, anchor, members);
        std::vector<Vertex> starts(first.begin(), first.end());
        if (toward >= 0 && starts.size() == 2 && starts[1] == toward)
            std::swap(starts[0], starts[1]);

        Ring r;
        for (std::size_t s = 0; s < 2; ++s) {
            r._side[s] = {anchor};
            if (s >= starts.size())
                continue;
            Vertex prev = anchor, cur = starts[s];
            while (true) {
                r._side[s].push_back(cur);
                Vertex next = -1;
                for (Vertex w : g.neighbors(cur))
                    if (w != prev && w != anchor && members.contains(w))
                        next = w;
                if (next < 0)
                    break;
                prev = cur;
                cur = next;
            }
        }
        return r;
    }

    auto Ring::pair(Vertex anchor, Vertex a, Vertex b) -> Ring
    {
        Ring r;
        r._side[0] = {anchor, a};
        r._side[1] = {anchor, b};
        return r;
    }

    auto Ring::has(int d, bool primed) const -> bool
    {
        return d >= 0 && d < static_cast<int>(_side[primed ? 1 : 0].size());
    }

    auto Ring::operator()(int d, bool primed) const -> Vertex
    {
        if (! has(d, primed))
            throw IsolationError(ErrorCode::internal_case_exhaustion,
                "vertex label at distance " + std::to_string(d) + (primed ? "'" : "") + " is undefined");
        return _side[primed ? 1 : 0][d];
    }

    void Ring::flip()
    {
        if (two_sided())
            std::swap(_side[0], _side[1]);
    }

    auto neighbours_in(const Graph & g, Vertex u, const VertexSet & pool) -> VertexSet
    {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(u))
            if (pool.contains(w))
                out.push_back(w);
        return VertexSet(std::move(out));
    }

    auto touches(const Graph & g, Vertex u, const VertexSet & pool) -> bool
    {
        return std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(), [&](Vertex w) { return pool.contains(w); });
    }

    auto serialize_edge_list(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << g.order() << ' ' << g.size() << '\n';
        for (auto [u, w] : g.edges())
            out << u << ' ' << w << '\n';
        return out.str();
    }

    auto orient(const Graph & g, Ring & a, Ring & b) -> bool
    {
        for (int flip_b = 0; flip_b < 2; ++flip_b) {
            if (flip_b && ! b.two_sided())
                continue;
            for (int flip_a = 0; flip_a < 2; ++flip_a) {
                if (flip_a && ! a.two_sided())
                    continue;
                Ring ta = a, tb = b;
                if (flip_a)
                    ta.flip();
                if (flip_b)
                    tb.flip();
                if (ta.has(1) && tb.has(1) && g.adjacent(ta(1), tb(1))) {
                    a = ta;
                    b = tb;
                    return true;
                }
            }
        }
        return false;
    }

    auto Solver::label(std::string_view tail) const -> std::string
    {
        return std::string(to_string(_track)) + "/" + std::string(tail);
    }

    void Solver::record(const Context & c, std::string_view label, const VertexSet & fragment)
    {
        std::vector<Vertex> frag, scope;
        for (Vertex u : fragment)
            frag.push_back(c.ids[u]);
        scope.assign(c.ids.begin(), c.ids.end());
        _trace.steps.push_back({std::string(label), VertexSet(std::move(frag)), VertexSet(std::move(scope))});
    }

    void Solver::fail(const Context & c, const std::string & why)
    {
        throw CaseExhaustion(why, _trace, serialize_edge_list(c.g));
    }

    auto Solver::solve_induced(const Context & c, const VertexSet & keep) -> VertexSet
    {
        auto sub = induced_subgraph(c.g, keep);
        std::vector<Vertex> ids;
        ids.reserve(sub.to_parent.size());
        for (Vertex u : sub.to_parent)
            ids.push_back(c.ids[u]);
        return sub.lift(solve(sub.graph, ids));
    }

    auto Solver::reduce(const Context & c, const VertexSet & s, const VertexSet & d, std::string_view label,
        const VertexSet * recorded) -> VertexSet
    {
        const std::string where(label);
        for (Vertex u : d)
            require(c, s.contains(u), where + ": chosen vertex outside its block");
        require(c, composition_holds(c.g, s, d, 1), where + ": block set fails the composition check");
        require(c, 4 * d.size() <= s.size(), where + ": block set exceeds a quarter of its block");

        record(c, label, recorded ? *recorded : d);
        VertexSet result = d;
        auto rest = delete_vertices(c.g, s);
        for (const auto & comp : components(rest.graph)) {
            std::vector<Vertex> members;
            for (Vertex u : comp.to_parent)
                members.push_back(rest.to_parent[u]);
            VertexSet keep(std::move(members));
            require(c, classify_s_graph(comp.graph) == SKind::none, where + ": remaining component is an S-graph");
            result.insert(solve_induced(c, keep));
        }
        return result;
    }

    auto Solver::finish(const Context & c, const VertexSet & d, std::string_view label) -> VertexSet
    {
        std::vector<Vertex> all(static_cast<std::size_t>(c.g.order()));
        for (Vertex u = 0; u < c.g.order(); ++u)
            all[u] = u;
        return reduce(c, VertexSet(std::move(all)), d, label);
    }

    auto Solver::solve(const Graph & g, const std::vector<Vertex> & ids) -> VertexSet
    {
        const Context c{g, ids};
        const auto mark = _trace.steps.size();
        auto recover = [&]() {
            _trace.steps.resize(mark);
            _trace.used_fallback = true;
            auto d = iota_exact(g, 1).witness;
            record(c, "fallback/exact", d);
            return d;
        };
        const bool may_recover = _options.fallback_to_exact && g.order() <= max_enumeration_order;
        try {
            return solve_connected(c);
        }
        catch (const CaseExhaustion &) {
            if (! may_recover)
                throw;
            return recover();
        }
        catch (const IsolationError & e) {
            if (e.code() != ErrorCode::internal_case_exhaustion)
                throw;
            if (! may_recover)
                throw CaseExhaustion(e.what(), _trace, serialize_edge_list(g));
            return recover();
        }
    }

    auto Solver::solve_connected(const Context & c) -> VertexSet
    {
        const Graph & g = c.g;
        const int n = g.order();
        require(c, is_connected(g), "subproblem is disconnected");
        require(c, classify_s_graph(g) == SKind::none, "subproblem is an S-graph");
        if (n <= 3) {
            record(c, label("base/order<=3"), {});
            return {};
        }

        const auto [delta, v] = max_degree(g);
        if (delta <= 2)
            return finish(c, construct_path_or_cycle(g), label("base/path-or-cycle"));
        if (delta == n - 1)
            return finish(c, {v}, label("base/dominating-vertex"));

        const auto p = partition_at(g, v);
        if (p.h_b.empty())
            return reduce(c, closed_neighborhood(g, {v}), {v}, label("no-s-components"));

        for (const auto & [x, groups] : p.per_attachment)
            if (! groups.h_b.empty())
                return case1(c, p);

        return _track == Track::thm16 ? thm16_case2(c, p) : thm17_remaining(c, p);
    }

    auto Solver::case1(const Context & c, const ComponentPartition & p) -> VertexSet
    {
        const Graph & g = c.g;
        const Vertex v = p.pivot;
        Vertex x = -1;
        for (const auto & [candidate, groups] : p.per_attachment)
            if (! groups.h_b.empty()) {
                x = candidate;
                break;
            }
        require(c, x >= 0, "case 1 without an S-component hanging from a single vertex");

        VertexSet x_set{x};
        VertexSet d{x};
        for (int h : p.per_attachment.at(x).h_b) {
            const auto & comp = p.components[h];
            x_set.insert(comp);
            if (p.kinds[h] == SKind::c7 || p.kinds[h] == SKind::c11) {
                auto ring = Ring::around(g, comp, *neighbours_in(g, x, comp).begin());
                if (p.kinds[h] == SKind::c7)
                    d.insert(std::min(ring(3), ring(3, true)));
                else
                    d.insert(VertexSet{ring(3), ring(3, true)});
            }
        }

        // G_v: the component of G - X that contains the pivot
        auto rest = delete_vertices(g, x_set);
        VertexSet gv;
        for (const auto & comp : components(rest.graph)) {
            std::vector<Vertex> members;
            for (Vertex u : comp.to_parent)
                members.push_back(rest.to_parent[u]);
            VertexSet m(std::move(members));
            if (m.contains(v))
                gv = m;
        }
        const SKind gv_kind = classify_s_graph(induced_subgraph(g, gv).graph);
        const std::string base = _track == Track::thm16 ? "case1" : "case1-shared";
        if (gv_kind == SKind::none)
            return reduce(c, x_set, d, label(base + ".1"));

        VertexSet y_set = x_set.united(gv);
        if (gv_kind == SKind::c7 || gv_kind == SKind::c11) {
            auto rv = Ring::around(g, gv, v);
            d.insert(rv(3));
            if (gv_kind == SKind::c11)
                d.insert(rv(3, true));
        }
        const char * sub = gv_kind == SKind::c7 ? ".2.2" : gv_kind == SKind::c11 ? ".2.3" : ".2.1";
        return reduce(c, y_set, d, label(base + sub));
    }

    auto Solver::make_frame(const Context & c, const ComponentPartition & p, Vertex x, int h, Vertex y) -> Frame
    {
        const Graph & g = c.g;
        Frame f;
        f.v = p.pivot;
        f.x = x;
        f.y = y;
        f.h = h;
        f.h_kind = p.kinds[h];
        f.x_set = p.components[h];
        f.x_set.insert(x);

        auto rest = delete_vertices(g, f.x_set);
        for (const auto & comp : components(rest.graph)) {
            std::vector<Vertex> members;
            for (Vertex u : comp.to_parent)
                members.push_back(rest.to_parent[u]);
            VertexSet m(std::move(members));
            if (m.contains(f.v)) {
                f.gv = m;
                f.gv_kind = classify_s_graph(comp.graph);
            }
        }
        f.y_set = f.x_set.united(f.gv);
        f.ry = Ring::around(g, p.components[h], y);

        if (f.gv_kind != SKind::none) {
            f.rv = Ring::around(g, f.gv, f.v);
        }
        else {
            std::vector<Vertex> others;
            for (Vertex w : g.neighbors(f.v))
                if (w != x)
                    others.push_back(w);
            require(c, others.size() >= 2, "pivot has fewer than two neighbours besides x");
            f.rv = Ring::pair(f.v, others[0], others[1]);
        }
        return f;
    }

    auto Solver::default_frame(const Context & c, const ComponentPartition & p) -> Frame
    {
        const Graph & g = c.g;
        for (Vertex x : g.neighbors(p.pivot))
            for (int h : p.h_b)
                if (p.attachments[h].contains(x)) {
                    Vertex y = *neighbours_in(g, x, p.components[h]).begin();
                    return make_frame(c, p, x, h, y);
                }
        fail(c, "no neighbour of the pivot touches an S-component");
    }

} // namespace detail

auto construct_path_or_cycle(const Graph & g) -> VertexSet
{
    const int n = g.order();
    if (n == 0 || ! is_connected(g))
        throw IsolationError(ErrorCode::precondition_violation, "expected a connected path or cycle");
    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) > 2)
            throw IsolationError(ErrorCode::precondition_violation, "maximum degree exceeds 2");

    const bool cycle = g.size() == static_cast<std::size_t>(n) && n >= 3;
    if (cycle && (n == 3 || n == 6 || n == 7 || n == 11))
        throw IsolationError(ErrorCode::precondition_violation, "C" + std::to_string(n) + " has no such set");
    if (! cycle && n == 3)
        throw IsolationError(ErrorCode::precondition_violation, "P3 has no such set");
    if (n <= 2)
        return {};

    // Traversal order along the path (from an end) or around the cycle.
    std::vector<Vertex> order;
    Vertex start = 0;
    if (! cycle)
        for (Vertex u = 0; u < n; ++u)
            if (g.degree(u) == 1) {
                start = u;
                break;
            }
    order.push_back(start);
    Vertex prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
            if (w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
        order.push_back(cur);
    }

    // Period five: each chosen vertex removes three, leaving gaps of two.
    std::vector<Vertex> chosen;
    if (cycle) {
        for (int i = 0; i < n; i += 5)
            chosen.push_back(order[i]);
    }
    else {
        int last = -1;
        for (int i = 3; i < n; i += 5) {
            chosen.push_back(order[i]);
            last = i;
        }
        // a trailing P3 needs its far end
        if (n - last - 2 == 3)
            chosen.push_back(order[n - 1]);
    }
    return VertexSet(std::move(chosen));
}

auto s_graph_witness(const Graph & h, Vertex y) -> VertexSet
{
    const SKind kind = classify_s_graph(h);
    if (kind == SKind::none)
        throw IsolationError(ErrorCode::invalid_kind, "graph is not one of P3, C3, C7, C11");
    if (y < 0 || y >= h.order())
        throw IsolationError(ErrorCode::vertex_out_of_range, "attachment vertex " + std::to_string(y));
    if (kind == SKind::p3 || kind == SKind::c3)
        return {};

    auto dist = bfs_distance(h, y);
    std::vector<Vertex> far;
    for (Vertex u = 0; u < h.order(); ++u)
        if (dist[u] == 3)
            far.push_back(u);
    if (kind == SKind::c7)
        far.resize(1);
    return VertexSet(std::move(far));
}

auto s_graph_witness(SKind kind, Vertex y) -> VertexSet
{
    switch (kind) {
    case SKind::p3: return s_graph_witness(path_graph(3), y);
    case SKind::c3: return s_graph_witness(cycle_graph(3), y);
    case SKind::c7: return s_graph_witness(cycle_graph(7), y);
    case SKind::c11: return s_graph_witness(cycle_graph(11), y);
    case SKind::none: break;
    }
    throw IsolationError(ErrorCode::invalid_kind, "kind None has no witness");
}

auto partition_at(const Graph & g, Vertex v) -> ComponentPartition
{
    if (v < 0 || v >= g.order())
        throw IsolationError(ErrorCode::vertex_out_of_range, "pivot " + std::to_string(v));

    ComponentPartition p;
    p.pivot = v;
    p.degree = g.degree(v);
    const VertexSet closed = closed_neighborhood(g, {v});
    if (static_cast<int>(closed.size()) == g.order())
        throw IsolationError(ErrorCode::precondition_violation, "pivot dominates the graph");
    for (Vertex x : g.neighbors(v))
        p.per_attachment[x];

    auto rest = delete_vertices(g, closed);
    for (const auto & comp : components(rest.graph)) {
        std::vector<Vertex> members;
        for (Vertex u : comp.to_parent)
            members.push_back(rest.to_parent[u]);
        VertexSet m(std::move(members));
        const int index = static_cast<int>(p.components.size());
        const SKind kind = classify_s_graph(comp.graph);
        VertexSet attach = open_neighborhood(g, m);

        p.components.push_back(m);
        p.kinds.push_back(kind);
        p.attachments.push_back(attach);
        (kind == SKind::none ? p.h_g : p.h_b).push_back(index);
        if (kind == SKind::p3 || kind == SKind::c3)
            ++p.k3;
        else if (kind == SKind::c7)
            ++p.k7;
        else if (kind == SKind::c11)
            ++p.k11;

        if (attach.size() == 1) {
            auto & groups = p.per_attachment[*attach.begin()];
            (kind == SKind::none ? groups.h_g : groups.h_b).push_back(index);
        }
    }
    return p;
}

auto partition_pivot(const Graph & g) -> ComponentPartition
{
    if (g.order() == 0 || ! is_connected(g))
        throw IsolationError(ErrorCode::precondition_violation, "partition needs a connected graph");
    const auto [delta, v] = max_degree(g);
    if (delta < 3 || delta > g.order() - 2)
        throw IsolationError(ErrorCode::precondition_violation, "partition needs 3 <= max degree <= n-2");
    return partition_at(g, v);
}

auto construct(const Graph & g, Track track, const ConstructOptions & options) -> Construction
{
    if (g.order() == 0)
        return {};
    if (! is_connected(g))
        throw IsolationError(ErrorCode::precondition_violation, "graph is disconnected");
    if (classify_s_graph(g) != SKind::none)
        throw IsolationError(ErrorCode::precondition_violation, std::string("graph is ") + to_string(classify_s_graph(g)));
    if (track == Track::thm16) {
        if (find_cycle_of_length(g, 6))
            throw IsolationError(ErrorCode::precondition_violation, "graph contains a 6-cycle");
    }
    else if (find_induced_cycle_of_length(g, 5) || find_induced_cycle_of_length(g, 6)) {
        throw IsolationError(ErrorCode::contains_induced_forbidden_cycle, "graph contains an induced 5- or 6-cycle");
    }

    std::vector<Vertex> ids(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u)
        ids[u] = u;
    detail::Solver solver(track, options);
    VertexSet witness = solver.solve(g, ids);

    const auto check = is_k_isolating(g, witness, 1);
    const std::size_t bound = static_cast<std::size_t>(g.order() / 4);
    if (! check.isolating || witness.size() > bound)
        throw CaseExhaustion("final witness failed verification", solver.trace(), detail::serialize_edge_list(g));
    return {std::move(witness), solver.trace()};
}

auto construct_theorem16(const Graph & g, const ConstructOptions & options) -> Construction
{
    return construct(g, Track::thm16, options);
}

auto construct_theorem17(const Graph & g, const ConstructOptions & options) -> Construction
{
    return construct(g, Track::thm17, options);
}

} // namespace isolation
