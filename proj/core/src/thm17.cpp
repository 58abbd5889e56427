// Remaining cases of the construction for graphs without induced 5- and
// 6-cycles: every S-component of G - N[v] has at least two attachments.

#include "solver.hpp"

#include <algorithm>

namespace isolation::detail {

namespace {

    auto at(const Ring & r, int d, bool primed = false) -> Vertex
    {
        return r.has(d, primed) ? r(d, primed) : -1;
    }

    auto adj(const Graph & g, Vertex a, Vertex b) -> bool
    {
        return a >= 0 && b >= 0 && g.adjacent(a, b);
    }

    auto hits(const Graph & g, std::initializer_list<Vertex> a, std::initializer_list<Vertex> b) -> bool
    {
        for (Vertex u : a)
            for (Vertex w : b)
                if (adj(g, u, w))
                    return true;
        return false;
    }

    auto first_neighbour(const Graph & g, Vertex u, const std::vector<Vertex> & pool) -> Vertex
    {
        for (Vertex w : pool)
            if (adj(g, u, w))
                return w;
        return -1;
    }

    /// Extra vertices certifying G_v when it is an S-graph seen from v.
    auto gv_part(const Frame & f) -> VertexSet
    {
        if (f.gv_kind == SKind::c7)
            return {f.rv(3)};
        if (f.gv_kind == SKind::c11)
            return {f.rv(3), f.rv(3, true)};
        return {};
    }

    class Remaining {
    public:
        Remaining(Solver & s, const Context & c, const ComponentPartition & p) : s(s), c(c), g(c.g), p(p) {}

        auto run() -> VertexSet;

    private:
        auto attachment(int h) const -> Vertex
        {
            for (Vertex x : g.neighbors(p.pivot))
                if (p.attachments[h].contains(x))
                    return x;
            s.fail(c, "S-component without a neighbour of the pivot");
        }
        auto ring_from(int h, Vertex x) const -> Ring
        {
            return Ring::around(g, p.components[h], *neighbours_in(g, x, p.components[h]).begin());
        }
        // certifies H when v is chosen
        auto d_h(int h) const -> VertexSet
        {
            const Ring r = ring_from(h, attachment(h));
            switch (p.kinds[h]) {
            case SKind::c7: return {r(2), r(2, true)};
            case SKind::c11: return {r(2), r(2, true), r(5, true)};
            default: return {r.anchor()};
            }
        }
        // certifies H + x when x is chosen
        auto d_prime(int h, Vertex x) const -> VertexSet
        {
            const Ring r = ring_from(h, x);
            switch (p.kinds[h]) {
            case SKind::c7: return {x, std::min(r(3), r(3, true))};
            case SKind::c11: return {x, r(3), r(3, true)};
            default: return {x};
            }
        }

        auto delta3(Frame f, int depth) -> VertexSet;
        auto delta4(Frame f, int depth) -> VertexSet;
        auto c7_dispatch(Frame f, Vertex x1, bool relabelled) -> VertexSet;
        auto c11_dispatch(Frame f, Vertex x1, bool relabelled) -> VertexSet;
        auto relabel(const Frame & f, Vertex x1) -> Frame;
        auto others(const Frame & f, std::initializer_list<Vertex> skip) const -> std::vector<Vertex>;

        auto on_x(const Frame & f, const VertexSet & d, const std::string & tail) -> VertexSet
        {
            return s.reduce(c, f.x_set, d, s.label(tail));
        }
        auto on_y(const Frame & f, VertexSet d, const std::string & tail) -> VertexSet
        {
            d.insert(gv_part(f));
            return s.reduce(c, f.y_set, d, s.label(tail));
        }

        Solver & s;
        const Context & c;
        const Graph & g;
        const ComponentPartition & p;
    };

    auto Remaining::others(const Frame & f, std::initializer_list<Vertex> skip) const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(f.v))
            if (w != f.x && std::find(skip.begin(), skip.end(), w) == skip.end())
                out.push_back(w);
        return out;
    }

    auto Remaining::run() -> VertexSet
    {
        const int delta = p.degree;
        const int hb = static_cast<int>(p.h_b.size());
        VertexSet x_all = closed_neighborhood(g, {p.pivot});
        for (int h : p.h_b)
            x_all.insert(p.components[h]);

        if (delta >= hb + 3) {
            VertexSet d{p.pivot};
            for (int h : p.h_b)
                d.insert(d_h(h));
            return s.reduce(c, x_all, d, s.label("claimC/pivot"));
        }
        if (delta <= hb) {
            VertexSet d(std::vector<Vertex>(g.neighbors(p.pivot).begin(), g.neighbors(p.pivot).end()));
            for (int h : p.h_b)
                d.insert(d_prime(h, attachment(h)));
            return s.reduce(c, x_all, d, s.label("claimC/neighbours"));
        }

        if (delta >= 5) {
            for (Vertex x : g.neighbors(p.pivot)) {
                std::vector<int> shared;
                for (int h : p.h_b)
                    if (p.attachments[h].contains(x))
                        shared.push_back(h);
                if (shared.size() < 2)
                    continue;
                VertexSet d{p.pivot};
                d.insert(d_prime(shared[0], x));
                d.insert(d_prime(shared[1], x));
                for (int h : p.h_b)
                    if (h != shared[0] && h != shared[1])
                        d.insert(d_h(h));
                return s.reduce(c, x_all, d, s.label("case1"));
            }
            s.fail(c, "case 1: no neighbour of the pivot meets two S-components");
        }

        Frame f = s.default_frame(c, p);
        return delta == 3 ? delta3(f, 0) : delta4(f, 0);
    }

    auto Remaining::delta3(Frame f, int depth) -> VertexSet
    {
        s.require(c, depth < 4, "case 2: re-labelling does not terminate");
        const Vertex x = f.x, y = f.y;
        const bool gv_s = f.gv_kind != SKind::none;
        const auto v1 = [&](bool primed = false) { return at(f.rv, 1, primed); };

        switch (f.h_kind) {
        case SKind::c3:
            if (! gv_s)
                return on_x(f, {y}, "case2.1.1");
            s.require(c, orient(g, f.ry, f.rv), "case 2.1: no y1-v1 edge");
            s.require(c, f.gv_kind == SKind::p3, "case 2.1.3: G_v is a cycle");
            s.require(c, adj(g, x, v1()) && ! adj(g, f.ry(1, true), v1(true)), "case 2.1.2: forbidden edge");
            return s.finish(c, {x}, s.label("case2.1.2"));

        case SKind::p3:
            if (f.ry.two_sided()) {
                s.require(c, orient(g, f.ry, f.rv), "case 2.2.1: no y1-v1 edge");
                if (! gv_s)
                    return on_x(f, {y}, "case2.2.1/a");
                if (f.gv_kind == SKind::p3)
                    return s.finish(c, {x}, s.label("case2.2.1/b"));
                s.require(c, adj(g, f.ry(1), x) && ! adj(g, f.ry(1, true), v1(true)), "case 2.2.1: forbidden edge");
                VertexSet d{x};
                d.insert(gv_part(f));
                return s.finish(c, d, s.label("case2.2.1/c"));
            }
            else {
                const Vertex y1 = f.ry(1), y2 = f.ry(2);
                for (Vertex other : g.neighbors(f.v))
                    if (adj(g, y1, other))
                        return delta3(s.make_frame(c, p, other, f.h, y1), depth + 1);
                if (! hits(g, {y2}, {v1(), v1(true)})) {
                    if (! gv_s)
                        return on_x(f, {y}, "case2.2.2/i/a");
                    return on_y(f, {x}, "case2.2.2/i/b");
                }
                if (! adj(g, y2, v1()))
                    f.rv.flip();
                s.require(c, ! adj(g, x, v1()), "case 2.2.2(ii): x adjacent to v1");
                if (adj(g, x, y2)) {
                    if (! gv_s)
                        return on_x(f, {x}, "case2.2.2/ii/a");
                    return on_y(f, {x}, "case2.2.2/ii/b");
                }
                s.require(c, adj(g, v1(), y), "case 2.2.2(ii): v1 not adjacent to y");
                return delta3(s.make_frame(c, p, v1(), f.h, y), depth + 1);
            }

        case SKind::c7:
        case SKind::c11: {
            const bool c7 = f.h_kind == SKind::c7;
            const std::string base = c7 ? "case2.3" : "case2.4";
            s.require(c, ! hits(g, {f.ry(2), f.ry(2, true)}, {v1(), v1(true)}), base + ": y2 adjacent to v1");
            const VertexSet on_h = c7 ? VertexSet{x, f.ry(3)} : VertexSet{y, f.ry(4), f.ry(4, true)};
            if (hits(g, {f.ry(1), f.ry(1, true)}, {v1(), v1(true)})) {
                s.require(c, orient(g, f.ry, f.rv), base + ": orientation");
                s.require(c, adj(g, x, v1()) && ! adj(g, f.ry(1, true), v1(true)), base + ".1: forbidden edge");
                if (! gv_s)
                    return on_x(f, on_h, base + ".1/a");
                s.require(c, f.gv_kind == SKind::p3, base + ".1: G_v is a cycle");
                return s.finish(
                    c, c7 ? on_h : VertexSet{x, f.ry(4), f.ry(4, true)}, s.label(base + ".1/b"));
            }
            if (! gv_s)
                return on_x(f, on_h, base + ".2/a");
            return on_y(f, c7 ? on_h : VertexSet{x, f.ry(4), f.ry(4, true)}, base + ".2/b");
        }
        default: break;
        }
        s.fail(c, "case 2: unexpected component kind");
    }

    auto Remaining::relabel(const Frame & f, Vertex x1) -> Frame
    {
        const Vertex new_y = f.ry(2), old_y1 = f.ry(1);
        Frame r = s.make_frame(c, p, x1, f.h, new_y);
        r.ry = Ring::around(g, p.components[f.h], new_y, old_y1);
        return r;
    }

    auto Remaining::delta4(Frame f, int depth) -> VertexSet
    {
        s.require(c, depth < 4, "case 3: re-labelling does not terminate");
        const Vertex x = f.x, y = f.y;
        const auto o = others(f, {});
        const auto free_of = [&](Vertex u, const std::vector<Vertex> & pool) { return first_neighbour(g, u, pool) < 0; };

        if (f.h_kind == SKind::p3 || f.h_kind == SKind::c3) {
            if (f.ry.two_sided())
                return on_x(f, {y}, "case3.1.1");
            const Vertex y1 = f.ry(1), y2 = f.ry(2);
            for (Vertex other : g.neighbors(f.v))
                if (adj(g, y1, other))
                    return delta4(s.make_frame(c, p, other, f.h, y1), depth + 1);
            if (free_of(y2, o))
                return on_x(f, {y}, "case3.1.2/a");
            const Vertex x1 = first_neighbour(g, y2, o);
            if (adj(g, x, y2))
                return on_x(f, {x}, "case3.1.2/b");
            s.require(c, adj(g, x1, y), "case 3.1.2: x1 not adjacent to y");
            return delta4(s.make_frame(c, p, x1, f.h, y), depth + 1);
        }

        if (f.h_kind == SKind::c7) {
            if (free_of(f.ry(2), o))
                return on_x(f, {y, f.ry(3, true)}, "case3.2/a");
            if (free_of(f.ry(2, true), o)) {
                f.ry.flip();
                return on_x(f, {y, f.ry(3, true)}, "case3.2/b");
            }
            return c7_dispatch(f, first_neighbour(g, f.ry(2), o), false);
        }

        if (f.h_kind == SKind::c11) {
            if (free_of(f.ry(2), o) && free_of(f.ry(2, true), o))
                return on_x(f, {y, f.ry(4), f.ry(4, true)}, "case3.3/a");
            if (free_of(f.ry(2), o))
                f.ry.flip();
            return c11_dispatch(f, first_neighbour(g, f.ry(2), o), false);
        }
        s.fail(c, "case 3: unexpected component kind");
    }

    auto Remaining::c7_dispatch(Frame f, Vertex x1, bool relabelled) -> VertexSet
    {
        const Vertex x = f.x, y = f.y;
        const auto & r = f.ry;
        const auto rest = others(f, {x1});
        const auto fail_here = [&](const char * where) -> VertexSet { s.fail(c, std::string("case 3.2: ") + where); };

        if (adj(g, x1, y)) {
            if (first_neighbour(g, r(2, true), rest) < 0)
                return on_x(f, {y, r(3)}, "case3.2.1");
            return fail_here("3.2.1 with y2' attached");
        }
        if (adj(g, x, r(2))) {
            if (relabelled)
                return fail_here("repeated relabelling");
            return c7_dispatch(relabel(f, x1), x, true);
        }
        if (adj(g, r(1), x) && adj(g, r(1), x1)) {
            const Vertex x2 = first_neighbour(g, r(1, true), rest);
            if (x2 < 0)
                return on_x(f, {r(1), r(3, true)}, "case3.2.3/a");
            const auto tail = others(f, {x1, x2});
            const Vertex x3 = tail.empty() ? -1 : tail.front();
            if (! adj(g, x2, y))
                return fail_here("3.2.3 with x2 not adjacent to y");
            if (! adj(g, r(3), x3))
                return on_x(f, {r(1), r(2, true)}, "case3.2.3/b");
            return on_x(f, {y, r(3)}, "case3.2.3/c");
        }
        if (adj(g, x, r(1)) && adj(g, x, x1)) {
            s.require(c, ! adj(g, r(1, true), x1), "case 3.2.4: y1' adjacent to x1");
            if (first_neighbour(g, r(1, true), rest) < 0)
                return on_x(f, {r(1), r(3, true)}, "case3.2.4");
            return fail_here("3.2.4 with y1' attached");
        }
        if (adj(g, x1, r(1)) && adj(g, x1, x)) {
            if (relabelled)
                return fail_here("repeated relabelling");
            return c7_dispatch(relabel(f, x1), x, true);
        }
        return fail_here("no configuration applies");
    }

    auto Remaining::c11_dispatch(Frame f, Vertex x1, bool relabelled) -> VertexSet
    {
        const Vertex x = f.x, y = f.y;
        const auto & r = f.ry;
        const auto rest = others(f, {x1});
        const auto fail_here = [&](const char * where) -> VertexSet { s.fail(c, std::string("case 3.3: ") + where); };

        if (adj(g, x, r(2))) {
            if (first_neighbour(g, y, rest) >= 0)
                return fail_here("3.3.1 with y attached");
            if (first_neighbour(g, r(4), rest) < 0)
                return on_x(f, {r(2), r(2, true), r(5, true)}, "case3.3.1/a");
            s.require(c, first_neighbour(g, r(1, true), rest) < 0, "case 3.3.1: y1' attached");
            return on_x(f, {r(2), r(5), r(3, true)}, "case3.3.1/b");
        }
        if (adj(g, x1, y)) {
            if (relabelled)
                return fail_here("repeated relabelling");
            return c11_dispatch(relabel(f, x1), x, true);
        }
        if (adj(g, r(1), x) && adj(g, r(1), x1)) {
            const bool y1p_free = first_neighbour(g, r(1, true), rest) < 0;
            const bool y2p_free = first_neighbour(g, r(2, true), rest) < 0;
            if (y1p_free && y2p_free)
                return on_x(f, {r(1), r(4), r(4, true)}, "case3.3.3/a");
            if (! y1p_free) {
                const Vertex x2 = first_neighbour(g, r(1, true), rest);
                const auto tail = others(f, {x1, x2});
                const Vertex x3 = tail.empty() ? -1 : tail.front();
                if (adj(g, x, r(1, true)) || adj(g, x, x2) || ! adj(g, x2, y))
                    return fail_here("3.3.3 with y1' attached");
                if (adj(g, r(3), x3))
                    return on_x(f, {y, r(3), r(3, true)}, "case3.3.3/c");
                if (! adj(g, r(4), x3))
                    return on_x(f, {r(1), r(2, true), r(5, true)}, "case3.3.3/b");
                return on_x(f, {r(1), r(2, true), r(4)}, "case3.3.3/d");
            }
            const Vertex x2 = first_neighbour(g, r(2, true), rest);
            const auto tail = others(f, {x1, x2});
            const Vertex x3 = tail.empty() ? -1 : tail.front();
            if (adj(g, r(3), x3)) {
                if (adj(g, r(3), x))
                    return fail_here("3.3.3 with y3 adjacent to x");
                if (adj(g, x3, r(2)) && adj(g, x3, x))
                    return on_x(f, {r(1), r(4), r(2, true)}, "case3.3.3/e");
                return fail_here("3.3.3 with y3x3");
            }
            if (! adj(g, r(4), x3))
                return on_x(f, {r(1), r(2, true), r(5, true)}, "case3.3.3/f");
            return on_x(f, {r(1), r(2, true), r(4)}, "case3.3.3/g");
        }
        if (adj(g, x, r(1)) && adj(g, x, x1)) {
            s.require(c, ! adj(g, r(1, true), x1) && ! adj(g, r(2, true), x1), "case 3.3.4: forbidden edge");
            if (first_neighbour(g, r(1, true), rest) < 0 && first_neighbour(g, r(2, true), rest) < 0)
                return on_x(f, {r(1), r(4), r(4, true)}, "case3.3.4");
            return fail_here("3.3.4 with y1' or y2' attached");
        }
        if (adj(g, x1, r(1)) && adj(g, x1, x)) {
            if (relabelled)
                return fail_here("repeated relabelling");
            return c11_dispatch(relabel(f, x1), x, true);
        }
        return fail_here("no configuration applies");
    }

} // namespace

auto Solver::thm17_remaining(const Context & c, const ComponentPartition & p) -> VertexSet
{
    return Remaining(*this, c, p).run();
}

} // namespace isolation::detail
