// Remaining cases of the 6-cycle-free construction: every S-component of
// G - N[v] has at least two attachments.

#include "solver.hpp"

#include "isolation/exact.hpp"

namespace isolation::detail {

namespace {

    auto any_edge(const Graph & g, std::initializer_list<Vertex> a, std::initializer_list<Vertex> b) -> bool
    {
        for (Vertex u : a)
            for (Vertex w : b)
                if (u >= 0 && w >= 0 && g.adjacent(u, w))
                    return true;
        return false;
    }

    // label lookup that yields -1 when the ring is too short
    auto at(const Ring & r, int d, bool primed = false) -> Vertex
    {
        return r.has(d, primed) ? r(d, primed) : -1;
    }

} // namespace

auto Solver::thm16_case2(const Context & c, const ComponentPartition & p) -> VertexSet
{
    const Graph & g = c.g;
    Frame f = default_frame(c, p);
    const Vertex x = f.x, y = f.y;

    if (f.gv_kind == SKind::none) {
        for (Vertex other : g.neighbors(f.v))
            if (other != x)
                require(c, ! any_edge(g, {other}, {at(f.ry, 2), at(f.ry, 2, true)}), "case 2.1: x' adjacent to y2");
        VertexSet d{y};
        if (f.h_kind == SKind::c7)
            d.insert(f.ry(3));
        else if (f.h_kind == SKind::c11)
            d.insert(VertexSet{f.ry(4), f.ry(4, true)});
        return reduce(c, f.x_set, d, label("case2.1"));
    }

    require(c, g.degree(f.v) == 3, "case 2.2: pivot degree is not 3");

    // Components hanging from x alone: certify Y + z through G[Y] - x.
    VertexSet outside;
    for (Vertex u = 0; u < g.order(); ++u)
        if (! f.y_set.contains(u))
            outside.insert(u);
    if (! outside.empty()) {
        const auto zs = neighbours_in(g, x, outside);
        require(c, ! zs.empty(), "claim B: vertices outside Y do not hang from x");
        const Vertex z = *zs.begin();
        const auto mark = _trace.steps.size();

        VertexSet inner = f.y_set;
        std::vector<Vertex> without_x;
        for (Vertex u : inner)
            if (u != x)
                without_x.push_back(u);
        VertexSet d_z = solve_induced(c, VertexSet(std::move(without_x)));
        d_z.insert(x);
        VertexSet z_set = f.y_set;
        z_set.insert(z);

        bool s_left = false;
        for (const auto & comp : components(delete_vertices(g, z_set).graph))
            s_left = s_left || classify_s_graph(comp.graph) != SKind::none;
        if (! s_left) {
            const VertexSet fragment{x};
            return reduce(c, z_set, d_z, label("claimB"), &fragment);
        }
        _trace.steps.resize(mark);
        return case1(c, partition_at(g, x));
    }

    const auto v1 = [&](bool primed = false) { return at(f.rv, 1, primed); };
    const bool cyc = f.gv_kind == SKind::c7 || f.gv_kind == SKind::c11;

    if (f.h_kind == SKind::c3)
        fail(c, "case 2.2.1: H* = C3 cannot occur");

    if (f.h_kind == SKind::p3 && f.ry.two_sided()) {
        require(c, orient(g, f.ry, f.rv), "case 2.2.2(I): no y1-v1 edge");
        const Vertex y1 = f.ry(1), y1p = f.ry(1, true);
        require(c, ! g.adjacent(x, v1(true)) && ! g.adjacent(y1p, v1(true)) && ! g.adjacent(y1p, x),
            "case 2.2.2(I): forbidden edge");
        const auto & rv = f.rv;
        switch (f.gv_kind) {
        case SKind::p3:
            if (g.adjacent(y1, v1(true)))
                return finish(c, {y1}, label("case2.2.2/I/P3a"));
            if (g.adjacent(y1p, v1()))
                return finish(c, {v1()}, label("case2.2.2/I/P3b"));
            return finish(c, {x}, label("case2.2.2/I/P3c"));
        case SKind::c7:
            if (! g.adjacent(y1, v1(true)))
                return finish(c, {x, rv(3)}, label("case2.2.2/I/C7a"));
            if (! g.adjacent(x, rv(2, true)))
                return finish(c, {y1, rv(3)}, label("case2.2.2/I/C7b"));
            return finish(c, {v1(), rv(2, true)}, label("case2.2.2/I/C7c"));
        case SKind::c11:
            if (! g.adjacent(y1, v1(true)))
                return finish(c, {x, rv(3), rv(3, true)}, label("case2.2.2/I/C11a"));
            if (! g.adjacent(x, rv(5)) && ! g.adjacent(x, rv(5, true)))
                return finish(c, {y1, rv(3), rv(3, true)}, label("case2.2.2/I/C11b"));
            return finish(c, {x, rv(2), rv(2, true)}, label("case2.2.2/I/C11c"));
        default: fail(c, "case 2.2.2(I): G_v = C3 cannot occur");
        }
    }

    if (f.h_kind == SKind::p3) {
        const Vertex y2 = f.ry(2);
        require(c, ! any_edge(g, {y2}, {v1(), v1(true)}), "case 2.2.2(II): y2 adjacent to v1");
        if (any_edge(g, {y}, {v1(), v1(true)})) {
            if (! g.adjacent(y, v1()))
                f.rv.flip();
            const auto & rv = f.rv;
            switch (f.gv_kind) {
            case SKind::c7: return finish(c, {y, rv(2, true)}, label("case2.2.2/II/yv1-C7"));
            case SKind::c11: return finish(c, {y, rv(3), rv(3, true)}, label("case2.2.2/II/yv1-C11"));
            default: return finish(c, {y}, label("case2.2.2/II/yv1-P3-C3"));
            }
        }
        require(c, f.gv_kind != SKind::c3, "case 2.2.2(II): G_v = C3 cannot occur");
        require(c, orient(g, f.ry, f.rv), "case 2.2.2(II): no y1-v1 edge");
        const auto & rv = f.rv;
        require(c, ! g.adjacent(x, v1(true)), "case 2.2.2(II): x adjacent to v1'");
        if (cyc)
            require(c, ! g.adjacent(x, rv(3)), "case 2.2.2(II): x adjacent to v3");
        if (g.adjacent(x, y2)) {
            switch (f.gv_kind) {
            case SKind::p3: return finish(c, {x}, label("case2.2.2/II/xy2-P3"));
            case SKind::c7: return finish(c, {x, rv(3)}, label("case2.2.2/II/xy2-C7"));
            default: return finish(c, {x, rv(3), rv(3, true)}, label("case2.2.2/II/xy2-C11"));
            }
        }
        switch (f.gv_kind) {
        case SKind::p3: return finish(c, {v1()}, label("case2.2.2/II/P3"));
        case SKind::c7: return finish(c, {v1(), rv(3, true)}, label("case2.2.2/II/C7"));
        default: return finish(c, {v1(), rv(3, true), rv(5)}, label("case2.2.2/II/C11"));
        }
    }

    const auto y_ends = [&](int d) { return std::vector<Vertex>{at(f.ry, d), at(f.ry, d, true)}; };
    const auto touches_v1 = [&](int d) {
        for (Vertex u : y_ends(d))
            if (any_edge(g, {u}, {v1(), v1(true)}))
                return true;
        return false;
    };

    if (f.h_kind == SKind::c7) {
        switch (f.gv_kind) {
        case SKind::c3:
            require(c, ! touches_v1(1) && ! touches_v1(2), "case 2.2.3(i): edge between H* and G_v");
            return finish(c, {x, f.ry(3)}, label("case2.2.3/i"));
        case SKind::p3: {
            require(c, ! touches_v1(2), "case 2.2.3(ii): y2 adjacent to v1");
            if (! touches_v1(1))
                return finish(c, {x, f.ry(3)}, label("case2.2.3/ii/a"));
            require(c, orient(g, f.ry, f.rv), "case 2.2.3(ii): orientation");
            const auto & ry = f.ry;
            require(c, ! g.adjacent(ry(1, true), v1(true)), "case 2.2.3(ii): y1'v1' edge");
            if (! g.adjacent(ry(1, true), v1()))
                return finish(c, {x, ry(3)}, label("case2.2.3/ii/b"));
            if (! g.adjacent(ry(2), x)) {
                require(c, ! g.adjacent(x, v1(true)), "case 2.2.3(ii): xv1' edge");
                return finish(c, {v1(), ry(3, true)}, label("case2.2.3/ii/c"));
            }
            require(c, ! g.adjacent(ry(3, true), v1(true)), "case 2.2.3(ii): y3'v1' edge");
            return finish(c, {ry(1, true), ry(2)}, label("case2.2.3/ii/d"));
        }
        case SKind::c7:
            require(c, ! touches_v1(2), "case 2.2.3(iii): y2 adjacent to v1");
            orient(g, f.ry, f.rv);
            return finish(c, {x, f.ry(3), f.rv(3)}, label("case2.2.3/iii"));
        default: {
            const VertexSet first{x, f.ry(3), f.rv(3), f.rv(3, true)};
            if (is_k_isolating(g, first, 1).isolating)
                return finish(c, first, label("case2.2.3/iv/a"));
            return finish(c, {x, f.ry(3, true), f.rv(3), f.rv(3, true)}, label("case2.2.3/iv/b"));
        }
        }
    }

    // H* = C11
    require(c, ! touches_v1(2), "case 2.2.4: y2 adjacent to v1");
    const bool linked = touches_v1(1);
    switch (f.gv_kind) {
    case SKind::c3:
        require(c, ! linked, "case 2.2.4(i): y1 adjacent to v1");
        return finish(c, {x, f.ry(4), f.ry(4, true)}, label("case2.2.4/i"));
    case SKind::p3: {
        if (! linked)
            return finish(c, {x, f.ry(4), f.ry(4, true)}, label("case2.2.4/ii/a"));
        require(c, orient(g, f.ry, f.rv), "case 2.2.4(ii): orientation");
        const auto & ry = f.ry;
        require(c, ! g.adjacent(ry(1, true), v1(true)) && ! g.adjacent(ry(5), v1()) && ! g.adjacent(x, v1(true)),
            "case 2.2.4(ii): forbidden edge");
        if (! g.adjacent(ry(1, true), v1()))
            return finish(c, {x, ry(4, true), ry(3)}, label("case2.2.4/ii/b"));
        const bool y2x = g.adjacent(ry(2), x), y2px = g.adjacent(ry(2, true), x);
        if (! y2x && ! y2px)
            return finish(c, {ry(4, true), ry(4), v1()}, label("case2.2.4/ii/c"));
        if (y2x)
            return finish(c, {ry(4, true), ry(3), v1()}, label("case2.2.4/ii/d"));
        return finish(c, {ry(3, true), ry(4), v1()}, label("case2.2.4/ii/e"));
    }
    default: {
        const bool c11 = f.gv_kind == SKind::c11;
        VertexSet d;
        std::string tail;
        if (! linked) {
            d = {x, f.ry(4), f.ry(4, true), f.rv(3)};
            tail = "a";
        }
        else {
            require(c, orient(g, f.ry, f.rv), "case 2.2.4: orientation");
            if (! g.adjacent(f.ry(5), v1(true))) {
                d = {x, f.ry(4, true), f.ry(3), f.rv(3)};
                tail = "b";
            }
            else {
                d = {y, f.ry(3, true), f.ry(5), f.rv(3)};
                tail = "c";
            }
        }
        if (c11)
            d.insert(f.rv(3, true));
        return finish(c, d, label(std::string(c11 ? "case2.2.4/iv/" : "case2.2.4/iii/") + tail));
    }
    }
}

} // namespace isolation::detail
