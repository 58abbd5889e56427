#pragma once

// Internal machinery shared by the two constructive tracks.

#include "isolation/constructive.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace isolation::detail {

/// Vertices of an S-graph named by their distance from an anchor: (d) walks
/// along side 0 and (d, true) along side 1, so a cycle reads
/// y, y1, y2, ... one way and y, y1', y2', ... the other.
class Ring {
public:
    Ring() = default;

    /// `members` must induce a P3 or a cycle containing `anchor`. Side 0
    /// leaves the anchor through `toward` when given, otherwise through its
    /// smaller neighbour.
    static auto around(const Graph & g, const VertexSet & members, Vertex anchor, Vertex toward = -1) -> Ring;

    /// Only the anchor and one vertex per side, for neighbourhoods that are
    /// not S-graphs.
    static auto pair(Vertex anchor, Vertex a, Vertex b) -> Ring;

    auto operator()(int d, bool primed = false) const -> Vertex;
    [[nodiscard]] auto has(int d, bool primed = false) const -> bool;
    [[nodiscard]] auto anchor() const -> Vertex { return _side[0].front(); }
    [[nodiscard]] auto two_sided() const -> bool { return _side[1].size() > 1; }
    void flip();

private:
    std::array<std::vector<Vertex>, 2> _side;
};

struct Context {
    const Graph & g;
    const std::vector<Vertex> & ids; ///< local vertex -> id in the input graph
};

/// The configuration "x in N(v), H* an S-component adjacent to x, y its
/// attachment" used throughout the later cases.
struct Frame {
    Vertex v = 0;
    Vertex x = 0;
    Vertex y = 0;
    int h = 0;
    SKind h_kind = SKind::none;
    VertexSet x_set; ///< V(H*) + x
    VertexSet gv;    ///< component of G - X containing v
    SKind gv_kind = SKind::none;
    VertexSet y_set; ///< X + V(G_v)
    Ring ry;         ///< H* from y
    Ring rv;         ///< G_v from v, or just the two other neighbours of v
};

class Solver {
public:
    Solver(Track track, ConstructOptions options) : _track(track), _options(options) {}

    auto solve(const Graph & g, const std::vector<Vertex> & ids) -> VertexSet;

    [[nodiscard]] auto trace() const -> const CaseTrace & { return _trace; }

    // building blocks used by the track-specific code

    /// Composition step: D certifies G[S]; the components of G - S are solved
    /// recursively. `recorded` overrides the fragment logged for this step.
    auto reduce(const Context & c, const VertexSet & s, const VertexSet & d, std::string_view label,
        const VertexSet * recorded = nullptr) -> VertexSet;

    /// D certifies the whole current graph.
    auto finish(const Context & c, const VertexSet & d, std::string_view label) -> VertexSet;

    [[noreturn]] void fail(const Context & c, const std::string & why);
    void require(const Context & c, bool condition, const std::string & why)
    {
        if (! condition)
            fail(c, why);
    }

    auto solve_induced(const Context & c, const VertexSet & keep) -> VertexSet;

    auto case1(const Context & c, const ComponentPartition & p) -> VertexSet;
    auto make_frame(const Context & c, const ComponentPartition & p, Vertex x, int h, Vertex y) -> Frame;

    /// Smallest x in N(v) adjacent to an S-component, the smallest such
    /// component, and the smallest neighbour of x inside it.
    auto default_frame(const Context & c, const ComponentPartition & p) -> Frame;

    auto label(std::string_view tail) const -> std::string;

    auto thm16_case2(const Context & c, const ComponentPartition & p) -> VertexSet;
    auto thm17_remaining(const Context & c, const ComponentPartition & p) -> VertexSet;

private:
    auto solve_connected(const Context & c) -> VertexSet;
    void record(const Context & c, std::string_view label, const VertexSet & fragment);

    Track _track;
    ConstructOptions _options;
    CaseTrace _trace;
};

// small helpers over a local graph

auto neighbours_in(const Graph & g, Vertex u, const VertexSet & pool) -> VertexSet;
auto touches(const Graph & g, Vertex u, const VertexSet & pool) -> bool;
auto serialize_edge_list(const Graph & g) -> std::string;

/// Attempts the four side combinations of two rings in a fixed order until
/// `a(1) ~ b(1)`. Returns false, leaving both unchanged, if none works.
auto orient(const Graph & g, Ring & a, Ring & b) -> bool;

} // namespace isolation::detail
