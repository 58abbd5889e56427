#include "isolation/harness/formats.hpp"
#include "isolation/error.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace isolation::harness {

namespace {

    auto parse_error(const std::string & message) -> IsolationError
    {
        return IsolationError(ErrorCode::parse_error, message);
    }

    auto strip_comments(std::string_view text) -> std::string
    {
        std::string out;
        bool comment = false;
        for (char ch : text) {
            if (ch == '#')
                comment = true;
            else if (ch == '\n')
                comment = false;
            if (! comment)
                out.push_back(ch);
        }
        return out;
    }

    auto read_count(std::istream & in, const char * what) -> long long
    {
        std::string token;
        if (! (in >> token))
            throw parse_error(std::string("unexpected end of input, expected ") + what);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size())
            throw parse_error(std::string("expected ") + what + ", got '" + token + "'");
        return value;
    }

} // namespace

auto parse_edge_list(std::string_view text) -> std::vector<Graph>
{
    std::istringstream in(strip_comments(text));
    std::vector<Graph> graphs;
    while (in >> std::ws && in.peek() != EOF) {
        const long long n = read_count(in, "vertex count");
        const long long m = read_count(in, "edge count");
        if (n < 0 || m < 0)
            throw parse_error("counts must be non-negative");
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (long long i = 0; i < m; ++i) {
            const long long u = read_count(in, "edge endpoint");
            const long long w = read_count(in, "edge endpoint");
            if (u < 0 || w < 0 || u >= n || w >= n)
                throw parse_error("edge " + std::to_string(u) + " " + std::to_string(w) + " outside 0.."
                    + std::to_string(n - 1));
            if (u == w)
                throw parse_error("self-loop at " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
        }
        graphs.push_back(Graph::from_edge_list(static_cast<int>(n), edges));
    }
    return graphs;
}

auto write_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, w] : edges)
        out << u << ' ' << w << '\n';
    return out.str();
}

auto parse_graph6_line(std::string_view line) -> Graph
{
    if (line.empty())
        throw parse_error("empty graph6 line");
    for (char ch : line)
        if (ch < 63 || ch > 126)
            throw parse_error("invalid graph6 character");
    const int n = line[0] - 63;
    if (n > max_graph6_order)
        throw parse_error("graph6 orders above " + std::to_string(max_graph6_order) + " are not supported");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t chars = (bits + 5) / 6;
    if (line.size() != 1 + chars)
        throw parse_error("graph6 length does not match order " + std::to_string(n));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int w = 1; w < n; ++w)
        for (int u = 0; u < w; ++u, ++k) {
            const int value = line[1 + k / 6] - 63;
            if ((value >> (5 - k % 6)) & 1)
                edges.emplace_back(u, w);
        }
    for (; k < chars * 6; ++k)
        if (((line[1 + k / 6] - 63) >> (5 - k % 6)) & 1)
            throw parse_error("nonzero graph6 padding bits");
    return Graph::from_edge_list(n, edges);
}

auto write_graph6(const Graph & g) -> std::string
{
    const int n = g.order();
    if (n > max_graph6_order)
        throw IsolationError(ErrorCode::order_too_large, "graph6 output supports orders up to 62");
    std::string out(1, static_cast<char>(63 + n));
    int value = 0, used = 0;
    for (int w = 1; w < n; ++w)
        for (int u = 0; u < w; ++u) {
            value = (value << 1) | (g.adjacent(u, w) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + value));
                value = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>(63 + (value << (6 - used))));
    return out;
}

auto parse_graph6(std::string_view text) -> std::vector<Graph>
{
    std::vector<Graph> graphs;
    std::istringstream in{std::string(text)};
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        while (! line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        std::string_view body(line);
        body.remove_prefix(start);
        if (first && body.substr(0, 10) == ">>graph6<<")
            body.remove_prefix(10);
        first = false;
        if (body.empty() || body.front() == '#')
            continue;
        graphs.push_back(parse_graph6_line(body));
    }
    return graphs;
}

auto detect_format(std::string_view text) -> GraphFormat
{
    const std::string cleaned = strip_comments(text);
    for (char ch : cleaned) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ? GraphFormat::edge_list : GraphFormat::graph6;
    }
    return GraphFormat::edge_list;
}

auto parse_graphs(std::string_view text) -> std::vector<Graph>
{
    return detect_format(text) == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

auto read_graph_file(const std::string & path) -> std::vector<Graph>
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    else {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw parse_error("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_graphs(text);
}

void write_text_file(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw IsolationError(ErrorCode::parse_error, "cannot write '" + path + "'");
    out << text;
}

} // namespace isolation::harness
