#pragma once

/**
 * Line-oriented instance files:
 *
 *   c <comment>          ignored (certificates travel as "c cert ..." lines)
 *   p edge <n> <m>       exactly once, first non-comment line
 *   n <v> <w>            optional node weight, 1-based v, at most once per node
 *   e <u> <v>            exactly m lines, 1-based, u != v
 *
 * Nodes without an "n" line weigh 1. Blank lines are ignored.
 */

#include <clawmwss/graph.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace clawmwss {

/// Weights beyond this magnitude are rejected so that sums of three cannot overflow.
inline constexpr Weight max_abs_weight = Weight(1) << 61;

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string & message) :
        std::runtime_error("line " + std::to_string(line) + ": " + message), _line(line)
    {
    }

    auto line() const -> std::size_t { return _line; }

private:
    std::size_t _line;
};

struct Instance
{
    Graph graph;
    NodeWeights weights;
    std::vector<std::string> comments; // text after "c ", in file order
};

namespace detail {

inline auto split_fields(std::string_view line) -> std::vector<std::string_view>
{
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

template <typename Int>
auto parse_int(std::string_view text, std::size_t line, const char * what) -> Int
{
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(text) + "'");
    return value;
}

} // namespace detail

inline auto read_instance(std::istream & in) -> Instance
{
    using detail::parse_int;

    Instance result;
    bool have_header = false;
    NodeId n = 0;
    std::size_t m = 0;
    std::vector<NodePair> edges;
    std::vector<bool> weight_seen;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto fields = detail::split_fields(raw);
        if (fields.empty())
            continue;

        if (fields[0] == "c") {
            auto pos = raw.find('c');
            auto rest = std::string_view(raw).substr(pos + 1);
            while (! rest.empty() && rest.front() == ' ')
                rest.remove_prefix(1);
            while (! rest.empty() && (rest.back() == '\r' || rest.back() == ' '))
                rest.remove_suffix(1);
            result.comments.emplace_back(rest);
            continue;
        }

        if (fields[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate 'p' header");
            if (fields.size() != 4 || fields[1] != "edge")
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = parse_int<NodeId>(fields[2], line_no, "node count");
            m = parse_int<std::size_t>(fields[3], line_no, "edge count");
            if (n == no_node)
                throw ParseError(line_no, "node count too large");
            have_header = true;
            result.weights.assign(n, 1);
            weight_seen.assign(n, false);
            edges.reserve(m);
            continue;
        }

        if (! have_header)
            throw ParseError(line_no, "expected 'p edge <n> <m>' before any other line");

        if (fields[0] == "n") {
            if (fields.size() != 3)
                throw ParseError(line_no, "malformed weight line, expected 'n <v> <w>'");
            auto v = parse_int<NodeId>(fields[1], line_no, "node id");
            auto w = parse_int<Weight>(fields[2], line_no, "weight");
            if (v < 1 || v > n)
                throw ParseError(line_no, "node id " + std::to_string(v) + " outside 1.." + std::to_string(n));
            if (w > max_abs_weight || w < -max_abs_weight)
                throw ParseError(line_no, "weight magnitude exceeds 2^61");
            if (weight_seen[v - 1])
                throw ParseError(line_no, "second weight line for node " + std::to_string(v));
            weight_seen[v - 1] = true;
            result.weights[v - 1] = w;
        }
        else if (fields[0] == "e") {
            if (fields.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            auto u = parse_int<NodeId>(fields[1], line_no, "node id");
            auto v = parse_int<NodeId>(fields[2], line_no, "node id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "edge endpoint outside 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(line_no, "self-loop on node " + std::to_string(u));
            if (edges.size() == m)
                throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
            edges.push_back({ u - 1, v - 1 });
        }
        else
            throw ParseError(line_no, "unknown line type '" + std::string(fields[0]) + "'");
    }

    if (! have_header)
        throw ParseError(line_no, "missing 'p edge <n> <m>' header");
    if (edges.size() != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()));

    result.graph = build_graph(n, edges);
    return result;
}

inline auto read_instance(std::string_view text) -> Instance
{
    std::istringstream in{ std::string(text) };
    return read_instance(in);
}

/// Writes comments first, then the header, every node weight and every edge (ascending).
inline auto write_instance(std::ostream & out, const Graph & g, std::span<const Weight> w,
                           std::span<const std::string> comments = {}) -> void
{
    if (w.size() != g.size())
        throw std::invalid_argument("weight vector length differs from node count");
    for (auto & c : comments)
        out << "c " << c << '\n';
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (NodeId v = 0; v < g.size(); ++v)
        out << "n " << v + 1 << ' ' << w[v] << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline auto write_instance(const Graph & g, std::span<const Weight> w,
                           std::span<const std::string> comments = {}) -> std::string
{
    std::ostringstream out;
    write_instance(out, g, w, comments);
    return out.str();
}

} // namespace clawmwss
