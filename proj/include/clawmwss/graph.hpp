#pragma once

/**
 * Immutable simple undirected graph with constant-expected-time adjacency
 * queries, node sets with constant-time membership, and the per-solve
 * adjacency-query counter that the complexity benchmarks read.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#ifndef CLAWMWSS_CHECK_PRECONDITIONS
#ifdef NDEBUG
#define CLAWMWSS_CHECK_PRECONDITIONS 0
#else
#define CLAWMWSS_CHECK_PRECONDITIONS 1
#endif
#endif

namespace clawmwss {

using NodeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr NodeId no_node = static_cast<NodeId>(-1);

/// Per-node weights; length equals the node count of the companion graph.
using NodeWeights = std::vector<Weight>;

struct NodePair
{
    NodeId first;
    NodeId second;

    friend auto operator==(const NodePair &, const NodePair &) -> bool = default;
};

class GraphError : public std::invalid_argument
{
public:
    GraphError(const std::string & what, NodePair edge) :
        std::invalid_argument(what), _edge(edge)
    {
    }

    auto edge() const -> NodePair { return _edge; }

private:
    NodePair _edge;
};

/// Raised when a caller-guaranteed precondition is found violated.
class PreconditionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Raised when a set required to be stable contains an edge.
class NotStableError : public std::invalid_argument
{
public:
    explicit NotStableError(NodePair edge) :
        std::invalid_argument("set is not stable: edge (" + std::to_string(edge.first) + ", "
                              + std::to_string(edge.second) + ")"),
        _edge(edge)
    {
    }

    auto edge() const -> NodePair { return _edge; }

private:
    NodePair _edge;
};

/**
 * Sorted set of distinct node ids drawn from a fixed universe 0..universe-1,
 * with a membership bitmap for constant-time contains().
 */
class NodeSet
{
public:
    NodeSet() = default;

    explicit NodeSet(NodeId universe) : _member(universe, false) {}

    NodeSet(NodeId universe, std::vector<NodeId> ids) : _member(universe, false)
    {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (auto v : ids) {
            if (v >= universe)
                throw std::out_of_range("node id " + std::to_string(v) + " outside universe of "
                                        + std::to_string(universe));
            _member[v] = true;
        }
        _ids = std::move(ids);
    }

    static auto all(NodeId universe) -> NodeSet
    {
        NodeSet s(universe);
        s._ids.reserve(universe);
        for (NodeId v = 0; v < universe; ++v)
            s._ids.push_back(v);
        s._member.assign(universe, true);
        return s;
    }

    auto insert(NodeId v) -> void
    {
        if (v >= universe())
            throw std::out_of_range("node id " + std::to_string(v) + " outside universe");
        if (_member[v])
            return;
        _member[v] = true;
        if (_ids.empty() || _ids.back() < v)
            _ids.push_back(v);
        else
            _ids.insert(std::lower_bound(_ids.begin(), _ids.end(), v), v);
    }

    auto contains(NodeId v) const -> bool { return v < _member.size() && _member[v]; }

    auto size() const -> std::size_t { return _ids.size(); }
    auto empty() const -> bool { return _ids.empty(); }
    auto universe() const -> NodeId { return static_cast<NodeId>(_member.size()); }

    auto ids() const -> std::span<const NodeId> { return _ids; }
    auto operator[](std::size_t i) const -> NodeId { return _ids[i]; }
    auto begin() const { return _ids.begin(); }
    auto end() const { return _ids.end(); }

    friend auto operator==(const NodeSet & a, const NodeSet & b) -> bool { return a._ids == b._ids; }

private:
    std::vector<NodeId> _ids;
    std::vector<bool> _member;
};

class Graph
{
public:
    Graph() = default;

    auto size() const -> NodeId { return static_cast<NodeId>(_adjacency.size()); }
    auto edge_count() const -> std::size_t { return _edge_count; }
    auto degree(NodeId v) const -> std::size_t { return _adjacency[v].size(); }
    auto neighbours(NodeId v) const -> std::span<const NodeId> { return _adjacency[v]; }

    auto max_degree() const -> std::size_t
    {
        std::size_t best = 0;
        for (auto & row : _adjacency)
            best = std::max(best, row.size());
        return best;
    }

    /// Uncounted membership test. Solver code goes through SolveContext::adjacent.
    auto has_edge(NodeId u, NodeId v) const -> bool
    {
        if (u == v)
            return false;
        if (! _dense.empty())
            return _dense[std::size_t(u) * size() + v];
        return _sparse.contains(key(u, v));
    }

    /// Edges as (u, v) with u < v, in ascending order.
    auto edges() const -> std::vector<NodePair>
    {
        std::vector<NodePair> result;
        result.reserve(_edge_count);
        for (NodeId u = 0; u < size(); ++u)
            for (auto v : _adjacency[u])
                if (u < v)
                    result.push_back({ u, v });
        return result;
    }

    friend auto build_graph(NodeId n, std::span<const NodePair> edges) -> Graph;

private:
    // n² bits up to this many nodes, a hash set of packed edge keys beyond.
    static constexpr NodeId dense_limit = 8192;

    static auto key(NodeId u, NodeId v) -> std::uint64_t
    {
        if (u > v)
            std::swap(u, v);
        return (std::uint64_t(u) << 32) | v;
    }

    std::vector<std::vector<NodeId>> _adjacency;
    std::vector<bool> _dense;
    std::unordered_set<std::uint64_t> _sparse;
    std::size_t _edge_count = 0;
};

/**
 * Builds a simple graph on nodes 0..n-1. Duplicate edges are collapsed;
 * out-of-range ids and self-loops raise GraphError naming the edge.
 */
inline auto build_graph(NodeId n, std::span<const NodePair> edges) -> Graph
{
    Graph g;
    g._adjacency.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v)
                                 + ") has an endpoint outside 0.." + std::to_string(n) + "-1",
                             { u, v });
        if (u == v)
            throw GraphError("self-loop on node " + std::to_string(u), { u, v });
        g._adjacency[u].push_back(v);
        g._adjacency[v].push_back(u);
    }

    std::size_t total = 0;
    for (auto & row : g._adjacency) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        row.shrink_to_fit();
        total += row.size();
    }
    g._edge_count = total / 2;

    if (n <= Graph::dense_limit) {
        g._dense.assign(std::size_t(n) * n, false);
        for (NodeId u = 0; u < n; ++u)
            for (auto v : g._adjacency[u])
                g._dense[std::size_t(u) * n + v] = true;
    }
    else {
        g._sparse.reserve(g._edge_count);
        for (NodeId u = 0; u < n; ++u)
            for (auto v : g._adjacency[u])
                if (u < v)
                    g._sparse.insert(Graph::key(u, v));
    }
    return g;
}

inline auto build_graph(NodeId n, std::initializer_list<NodePair> edges) -> Graph
{
    return build_graph(n, std::span<const NodePair>(edges.begin(), edges.size()));
}

inline auto build_graph(NodeId n, const std::vector<NodePair> & edges) -> Graph
{
    return build_graph(n, std::span<const NodePair>(edges));
}

/**
 * One solve's view of a graph. Every adjacency test made by the algorithms
 * goes through adjacent(), which bumps the query counter; the counter is the
 * machine-independent cost measure used by the scaling benchmark.
 */
class SolveContext
{
public:
    using QueryHook = std::function<void(NodeId, NodeId)>;

    explicit SolveContext(const Graph & g) : _graph(&g) {}

    auto graph() const -> const Graph & { return *_graph; }

    auto adjacent(NodeId u, NodeId v) -> bool
    {
        if (u >= _graph->size() || v >= _graph->size())
            throw std::out_of_range("adjacency query on node outside the graph");
        if (u == v)
            throw std::invalid_argument("adjacency query on identical nodes");
        ++_queries;
        if (_hook)
            _hook(u, v);
        return _graph->has_edge(u, v);
    }

    auto queries() const -> std::uint64_t { return _queries; }
    auto reset_queries() -> void { _queries = 0; }

    /// Observer called on every counted query (test instrumentation).
    auto set_query_hook(QueryHook hook) -> void { _hook = std::move(hook); }

private:
    const Graph * _graph;
    std::uint64_t _queries = 0;
    QueryHook _hook;
};

struct CliqueVerdict
{
    std::optional<NodePair> non_adjacent;

    auto is_clique() const -> bool { return ! non_adjacent; }
};

/// Certifies K pairwise adjacent or returns the lexicographically first non-adjacent pair.
inline auto is_clique_or_witness(SolveContext & ctx, const NodeSet & k) -> CliqueVerdict
{
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (! ctx.adjacent(k[i], k[j]))
                return { NodePair{ k[i], k[j] } };
    return {};
}

struct NullVerdict
{
    std::optional<NodePair> crossing;

    auto is_null() const -> bool { return ! crossing; }
};

/// Whether no edge joins A and B. A and B must be disjoint.
inline auto is_null_to(SolveContext & ctx, const NodeSet & a, const NodeSet & b) -> NullVerdict
{
    for (auto v : a)
        if (b.contains(v))
            throw std::invalid_argument("is_null_to: sets overlap in node " + std::to_string(v));
    for (auto x : a)
        for (auto y : b)
            if (ctx.adjacent(x, y))
                return { NodePair{ x, y } };
    return {};
}

struct InducedSubgraph
{
    Graph graph;
    std::vector<NodeId> old_to_new; // no_node for dropped nodes
    std::vector<NodeId> new_to_old;
};

inline auto induced_subgraph(const Graph & g, const NodeSet & keep) -> InducedSubgraph
{
    InducedSubgraph result;
    result.old_to_new.assign(g.size(), no_node);
    for (auto v : keep) {
        if (v >= g.size())
            throw std::out_of_range("induced_subgraph: node outside the graph");
        result.old_to_new[v] = static_cast<NodeId>(result.new_to_old.size());
        result.new_to_old.push_back(v);
    }

    std::vector<NodePair> edges;
    for (auto u : keep)
        for (auto v : g.neighbours(u))
            if (u < v && result.old_to_new[v] != no_node)
                edges.push_back({ result.old_to_new[u], result.old_to_new[v] });

    result.graph = build_graph(static_cast<NodeId>(result.new_to_old.size()), edges);
    return result;
}

/// First edge inside the given nodes, if any. Uncounted; used for output checks.
inline auto find_edge_within(const Graph & g, std::span<const NodeId> nodes) -> std::optional<NodePair>
{
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j] || g.has_edge(nodes[i], nodes[j]))
                return NodePair{ std::min(nodes[i], nodes[j]), std::max(nodes[i], nodes[j]) };
    return std::nullopt;
}

inline auto is_stable(const Graph & g, std::span<const NodeId> nodes) -> bool
{
    return ! find_edge_within(g, nodes);
}

inline auto total_weight(std::span<const Weight> w, std::span<const NodeId> nodes) -> Weight
{
    Weight sum = 0;
    for (auto v : nodes)
        sum += w[v];
    return sum;
}

} // namespace clawmwss
