#pragma once

/**
 * Seeded generators of claw-free instances whose independence number is
 * known by construction, plus solver-independent certification.
 *
 * Randomness comes only from SplitMix64 (Steele, Lea and Flood; increment
 * 0x9e3779b97f4a7c15, mix multipliers 0xbf58476d1ce4e5b9 and
 * 0x94d049bb133111eb, shifts 30/27/31), sampled with rejection for bounded
 * integers, so output is bit-identical across platforms for a given seed.
 */

#include <clawmwss/graph.hpp>
#include <clawmwss/oracle.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace clawmwss {

class SplitMix64
{
public:
    explicit SplitMix64(std::uint64_t seed) : _state(seed) {}

    auto next() -> std::uint64_t
    {
        std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0.
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            auto r = next();
            if (r >= threshold)
                return r % bound;
        }
    }

    /// Uniform in [lo, hi].
    auto between(std::int64_t lo, std::int64_t hi) -> std::int64_t
    {
        if (lo > hi)
            throw std::invalid_argument("empty integer range");
        auto span = std::uint64_t(hi) - std::uint64_t(lo);
        if (span == std::numeric_limits<std::uint64_t>::max())
            return static_cast<std::int64_t>(next());
        return static_cast<std::int64_t>(std::uint64_t(lo) + below(span + 1));
    }

    auto chance(double p) -> bool { return double(next() >> 11) * 0x1.0p-53 < p; }

    template <typename T>
    auto shuffle(std::vector<T> & items) -> void
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::uint64_t _state;
};

enum class GenKind
{
    line_graph_cover3,
    complement_triangle_free,
    cycle
};

inline auto to_string(GenKind kind) -> std::string
{
    switch (kind) {
    case GenKind::line_graph_cover3: return "line_graph_cover3";
    case GenKind::complement_triangle_free: return "complement_triangle_free";
    case GenKind::cycle: return "cycle";
    }
    return "?";
}

inline auto parse_gen_kind(std::string_view text) -> std::optional<GenKind>
{
    for (auto k : { GenKind::line_graph_cover3, GenKind::complement_triangle_free, GenKind::cycle })
        if (text == to_string(k))
            return k;
    return std::nullopt;
}

/**
 * line_graph_cover3: `nodes` edges of a base graph H whose edges all touch
 *   one of three centers, drawn among center-leaf pairs over a pool of
 *   `leaves` leaves (0 picks max(3, nodes / 2)) and the center-center pairs;
 *   three disjoint center-leaf edges are always present.
 * complement_triangle_free: complement of a random bipartite graph on
 *   `nodes` nodes with cross-edge probability `density`.
 * cycle: the cycle on `nodes` nodes.
 */
struct GenSpec
{
    GenKind kind = GenKind::line_graph_cover3;
    std::size_t nodes = 3;
    std::size_t leaves = 0;
    double density = 0.5;
    Weight weight_lo = 1;
    Weight weight_hi = 1;
    std::uint64_t seed = 0;
};

/// What the construction guarantees, checkable without the solver.
struct Certificate
{
    GenKind kind;
    std::size_t alpha = 0;     // exact, or an upper bound when alpha_is_bound
    bool alpha_is_bound = false;
    std::vector<NodePair> base_edges; // line graphs: H edge behind each node, centers 0..2
    NodeId base_nodes = 0;

    /// Comment lines ("cert ...") for the instance file.
    auto lines(std::uint64_t seed) const -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::ostringstream head;
        head << "cert kind=" << to_string(kind) << " seed=" << seed << (alpha_is_bound ? " alpha<=" : " alpha=") << alpha;
        out.push_back(head.str());
        if (kind == GenKind::line_graph_cover3) {
            out.push_back("cert base nodes=" + std::to_string(base_nodes) + " centers=1,2,3 matching=3");
            for (std::size_t i = 0; i < base_edges.size(); ++i)
                out.push_back("cert base-edge " + std::to_string(i + 1) + " " + std::to_string(base_edges[i].first + 1)
                              + " " + std::to_string(base_edges[i].second + 1));
        }
        return out;
    }
};

struct GeneratedInstance
{
    Graph graph;
    NodeWeights weights;
    Certificate certificate;
};

class GenError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Line graph: one node per edge of H, adjacent when the edges share an endpoint.
inline auto line_graph(NodeId base_nodes, const std::vector<NodePair> & base_edges) -> Graph
{
    std::vector<std::vector<NodeId>> incident(base_nodes);
    for (NodeId e = 0; e < base_edges.size(); ++e) {
        incident[base_edges[e].first].push_back(e);
        incident[base_edges[e].second].push_back(e);
    }
    std::vector<NodePair> edges;
    for (auto & around : incident)
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j)
                edges.push_back({ around[i], around[j] });
    return build_graph(static_cast<NodeId>(base_edges.size()), edges);
}

namespace detail {

inline auto generate_line_graph_cover3(const GenSpec & spec, SplitMix64 & rng) -> GeneratedInstance
{
    const std::size_t leaves = spec.leaves ? spec.leaves : std::max<std::size_t>(3, spec.nodes / 2);
    if (spec.nodes < 3)
        throw GenError("line_graph_cover3 needs at least 3 nodes (three disjoint base edges)");
    if (leaves < 3)
        throw GenError("line_graph_cover3 needs at least 3 leaves");
    if (spec.nodes > 3 * leaves + 3)
        throw GenError("line_graph_cover3: " + std::to_string(spec.nodes) + " nodes exceed the "
                       + std::to_string(3 * leaves + 3) + " possible base edges");

    // Centers are base nodes 0, 1, 2; leaves follow.
    std::vector<NodeId> pool(leaves);
    for (std::size_t i = 0; i < leaves; ++i)
        pool[i] = static_cast<NodeId>(3 + i);
    for (std::size_t i = 0; i < 3; ++i)
        std::swap(pool[i], pool[i + rng.below(leaves - i)]);

    std::vector<NodePair> base;
    std::vector<NodePair> candidates;
    for (NodeId c = 0; c < 3; ++c)
        base.push_back({ c, pool[c] });
    for (NodeId c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < leaves; ++i) {
            auto leaf = static_cast<NodeId>(3 + i);
            if (leaf != pool[c])
                candidates.push_back({ c, leaf });
        }
    candidates.push_back({ 0, 1 });
    candidates.push_back({ 0, 2 });
    candidates.push_back({ 1, 2 });

    const auto extra = spec.nodes - 3;
    for (std::size_t i = 0; i < extra; ++i) {
        std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
        base.push_back(candidates[i]);
    }
    rng.shuffle(base);

    GeneratedInstance out;
    out.certificate.kind = GenKind::line_graph_cover3;
    out.certificate.alpha = 3;
    out.certificate.base_nodes = static_cast<NodeId>(3 + leaves);
    out.certificate.base_edges = base;
    out.graph = line_graph(out.certificate.base_nodes, base);
    return out;
}

inline auto generate_complement_triangle_free(const GenSpec & spec, SplitMix64 & rng) -> GeneratedInstance
{
    if (spec.nodes < 1)
        throw GenError("complement_triangle_free needs at least 1 node");
    if (! (spec.density >= 0.0 && spec.density <= 1.0))
        throw GenError("density must lie in [0, 1]");

    const auto n = static_cast<NodeId>(spec.nodes);
    std::vector<bool> side(n);
    for (NodeId v = 0; v < n; ++v)
        side[v] = rng.chance(0.5);

    std::vector<NodePair> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) {
            bool bipartite_edge = side[u] != side[v] && rng.chance(spec.density);
            if (! bipartite_edge)
                edges.push_back({ u, v });
        }

    GeneratedInstance out;
    out.certificate.kind = GenKind::complement_triangle_free;
    out.certificate.alpha = 2;
    out.certificate.alpha_is_bound = true;
    out.graph = build_graph(n, edges);
    return out;
}

inline auto generate_cycle(const GenSpec & spec) -> GeneratedInstance
{
    if (spec.nodes < 3)
        throw GenError("cycle needs at least 3 nodes");
    const auto n = static_cast<NodeId>(spec.nodes);
    std::vector<NodePair> edges;
    for (NodeId v = 0; v < n; ++v)
        edges.push_back({ v, (v + 1) % n });

    GeneratedInstance out;
    out.certificate.kind = GenKind::cycle;
    out.certificate.alpha = n / 2;
    out.graph = build_graph(n, edges);
    return out;
}

} // namespace detail

inline auto generate(const GenSpec & spec) -> GeneratedInstance
{
    if (spec.weight_lo > spec.weight_hi)
        throw GenError("weight range is empty");
    SplitMix64 rng(spec.seed);

    GeneratedInstance out;
    switch (spec.kind) {
    case GenKind::line_graph_cover3: out = detail::generate_line_graph_cover3(spec, rng); break;
    case GenKind::complement_triangle_free: out = detail::generate_complement_triangle_free(spec, rng); break;
    case GenKind::cycle: out = detail::generate_cycle(spec); break;
    }

    out.weights.resize(out.graph.size());
    for (auto & w : out.weights)
        w = rng.between(spec.weight_lo, spec.weight_hi);
    return out;
}

struct CertifyResult
{
    bool ok = true;
    std::string message;
};

/**
 * Re-checks an instance against its certificate with the brute-force
 * oracles: no claw, and min(alpha, 4) as promised. Line graphs are also
 * rebuilt from their base edges, whose three centers must cover every edge
 * and which must hold three disjoint edges (so the matching number is 3).
 */
inline auto certify(const Graph & g, const Certificate & cert) -> CertifyResult
{
    if (auto claw = brute_is_clawfree(g))
        return { false, "claw centred at node " + std::to_string(claw->center + 1) };

    auto alpha = brute_alpha_min4(g);
    if (cert.alpha_is_bound ? alpha > cert.alpha : alpha != std::min<std::size_t>(cert.alpha, 4))
        return { false, "independence number " + std::to_string(alpha) + " contradicts certificate" };

    if (cert.kind == GenKind::line_graph_cover3) {
        for (auto [a, b] : cert.base_edges)
            if (a >= 3 && b >= 3)
                return { false, "base edge avoids all three centers" };
        bool disjoint_triple = false;
        const auto & e = cert.base_edges;
        for (std::size_t i = 0; i < e.size() && ! disjoint_triple; ++i)
            for (std::size_t j = i + 1; j < e.size() && ! disjoint_triple; ++j)
                for (std::size_t k = j + 1; k < e.size() && ! disjoint_triple; ++k) {
                    std::array<NodeId, 6> ends{ e[i].first, e[i].second, e[j].first, e[j].second, e[k].first, e[k].second };
                    std::sort(ends.begin(), ends.end());
                    disjoint_triple = std::adjacent_find(ends.begin(), ends.end()) == ends.end();
                }
        if (! disjoint_triple)
            return { false, "base graph has no three disjoint edges" };
        if (line_graph(cert.base_nodes, cert.base_edges).edges() != g.edges())
            return { false, "graph is not the line graph of the certified base graph" };
    }
    return {};
}

/**
 * Benchmark family member: a line_graph_cover3 instance whose edge count is
 * the first to reach `target_edges`, found by bisection on the number of
 * base edges (leaf pool half that size).
 */
inline auto scaling_instance(std::size_t target_edges, std::uint64_t seed) -> GeneratedInstance
{
    auto build = [&](std::size_t base_edges) {
        GenSpec spec;
        spec.kind = GenKind::line_graph_cover3;
        spec.nodes = base_edges;
        spec.leaves = std::max<std::size_t>(3, base_edges / 2);
        spec.weight_lo = 1;
        spec.weight_hi = 100;
        spec.seed = seed;
        return generate(spec);
    };

    std::size_t lo = 3;
    std::size_t hi = 3;
    while (build(hi).graph.edge_count() < target_edges)
        hi *= 2;
    while (lo < hi) {
        auto mid = lo + (hi - lo) / 2;
        if (build(mid).graph.edge_count() >= target_edges)
            hi = mid;
        else
            lo = mid + 1;
    }
    return build(lo);
}

} // namespace clawmwss
