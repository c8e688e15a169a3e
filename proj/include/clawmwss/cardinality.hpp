#pragma once

/**
 * Unweighted machinery: in O(m) adjacency queries, either build a stable set
 * of size min(alpha(G), 4) on a claw-free graph or certify alpha exactly.
 *
 * All scans run in ascending node id, so every output is reproducible.
 */

#include <clawmwss/claw.hpp>
#include <clawmwss/graph.hpp>

#include <array>
#include <optional>
#include <vector>

namespace clawmwss {

using StableTriple = std::array<NodeId, 3>;
using StableQuad = std::array<NodeId, 4>;

enum class AlphaStatus
{
    exact,
    at_least_four
};

struct StableSetReport
{
    std::vector<NodeId> nodes; // ascending
    AlphaStatus status = AlphaStatus::exact;

    /// alpha(G) when exact, otherwise 4.
    auto alpha_lower_bound() const -> std::size_t { return nodes.size(); }
    auto is_exact() const -> bool { return status == AlphaStatus::exact; }
};

namespace detail {

inline auto require_disjoint(std::initializer_list<const NodeSet *> sets, const char * where) -> void
{
    std::vector<const NodeSet *> list(sets);
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            for (auto v : *list[i])
                if (list[j]->contains(v))
                    throw PreconditionError(std::string(where) + ": sets are not disjoint");
}

inline auto require_clique(const Graph & g, const NodeSet & k, const char * where) -> void
{
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (! g.has_edge(k[i], k[j]))
                throw PreconditionError(std::string(where) + ": Z is not a clique");
}

inline auto require_null(const Graph & g, const NodeSet & a, const NodeSet & b, const char * where,
                         const char * clause) -> void
{
    for (auto x : a)
        for (auto y : b)
            if (g.has_edge(x, y))
                throw PreconditionError(std::string(where) + ": " + clause);
}

/// Number of neighbours inside z for each node of `probes`, in probe order.
inline auto clique_hits(SolveContext & ctx, const NodeSet & probes, const NodeSet & z) -> std::vector<std::size_t>
{
    std::vector<std::size_t> hits(probes.size(), 0);
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (auto c : z)
            if (ctx.adjacent(probes[i], c))
                ++hits[i];
    return hits;
}

/// Smallest z non-adjacent to both a and b.
inline auto common_non_neighbour(SolveContext & ctx, const NodeSet & z, NodeId a, NodeId b) -> std::optional<NodeId>
{
    for (auto c : z)
        if (! ctx.adjacent(a, c) && ! ctx.adjacent(b, c))
            return c;
    return std::nullopt;
}

inline auto sorted_triple(StableTriple t) -> StableTriple
{
    std::sort(t.begin(), t.end());
    return t;
}

inline auto sorted_quad(StableQuad q) -> StableQuad
{
    std::sort(q.begin(), q.end());
    return q;
}

} // namespace detail

/// First non-adjacent pair (v, smallest non-neighbour of v), or none when G is complete.
inline auto stable_pair(const Graph & g) -> std::optional<NodePair>
{
    const NodeId n = g.size();
    for (NodeId v = 0; v < n; ++v) {
        if (g.degree(v) + 1 >= n)
            continue;
        NodeId candidate = 0;
        for (auto u : g.neighbours(v)) {
            if (candidate == v)
                ++candidate;
            if (u != candidate)
                break;
            ++candidate;
        }
        if (candidate == v)
            ++candidate;
        return NodePair{ v, candidate };
    }
    return std::nullopt;
}

/**
 * A stable triple (x, y, z) with one node from each set, or none. Z must be
 * a clique and the graph claw-free on X, Y, Z: then a non-adjacent pair (x, y)
 * extends into Z exactly when h(x) + h(y) < |Z|, where h counts neighbours in Z.
 */
inline auto three_sets_stable(SolveContext & ctx, const NodeSet & x, const NodeSet & y, const NodeSet & z)
    -> std::optional<StableTriple>
{
#if CLAWMWSS_CHECK_PRECONDITIONS
    detail::require_disjoint({ &x, &y, &z }, "three_sets_stable");
    detail::require_clique(ctx.graph(), z, "three_sets_stable");
#endif
    if (x.empty() || y.empty() || z.empty())
        return std::nullopt;

    auto hx = detail::clique_hits(ctx, x, z);
    auto hy = detail::clique_hits(ctx, y, z);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (ctx.adjacent(x[i], y[j]) || hx[i] + hy[j] >= z.size())
                continue;
            // h(x) + h(y) < |Z| leaves some node of Z uncovered.
            return StableTriple{ x[i], y[j], *detail::common_non_neighbour(ctx, z, x[i], y[j]) };
        }
    return std::nullopt;
}

/**
 * A stable 4-set (x, y, z, w) with one node from each set, or none. Requires
 * Z a clique, W non-empty and null to Z, X null to Y. For each w, only the
 * non-neighbours of w in X and Y with the fewest neighbours in Z matter.
 */
inline auto four_sets_stable(SolveContext & ctx, const NodeSet & x, const NodeSet & y, const NodeSet & z,
                             const NodeSet & w) -> std::optional<StableQuad>
{
#if CLAWMWSS_CHECK_PRECONDITIONS
    const auto & g = ctx.graph();
    detail::require_disjoint({ &x, &y, &z, &w }, "four_sets_stable");
    detail::require_clique(g, z, "four_sets_stable");
    detail::require_null(g, w, z, "four_sets_stable", "W is not null to Z");
    detail::require_null(g, x, y, "four_sets_stable", "X is not null to Y");
    if (w.empty())
        throw PreconditionError("four_sets_stable: W is empty");
#endif
    if (x.empty() || y.empty() || z.empty() || w.empty())
        return std::nullopt;

    auto hx = detail::clique_hits(ctx, x, z);
    auto hy = detail::clique_hits(ctx, y, z);

    auto least_hit = [&](const NodeSet & side, const std::vector<std::size_t> & h, NodeId avoid) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < side.size(); ++i)
            if (! ctx.adjacent(side[i], avoid) && (! best || h[i] < h[*best]))
                best = i;
        return best;
    };

    for (auto wbar : w) {
        auto bx = least_hit(x, hx, wbar);
        auto by = least_hit(y, hy, wbar);
        if (! bx || ! by || hx[*bx] + hy[*by] >= z.size())
            continue;
        return StableQuad{ x[*bx], y[*by], *detail::common_non_neighbour(ctx, z, x[*bx], y[*by]), wbar };
    }
    return std::nullopt;
}

/**
 * Grows the stable pair {s, t} to a stable triple (ascending), or returns none
 * as the certificate that alpha(G) = 2.
 */
inline auto extend_to_three(SolveContext & ctx, NodePair pair) -> std::optional<StableTriple>
{
    auto [s, t] = pair;
    auto cls = classify(ctx, NodeSet(ctx.graph().size(), { s, t }));
    // Positions follow ascending id.
    s = cls.t(0);
    t = cls.t(1);

    if (! cls.super_free().empty())
        return detail::sorted_triple({ s, t, cls.super_free()[0] });
    if (auto split = is_clique_or_witness(ctx, cls.private_to(0)); ! split.is_clique())
        return detail::sorted_triple({ split.non_adjacent->first, split.non_adjacent->second, t });
    if (auto split = is_clique_or_witness(ctx, cls.private_to(1)); ! split.is_clique())
        return detail::sorted_triple({ split.non_adjacent->first, split.non_adjacent->second, s });
    if (auto triple = three_sets_stable(ctx, cls.shared_by(0, 1), cls.private_to(0), cls.private_to(1)))
        return detail::sorted_triple(*triple);
    return std::nullopt;
}

/**
 * Grows the stable triple T to a stable 4-set (ascending), or returns none as
 * the certificate that alpha(G) = 3. Once the super-free set is empty and all
 * private sets are cliques, a larger stable set must differ from T along a
 * 5-node path through two T nodes or a 7-node path through all three.
 */
inline auto extend_to_four(SolveContext & ctx, const StableTriple & t) -> std::optional<StableQuad>
{
    auto cls = classify(ctx, NodeSet(ctx.graph().size(), { t[0], t[1], t[2] }));

    if (! cls.super_free().empty())
        return detail::sorted_quad({ cls.t(0), cls.t(1), cls.t(2), cls.super_free()[0] });

    for (std::size_t i = 0; i < 3; ++i) {
        auto split = is_clique_or_witness(ctx, cls.private_to(i));
        if (split.is_clique())
            continue;
        std::array<NodeId, 2> rest{};
        for (std::size_t j = 0, k = 0; j < 3; ++j)
            if (j != i)
                rest[k++] = cls.t(j);
        return detail::sorted_quad({ split.non_adjacent->first, split.non_adjacent->second, rest[0], rest[1] });
    }

    // 5-node paths (x, a, y, b, z): x private to a, y shared by a and b, z private to b.
    static constexpr std::array<std::array<std::size_t, 3>, 3> pairs{ { { 0, 1, 2 }, { 0, 2, 1 }, { 1, 2, 0 } } };
    for (auto [a, b, other] : pairs)
        if (auto triple = three_sets_stable(ctx, cls.private_to(a), cls.shared_by(a, b), cls.private_to(b)))
            return detail::sorted_quad({ (*triple)[0], (*triple)[1], (*triple)[2], cls.t(other) });

    // 7-node paths (x, a, w, b, y, c, z) with b in the middle.
    static constexpr std::array<std::array<std::size_t, 3>, 3> middles{ { { 0, 1, 2 }, { 1, 0, 2 }, { 2, 0, 1 } } };
    for (auto [b, a, c] : middles) {
        const auto & w = cls.shared_by(a, b);
        if (w.empty())
            continue;
        if (auto quad = four_sets_stable(ctx, cls.private_to(a), cls.shared_by(b, c), cls.private_to(c), w))
            return detail::sorted_quad(*quad);
    }
    return std::nullopt;
}

/**
 * A stable set of size min(alpha(G), 4) with the exact/at-least-four verdict.
 * G must be claw-free; a claw met on the way is raised as ClawWitness.
 */
inline auto stable_set_min_alpha4(SolveContext & ctx) -> StableSetReport
{
    const auto & g = ctx.graph();
    StableSetReport report;

    if (g.size() == 0)
        return report;

    auto finish = [&](auto nodes, AlphaStatus status) {
        report.nodes.assign(nodes.begin(), nodes.end());
        report.status = status;
        if (! is_stable(g, report.nodes))
            throw ClawWitness(require_claw(g, "stable_set_min_alpha4"));
        return report;
    };

    auto pair = stable_pair(g);
    if (! pair)
        return finish(std::array<NodeId, 1>{ 0 }, AlphaStatus::exact);

    auto triple = extend_to_three(ctx, *pair);
    if (! triple)
        return finish(std::array<NodeId, 2>{ pair->first, pair->second }, AlphaStatus::exact);

    if (auto quad = extend_to_four(ctx, *triple))
        return finish(*quad, AlphaStatus::at_least_four);
    return finish(*triple, AlphaStatus::exact);
}

inline auto stable_set_min_alpha4(const Graph & g) -> StableSetReport
{
    SolveContext ctx(g);
    return stable_set_min_alpha4(ctx);
}

} // namespace clawmwss
