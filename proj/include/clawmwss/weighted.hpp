#pragma once

/**
 * Maximum-weight stable sets on claw-free graphs with alpha(G) <= 3, in
 * O(m log n) adjacency queries.
 *
 * With T = {s, t, u} a maximum stable set, a stable triple S disjoint from T
 * differs from T along alternating paths and cycles, which leaves three
 * shapes: a single 6-node path through T, a 6-cycle through T, or a shape
 * with some T node whose partner is private to it. Each shape reduces to
 * choosing one node from each of three classification sets with the last one
 * a clique, solved by weighted_three_sets.
 */

#include <clawmwss/cardinality.hpp>
#include <clawmwss/claw.hpp>
#include <clawmwss/graph.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace clawmwss {

/// A candidate stable set: ids ascending, total weight.
struct WeightedSet
{
    std::vector<NodeId> nodes;
    Weight weight = 0;

    friend auto operator==(const WeightedSet &, const WeightedSet &) -> bool = default;
};

/// Heavier wins; among equal weights the lexicographically smaller id sequence wins.
inline auto better(const WeightedSet & a, const WeightedSet & b) -> bool
{
    if (a.weight != b.weight)
        return a.weight > b.weight;
    return std::lexicographical_compare(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end());
}

inline auto keep_better(std::optional<WeightedSet> & best, std::optional<WeightedSet> candidate) -> void
{
    if (candidate && (! best || better(*candidate, *best)))
        best = std::move(candidate);
}

inline auto make_weighted_set(std::span<const Weight> w, std::vector<NodeId> nodes) -> WeightedSet
{
    std::sort(nodes.begin(), nodes.end());
    auto weight = total_weight(w, nodes);
    return { std::move(nodes), weight };
}

/**
 * The clique Z ordered by non-increasing weight (ties by ascending id), with
 * prefix neighbour counts h(u, i) = |N(u) ∩ {z_1..z_i}| for every probe u.
 * Building the table costs |probes| * |Z| queries.
 */
class OrderedCliquePrefix
{
public:
    OrderedCliquePrefix(SolveContext & ctx, std::span<const Weight> w, const NodeSet & z,
                        std::span<const NodeId> probes) :
        _order(z.begin(), z.end())
    {
        std::stable_sort(_order.begin(), _order.end(), [&](NodeId a, NodeId b) { return w[a] > w[b]; });

        const auto p = _order.size();
        _counts.assign(probes.size() * (p + 1), 0);
        for (std::size_t r = 0; r < probes.size(); ++r) {
            auto * row = &_counts[r * (p + 1)];
            for (std::size_t i = 1; i <= p; ++i)
                row[i] = row[i - 1] + (ctx.adjacent(probes[r], _order[i - 1]) ? 1 : 0);
        }
    }

    /// p = |Z|.
    auto size() const -> std::size_t { return _order.size(); }

    /// z_i for i in 1..p.
    auto node(std::size_t i) const -> NodeId { return _order.at(i - 1); }

    /// h(probe row, i) for i in 0..p.
    auto count(std::size_t row, std::size_t i) const -> std::size_t { return _counts[row * (size() + 1) + i]; }

    /// Whether some node of the first i is non-adjacent to both probes.
    auto open(std::size_t row_a, std::size_t row_b, std::size_t i) const -> bool
    {
        return count(row_a, i) + count(row_b, i) < i;
    }

    /**
     * Smallest k with open(a, b, k), by binary search. For a non-adjacent
     * probe pair in a claw-free graph, open() is monotone in k: once a
     * common non-neighbour appears in the prefix, a common neighbour later
     * would center a claw.
     */
    auto first_open(std::size_t row_a, std::size_t row_b) const -> std::optional<std::size_t>
    {
        const auto p = size();
        if (p == 0 || ! open(row_a, row_b, p))
            return std::nullopt;
        std::size_t lo = 1, hi = p;
        while (lo < hi) {
            auto mid = lo + (hi - lo) / 2;
            if (open(row_a, row_b, mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

private:
    std::vector<NodeId> _order;
    std::vector<std::size_t> _counts;
};

struct WeightedTriple
{
    StableTriple nodes; // (x, y, z), one per input set
    Weight weight = 0;
};

/**
 * Maximum-weight stable (x, y, z) in X × Y × Z, or none. X, Y, Z disjoint
 * local sets, Z a clique, G claw-free. Ties go to the lexicographically
 * smallest (x, y, z).
 */
inline auto weighted_three_sets(SolveContext & ctx, std::span<const Weight> w, const NodeSet & x,
                                const NodeSet & y, const NodeSet & z) -> std::optional<WeightedTriple>
{
#if CLAWMWSS_CHECK_PRECONDITIONS
    detail::require_disjoint({ &x, &y, &z }, "weighted_three_sets");
    detail::require_clique(ctx.graph(), z, "weighted_three_sets");
#endif
    if (x.empty() || y.empty() || z.empty())
        return std::nullopt;

    std::vector<NodeId> probes(x.begin(), x.end());
    probes.insert(probes.end(), y.begin(), y.end());
    OrderedCliquePrefix prefix(ctx, w, z, probes);

    std::optional<WeightedTriple> best;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (ctx.adjacent(x[i], y[j]))
                continue;
            auto k = prefix.first_open(i, x.size() + j);
            if (! k)
                continue;
            auto zk = prefix.node(*k);
            Weight total = w[x[i]] + w[y[j]] + w[zk];
            if (! best || total > best->weight)
                best = WeightedTriple{ { x[i], y[j], zk }, total };
        }
    return best;
}

inline auto as_weighted_set(std::span<const Weight> w, const std::optional<WeightedTriple> & t)
    -> std::optional<WeightedSet>
{
    if (! t)
        return std::nullopt;
    return make_weighted_set(w, { t->nodes[0], t->nodes[1], t->nodes[2] });
}

/**
 * Best stable set of one or two nodes inside U: heaviest single node against
 * an exhaustive scan of non-adjacent pairs. Only used where |V| = O(sqrt m).
 */
inline auto mwss_small(SolveContext & ctx, std::span<const Weight> w, const NodeSet & u) -> std::optional<WeightedSet>
{
    if (u.empty())
        return std::nullopt;

    std::optional<WeightedSet> best;
    NodeId heaviest = u[0];
    for (auto v : u)
        if (w[v] > w[heaviest])
            heaviest = v;
    best = WeightedSet{ { heaviest }, w[heaviest] };

    std::optional<NodePair> pair;
    Weight pair_weight = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            Weight total = w[u[i]] + w[u[j]];
            if ((! pair || total > pair_weight) && ! ctx.adjacent(u[i], u[j])) {
                pair = NodePair{ u[i], u[j] };
                pair_weight = total;
            }
        }
    if (pair)
        keep_better(best, WeightedSet{ { pair->first, pair->second }, pair_weight });
    return best;
}

/**
 * Best stable set meeting T, with alpha(G) = 3: for each v in T, v plus the
 * best set of at most two among the non-neighbours of v. Sets holding two or
 * three T nodes turn up more than once, which is harmless.
 */
inline auto mwss_intersecting(SolveContext & ctx, std::span<const Weight> w, const NodeSet & t)
    -> std::optional<WeightedSet>
{
    const auto & g = ctx.graph();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (ctx.adjacent(t[i], t[j]))
                throw NotStableError({ t[i], t[j] });

    std::optional<WeightedSet> best;
    for (auto v : t) {
        NodeSet rest(g.size());
        for (NodeId u = 0; u < g.size(); ++u)
            if (u != v && ! ctx.adjacent(u, v))
                rest.insert(u);
        std::vector<NodeId> nodes{ v };
        if (auto extra = mwss_small(ctx, w, rest))
            nodes.insert(nodes.end(), extra->nodes.begin(), extra->nodes.end());
        keep_better(best, make_weighted_set(w, std::move(nodes)));
    }
    return best;
}

/**
 * Best triple lying on a 6-node path (a, x, b, y, c, z) through all of T:
 * x shared by a and b, y shared by b and c, z private to c. Six orders of T.
 */
inline auto mwss_type_path6(SolveContext & ctx, std::span<const Weight> w, const Classification & cls)
    -> std::optional<WeightedSet>
{
    static constexpr std::array<std::array<std::size_t, 3>, 6> orders{
        { { 0, 1, 2 }, { 0, 2, 1 }, { 1, 0, 2 }, { 1, 2, 0 }, { 2, 0, 1 }, { 2, 1, 0 } }
    };
    std::optional<WeightedSet> best;
    for (auto [a, b, c] : orders)
        keep_better(best, as_weighted_set(w, weighted_three_sets(ctx, w, cls.shared_by(a, b), cls.shared_by(b, c),
                                                                 cls.private_to(c))));
    return best;
}

/**
 * Best triple closing a 6-cycle (s, a, t, b, u, c) with T: one node from each
 * shared set. If W(t,u) is not a clique, a non-adjacent pair v, v' in it
 * splits W(s,u) into two cliques (its neighbours of v and of v'), and each
 * half serves as the clique side.
 */
inline auto mwss_type_cycle6(SolveContext & ctx, std::span<const Weight> w, const Classification & cls)
    -> std::optional<WeightedSet>
{
    const auto & w_st = cls.shared_by(0, 1);
    const auto & w_su = cls.shared_by(0, 2);
    const auto & w_tu = cls.shared_by(1, 2);
    if (w_st.empty() || w_su.empty() || w_tu.empty())
        return std::nullopt;

    auto split = is_clique_or_witness(ctx, w_tu);
    if (split.is_clique())
        return as_weighted_set(w, weighted_three_sets(ctx, w, w_st, w_su, w_tu));

    const auto [v, v2] = *split.non_adjacent;
    const auto s = cls.t(0), u = cls.t(2);
    NodeSet near_v(ctx.graph().size()), near_v2(ctx.graph().size());
    for (auto c : w_su) {
        bool to_v = ctx.adjacent(c, v);
        bool to_v2 = ctx.adjacent(c, v2);
        if (to_v && to_v2)
            throw ClawWitness(make_claw(c, s, v, v2));
        if (! to_v && ! to_v2)
            throw ClawWitness(make_claw(u, c, v, v2));
        (to_v ? near_v : near_v2).insert(c);
    }
#if CLAWMWSS_CHECK_PRECONDITIONS
    const auto & g = ctx.graph();
    for (auto [half, other] : { std::pair{ &near_v, v2 }, std::pair{ &near_v2, v } })
        for (std::size_t i = 0; i < half->size(); ++i)
            for (std::size_t j = i + 1; j < half->size(); ++j)
                if (! g.has_edge((*half)[i], (*half)[j]))
                    throw ClawWitness(make_claw(u, (*half)[i], (*half)[j], other));
#endif

    std::optional<WeightedSet> best;
    keep_better(best, as_weighted_set(w, weighted_three_sets(ctx, w, w_st, w_tu, near_v)));
    keep_better(best, as_weighted_set(w, weighted_three_sets(ctx, w, w_st, w_tu, near_v2)));
    return best;
}

/**
 * Best triple where some T node a pairs with a node z private to it. The
 * other two T nodes b, c then pair off as two private partners, a 4-node
 * path through b and c, or a 4-cycle (b, x, c, y) whose x, y are shared by b
 * and c; the cycle case needs no search since F(a) is null to W(b,c).
 */
inline auto mwss_type_iii(SolveContext & ctx, std::span<const Weight> w, const Classification & cls)
    -> std::optional<WeightedSet>
{
    static constexpr std::array<std::array<std::size_t, 3>, 3> splits{ { { 0, 1, 2 }, { 1, 0, 2 }, { 2, 0, 1 } } };
    std::optional<WeightedSet> best;
    for (auto [a, b, c] : splits) {
        const auto & z = cls.private_to(a);
        if (z.empty())
            continue;
        const auto & w_bc = cls.shared_by(b, c);

        keep_better(best, as_weighted_set(w, weighted_three_sets(ctx, w, cls.private_to(b), cls.private_to(c), z)));
        keep_better(best, as_weighted_set(w, weighted_three_sets(ctx, w, w_bc, cls.private_to(c), z)));
        keep_better(best, as_weighted_set(w, weighted_three_sets(ctx, w, w_bc, cls.private_to(b), z)));

#if CLAWMWSS_CHECK_PRECONDITIONS
        for (auto x : w_bc)
            for (auto y : z)
                if (ctx.graph().has_edge(x, y))
                    throw ClawWitness(make_claw(x, cls.t(b), cls.t(c), y));
#endif
        NodeId heaviest = z[0];
        for (auto v : z)
            if (w[v] > w[heaviest])
                heaviest = v;

        std::optional<NodePair> pair;
        Weight pair_weight = 0;
        for (std::size_t i = 0; i < w_bc.size(); ++i)
            for (std::size_t j = i + 1; j < w_bc.size(); ++j) {
                Weight total = w[w_bc[i]] + w[w_bc[j]];
                if ((! pair || total > pair_weight) && ! ctx.adjacent(w_bc[i], w_bc[j])) {
                    pair = NodePair{ w_bc[i], w_bc[j] };
                    pair_weight = total;
                }
            }
        if (pair)
            keep_better(best, make_weighted_set(w, { pair->first, pair->second, heaviest }));
    }
    return best;
}

struct AlphaAtLeast4
{
    StableQuad witness; // ascending, original ids
};

struct Optimal
{
    std::vector<NodeId> nodes; // ascending, original ids
    Weight weight = 0;
    std::size_t dropped_negative = 0;
};

struct SolveStats
{
    std::uint64_t queries = 0;             // whole solve
    std::uint64_t cardinality_queries = 0; // the min(alpha, 4) phase alone
};

struct SolveOutcome
{
    std::variant<AlphaAtLeast4, Optimal> verdict;
    SolveStats stats;

    auto is_optimal() const -> bool { return std::holds_alternative<Optimal>(verdict); }
    auto optimal() const -> const Optimal & { return std::get<Optimal>(verdict); }
    auto witness() const -> const StableQuad & { return std::get<AlphaAtLeast4>(verdict).witness; }
};

/**
 * Either a stable 4-set (alpha(G) >= 4) or a maximum-weight stable set.
 * Negative-weight nodes are dropped first, so the empty set (weight 0) is
 * always a candidate; the 4-set witness is searched on the remaining nodes.
 * Among equally heavy candidates the lexicographically smallest set wins.
 */
inline auto mwss_alpha3(const Graph & original, std::span<const Weight> weights) -> SolveOutcome
{
    if (weights.size() != original.size())
        throw std::invalid_argument("weight vector length differs from node count");

    NodeSet keep(original.size());
    for (NodeId v = 0; v < original.size(); ++v)
        if (weights[v] >= 0)
            keep.insert(v);
    const std::size_t dropped = original.size() - keep.size();

    std::optional<InducedSubgraph> reduced;
    std::vector<Weight> reduced_weights;
    if (dropped > 0) {
        reduced = induced_subgraph(original, keep);
        for (auto v : reduced->new_to_old)
            reduced_weights.push_back(weights[v]);
    }
    const Graph & g = reduced ? reduced->graph : original;
    std::span<const Weight> w = reduced ? std::span<const Weight>(reduced_weights) : weights;
    auto to_original = [&](NodeId v) { return reduced ? reduced->new_to_old[v] : v; };

    SolveOutcome outcome;
    SolveContext ctx(g);
    auto report = stable_set_min_alpha4(ctx);
    outcome.stats.cardinality_queries = ctx.queries();

    if (! report.is_exact()) {
        StableQuad quad{};
        for (std::size_t i = 0; i < 4; ++i)
            quad[i] = to_original(report.nodes[i]);
        std::sort(quad.begin(), quad.end());
        outcome.verdict = AlphaAtLeast4{ quad };
        outcome.stats.queries = ctx.queries();
        return outcome;
    }

    std::optional<WeightedSet> best = WeightedSet{};
    const auto everything = NodeSet::all(g.size());
    if (report.nodes.size() == 3) {
        const NodeSet t(g.size(), report.nodes);
        auto cls = classify(ctx, t);
        if (! cls.super_free().empty())
            throw std::logic_error("mwss_alpha3: super-free node next to a maximum stable set");

        keep_better(best, mwss_intersecting(ctx, w, t));
        keep_better(best, mwss_type_path6(ctx, w, cls));
        keep_better(best, mwss_type_cycle6(ctx, w, cls));
        keep_better(best, mwss_type_iii(ctx, w, cls));
    }
    keep_better(best, mwss_small(ctx, w, everything));
    outcome.stats.queries = ctx.queries();

    if (! is_stable(g, best->nodes))
        throw ClawWitness(require_claw(g, "mwss_alpha3"));

    Optimal result;
    for (auto v : best->nodes)
        result.nodes.push_back(to_original(v));
    std::sort(result.nodes.begin(), result.nodes.end());
    result.weight = total_weight(weights, result.nodes);
    result.dropped_negative = dropped;
    outcome.verdict = std::move(result);
    return outcome;
}

} // namespace clawmwss
