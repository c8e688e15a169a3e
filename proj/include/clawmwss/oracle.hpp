#pragma once

/**
 * Brute-force ground truth. Everything here works from its own bit matrix
 * built off the edge list, never through Graph::has_edge or the solver code.
 */

#include <clawmwss/claw.hpp>
#include <clawmwss/graph.hpp>
#include <clawmwss/weighted.hpp>

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace clawmwss {

namespace oracle {

/// Adjacency rows as packed bit vectors.
class BitMatrix
{
public:
    explicit BitMatrix(const Graph & g) : _n(g.size()), _words((g.size() + 63) / 64), _rows(std::size_t(_n) * _words, 0)
    {
        for (auto [u, v] : g.edges()) {
            set(u, v);
            set(v, u);
        }
    }

    auto size() const -> NodeId { return _n; }
    auto words() const -> std::size_t { return _words; }

    auto adjacent(NodeId u, NodeId v) const -> bool
    {
        return (row(u)[v / 64] >> (v % 64)) & 1;
    }

    auto row(NodeId v) const -> const std::uint64_t * { return &_rows[std::size_t(v) * _words]; }

    /// Non-neighbours of v with id greater than v.
    auto later_non_neighbours(NodeId v) const -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> mask(_words, 0);
        for (NodeId u = v + 1; u < _n; ++u)
            if (! adjacent(u, v))
                mask[u / 64] |= std::uint64_t(1) << (u % 64);
        return mask;
    }

private:
    auto set(NodeId u, NodeId v) -> void { _rows[std::size_t(u) * _words + v / 64] |= std::uint64_t(1) << (v % 64); }

    NodeId _n;
    std::size_t _words;
    std::vector<std::uint64_t> _rows;
};

/// Calls f(v) for every set bit, ascending; stops early when f returns true.
template <typename F>
auto for_each_bit(const std::vector<std::uint64_t> & mask, F && f) -> bool
{
    for (std::size_t w = 0; w < mask.size(); ++w) {
        auto bits = mask[w];
        while (bits) {
            auto b = static_cast<NodeId>(std::countr_zero(bits));
            bits &= bits - 1;
            if (f(static_cast<NodeId>(w * 64 + b)))
                return true;
        }
    }
    return false;
}

/// mask & ~N(v), restricted to ids above v.
inline auto without_neighbours(const BitMatrix & adj, const std::vector<std::uint64_t> & mask, NodeId v)
    -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> out(mask.size());
    const auto * row = adj.row(v);
    for (std::size_t w = 0; w < mask.size(); ++w)
        out[w] = mask[w] & ~row[w];
    // drop ids <= v
    for (std::size_t w = 0; w < out.size() && w * 64 <= v; ++w) {
        if ((w + 1) * 64 <= std::size_t(v) + 1)
            out[w] = 0;
        else
            out[w] &= ~std::uint64_t(0) << (v % 64 + 1);
    }
    return out;
}

inline auto any_bit(const std::vector<std::uint64_t> & mask) -> bool
{
    for (auto w : mask)
        if (w)
            return true;
    return false;
}

/// Whether `candidates` contains a stable set of exactly k nodes.
inline auto stable_of_size(const BitMatrix & adj, const std::vector<std::uint64_t> & candidates, std::size_t k) -> bool
{
    if (k == 0)
        return true;
    if (k == 1)
        return any_bit(candidates);
    return for_each_bit(candidates, [&](NodeId v) { return stable_of_size(adj, without_neighbours(adj, candidates, v), k - 1); });
}

inline auto full_mask(NodeId n) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> mask((n + 63) / 64, 0);
    for (NodeId v = 0; v < n; ++v)
        mask[v / 64] |= std::uint64_t(1) << (v % 64);
    return mask;
}

} // namespace oracle

/// min(alpha(G), 4) by scanning for stable sets of size 4, 3, 2, 1 in turn.
inline auto brute_alpha_min4(const Graph & g) -> std::size_t
{
    oracle::BitMatrix adj(g);
    auto all = oracle::full_mask(g.size());
    for (std::size_t k = 4; k > 0; --k)
        if (oracle::stable_of_size(adj, all, k))
            return k;
    return 0;
}

/// Exhaustive scan over every center and every triple of its neighbours.
inline auto brute_is_clawfree(const Graph & g) -> std::optional<Claw>
{
    oracle::BitMatrix adj(g);
    for (NodeId w = 0; w < g.size(); ++w) {
        std::vector<NodeId> nbrs;
        for (NodeId v = 0; v < g.size(); ++v)
            if (adj.adjacent(w, v))
                nbrs.push_back(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                for (std::size_t k = j + 1; k < nbrs.size(); ++k)
                    if (! adj.adjacent(nbrs[i], nbrs[j]) && ! adj.adjacent(nbrs[i], nbrs[k])
                        && ! adj.adjacent(nbrs[j], nbrs[k]))
                        return Claw{ w, { nbrs[i], nbrs[j], nbrs[k] } };
    }
    return std::nullopt;
}

/// Every stable set of G (including the empty set), for n <= 24.
inline auto brute_mwss_full(const Graph & g, std::span<const Weight> w) -> WeightedSet
{
    if (g.size() > 24)
        throw PreconditionError("brute_mwss_full: more than 24 nodes");
    const NodeId n = g.size();
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }

    WeightedSet best;
    for (std::uint32_t subset = 1; subset < (std::uint32_t(1) << n); ++subset) {
        bool stable = true;
        Weight total = 0;
        for (NodeId v = 0; v < n && stable; ++v)
            if (subset >> v & 1) {
                stable = ! (nbr[v] & subset);
                total += w[v];
            }
        if (! stable)
            continue;
        WeightedSet candidate;
        candidate.weight = total;
        for (NodeId v = 0; v < n; ++v)
            if (subset >> v & 1)
                candidate.nodes.push_back(v);
        if (better(candidate, best))
            best = std::move(candidate);
    }
    return best;
}

/**
 * Maximum-weight stable set by enumerating the empty set and every stable set
 * of at most three nodes. Exact when the non-negative nodes induce a graph
 * with alpha <= 3: dropping negative nodes from any stable set never loses
 * weight, so some optimum has at most three nodes. Falls back to full
 * enumeration for n <= 24; throws PreconditionError otherwise.
 */
inline auto brute_mwss(const Graph & g, std::span<const Weight> w) -> WeightedSet
{
    if (w.size() != g.size())
        throw std::invalid_argument("weight vector length differs from node count");

    NodeSet non_negative(g.size());
    for (NodeId v = 0; v < g.size(); ++v)
        if (w[v] >= 0)
            non_negative.insert(v);
    if (brute_alpha_min4(induced_subgraph(g, non_negative).graph) > 3) {
        if (g.size() <= 24)
            return brute_mwss_full(g, w);
        throw PreconditionError("brute_mwss: alpha of the non-negative part exceeds 3 and n > 24");
    }

    oracle::BitMatrix adj(g);
    WeightedSet best;
    auto offer = [&](std::vector<NodeId> nodes) {
        WeightedSet candidate{ std::move(nodes), 0 };
        candidate.weight = total_weight(w, candidate.nodes);
        if (better(candidate, best))
            best = std::move(candidate);
    };
    for (NodeId a = 0; a < g.size(); ++a) {
        offer({ a });
        auto after_a = adj.later_non_neighbours(a);
        oracle::for_each_bit(after_a, [&](NodeId b) {
            offer({ a, b });
            auto after_b = oracle::without_neighbours(adj, after_a, b);
            oracle::for_each_bit(after_b, [&](NodeId c) {
                offer({ a, b, c });
                return false;
            });
            return false;
        });
    }
    return best;
}

} // namespace clawmwss
