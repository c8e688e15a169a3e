#pragma once

#include <clawmwss/graph.hpp>

#include <array>
#include <optional>
#include <string>

namespace clawmwss {

/// Induced K(1,3): center adjacent to three pairwise non-adjacent leaves (ascending).
struct Claw
{
    NodeId center;
    std::array<NodeId, 3> leaves;

    friend auto operator==(const Claw &, const Claw &) -> bool = default;
};

/**
 * A claw found while solving. Surfaced as an error so callers can print it as
 * a certificate that the input is not claw-free.
 */
class ClawWitness : public std::runtime_error
{
public:
    explicit ClawWitness(Claw claw) :
        std::runtime_error("graph is not claw-free: claw centred at " + std::to_string(claw.center)),
        _claw(claw)
    {
    }

    auto claw() const -> const Claw & { return _claw; }

private:
    Claw _claw;
};

inline auto make_claw(NodeId center, NodeId a, NodeId b, NodeId c) -> Claw
{
    std::array<NodeId, 3> leaves{ a, b, c };
    std::sort(leaves.begin(), leaves.end());
    return { center, leaves };
}

/**
 * Validation-only claw search. For each center in ascending order, look for a
 * non-adjacent pair of neighbours, then for a third neighbour non-adjacent to
 * both. Worst case O(sum of deg^3); never on the solve path.
 */
inline auto find_claw(const Graph & g) -> std::optional<Claw>
{
    for (NodeId w = 0; w < g.size(); ++w) {
        auto nbrs = g.neighbours(w);
        if (nbrs.size() < 3)
            continue;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.has_edge(nbrs[i], nbrs[j]))
                    continue;
                for (std::size_t k = 0; k < nbrs.size(); ++k) {
                    if (k == i || k == j)
                        continue;
                    if (! g.has_edge(nbrs[i], nbrs[k]) && ! g.has_edge(nbrs[j], nbrs[k]))
                        return make_claw(w, nbrs[i], nbrs[j], nbrs[k]);
                }
            }
    }
    return std::nullopt;
}

/// Any claw in g, or a logic_error if there is none. Used on error paths only.
inline auto require_claw(const Graph & g, const char * context) -> Claw
{
    if (auto claw = find_claw(g))
        return *claw;
    throw std::logic_error(std::string(context) + ": inconsistency on a claw-free graph");
}

/**
 * Partition of V \ T by adjacency to a stable set T of two or three nodes.
 * Positions 0..|T|-1 index T in ascending id order:
 *   private_to(i)    adjacent to T[i] only
 *   shared_by(i, j)  adjacent to exactly T[i] and T[j]
 *   super_free       adjacent to no node of T
 */
class Classification
{
public:
    Classification() = default;

    Classification(NodeId universe, std::span<const NodeId> t) :
        _stable(universe, std::vector<NodeId>(t.begin(), t.end())), _super_free(universe)
    {
        for (auto & s : _private)
            s = NodeSet(universe);
        for (auto & s : _shared)
            s = NodeSet(universe);
    }

    auto stable() const -> const NodeSet & { return _stable; }
    auto order() const -> std::size_t { return _stable.size(); }
    auto t(std::size_t i) const -> NodeId { return _stable[i]; }

    auto private_to(std::size_t i) const -> const NodeSet & { return _private.at(i); }
    auto private_to(std::size_t i) -> NodeSet & { return _private.at(i); }

    auto shared_by(std::size_t i, std::size_t j) const -> const NodeSet & { return _shared.at(pair_index(i, j)); }
    auto shared_by(std::size_t i, std::size_t j) -> NodeSet & { return _shared.at(pair_index(i, j)); }

    auto super_free() const -> const NodeSet & { return _super_free; }
    auto super_free() -> NodeSet & { return _super_free; }

    /// Position of node v in T, or order() if v is not in T.
    auto position(NodeId v) const -> std::size_t
    {
        for (std::size_t i = 0; i < order(); ++i)
            if (t(i) == v)
                return i;
        return order();
    }

private:
    static auto pair_index(std::size_t i, std::size_t j) -> std::size_t
    {
        if (i == j)
            throw std::invalid_argument("shared_by needs two distinct positions");
        if (i > j)
            std::swap(i, j);
        return i + j - 1; // (0,1)->0, (0,2)->1, (1,2)->2
    }

    NodeSet _stable;
    std::array<NodeSet, 3> _private;
    std::array<NodeSet, 3> _shared;
    NodeSet _super_free;
};

/// Re-derives every node's class from scratch; PreconditionError on any mismatch.
inline auto verify_partition(const Graph & g, const Classification & cls) -> void
{
    for (NodeId v = 0; v < g.size(); ++v) {
        std::size_t seen = cls.stable().contains(v) ? 1 : 0;
        bool expected_class = false;
        std::array<std::size_t, 3> hits{};
        std::size_t count = 0;
        for (std::size_t i = 0; i < cls.order(); ++i)
            if (g.has_edge(v, cls.t(i)))
                hits[count++] = i;
        for (std::size_t i = 0; i < cls.order(); ++i) {
            if (cls.private_to(i).contains(v)) {
                ++seen;
                expected_class = (count == 1 && hits[0] == i);
            }
            for (std::size_t j = i + 1; j < cls.order(); ++j)
                if (cls.shared_by(i, j).contains(v)) {
                    ++seen;
                    expected_class = (count == 2 && hits[0] == i && hits[1] == j);
                }
        }
        if (cls.super_free().contains(v)) {
            ++seen;
            expected_class = (count == 0);
        }
        if (cls.stable().contains(v))
            expected_class = true;
        if (seen != 1 || ! expected_class)
            throw PreconditionError("classification is not a partition by T-adjacency at node "
                                    + std::to_string(v));
    }
}

/**
 * One pass over V with at most |T| adjacency queries per node. T must be a
 * stable set of size 2 or 3 (NotStableError otherwise). When |T| = 3 a node
 * adjacent to all of T is the center of a claw with leaves T, reported as
 * ClawWitness.
 */
inline auto classify(SolveContext & ctx, const NodeSet & t) -> Classification
{
    const auto & g = ctx.graph();
    if (t.size() != 2 && t.size() != 3)
        throw std::invalid_argument("classify needs a stable set of 2 or 3 nodes");
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (ctx.adjacent(t[i], t[j]))
                throw NotStableError({ t[i], t[j] });

    Classification cls(g.size(), t.ids());
    for (NodeId v = 0; v < g.size(); ++v) {
        if (t.contains(v))
            continue;
        std::array<std::size_t, 3> hits{};
        std::size_t count = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (ctx.adjacent(v, t[i]))
                hits[count++] = i;

        switch (count) {
        case 0: cls.super_free().insert(v); break;
        case 1: cls.private_to(hits[0]).insert(v); break;
        case 2: cls.shared_by(hits[0], hits[1]).insert(v); break;
        default: throw ClawWitness(make_claw(v, t[0], t[1], t[2]));
        }
    }
#if CLAWMWSS_CHECK_PRECONDITIONS
    verify_partition(g, cls);
#endif
    return cls;
}

inline auto classify(SolveContext & ctx, std::initializer_list<NodeId> t) -> Classification
{
    return classify(ctx, NodeSet(ctx.graph().size(), std::vector<NodeId>(t)));
}

/// Some u with X inside N[u], smallest id first; for empty X the smallest node.
inline auto is_local(const Graph & g, const NodeSet & x) -> std::optional<NodeId>
{
    for (NodeId u = 0; u < g.size(); ++u) {
        bool covered = true;
        for (auto v : x)
            if (v != u && ! g.has_edge(u, v)) {
                covered = false;
                break;
            }
        if (covered)
            return u;
    }
    return std::nullopt;
}

} // namespace clawmwss
