#include <clawmwss/oracle.hpp>
#include <clawmwss/weighted.hpp>

#include "support/test_graphs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace clawmwss;
using namespace clawmwss::testing;

namespace {

auto index_weights(NodeId n) -> NodeWeights
{
    NodeWeights w(n);
    for (NodeId v = 0; v < n; ++v)
        w[v] = v + 1;
    return w;
}

auto stable(const Graph & g, std::span<const NodeId> s) -> bool
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.has_edge(s[i], s[j]))
                return false;
    return true;
}

// Heaviest stable (x, y, z) over X × Y × Z, or none.
auto brute_triple(const Graph & g, std::span<const Weight> w, const NodeSet & x, const NodeSet & y,
                  const NodeSet & z) -> std::optional<Weight>
{
    std::optional<Weight> best;
    for (auto a : x)
        for (auto b : y)
            for (auto c : z)
                if (! g.has_edge(a, b) && ! g.has_edge(a, c) && ! g.has_edge(b, c))
                    if (! best || w[a] + w[b] + w[c] > *best)
                        best = w[a] + w[b] + w[c];
    return best;
}

// Claw-free graph with a maximum stable triple, weights and its classification.
struct Alpha3Case
{
    Graph g;
    NodeWeights w;
    Classification cls;
};

auto alpha3_case(std::mt19937_64 & rng) -> Alpha3Case
{
    for (;;) {
        auto g = random_clawfree_alpha3(rng, 30);
        auto report = stable_set_min_alpha4(g);
        if (report.nodes.size() != 3)
            continue;
        SolveContext ctx(g);
        auto cls = classify(ctx, set_of(g, report.nodes));
        return { g, random_weights(rng, g.size(), 1, 100), cls };
    }
}

} // namespace

TEST(Better, HeavierThenLexicographic)
{
    EXPECT_TRUE(better({ { 5 }, 3 }, { { 0, 1 }, 2 }));
    EXPECT_TRUE(better({ { 0, 3 }, 2 }, { { 1 }, 2 }));
    EXPECT_TRUE(better({ {}, 0 }, { { 0 }, 0 }));
    EXPECT_FALSE(better({ { 1 }, 2 }, { { 1 }, 2 }));
}

TEST(OrderedCliquePrefix, OrderAndCounts)
{
    // Z = {1, 2, 3} clique; probe 0 adjacent to 3 only.
    auto g = build_graph(4, { { 1, 2 }, { 1, 3 }, { 2, 3 }, { 0, 3 } });
    SolveContext ctx(g);
    NodeWeights w{ 0, 4, 9, 4 };
    std::vector<NodeId> probes{ 0 };
    OrderedCliquePrefix prefix(ctx, w, set_of(g, { 1, 2, 3 }), probes);
    ASSERT_EQ(prefix.size(), 3u);
    EXPECT_EQ(prefix.node(1), 2u);
    EXPECT_EQ(prefix.node(2), 1u); // weight tie broken by id
    EXPECT_EQ(prefix.node(3), 3u);
    EXPECT_EQ(prefix.count(0, 0), 0u);
    EXPECT_EQ(prefix.count(0, 2), 0u);
    EXPECT_EQ(prefix.count(0, 3), 1u);
    EXPECT_EQ(ctx.queries(), 3u);
}

TEST(WeightedThreeSets, PicksHeaviestOpenClique)
{
    // x=0, y=1, z1=2 (w 5) adjacent to x, z2=3 (w 3) free.
    auto g = build_graph(4, { { 2, 3 }, { 0, 2 } });
    SolveContext ctx(g);
    NodeWeights w{ 1, 1, 5, 3 };
    auto t = weighted_three_sets(ctx, w, set_of(g, { 0 }), set_of(g, { 1 }), set_of(g, { 2, 3 }));
    ASSERT_TRUE(t);
    EXPECT_EQ(t->nodes, (StableTriple{ 0, 1, 3 }));
    EXPECT_EQ(t->weight, 5);

    EXPECT_FALSE(weighted_three_sets(ctx, w, set_of(g, { 0 }), set_of(g, { 1 }), set_of(g, {})));
    EXPECT_FALSE(weighted_three_sets(ctx, w, set_of(g, {}), set_of(g, { 1 }), set_of(g, { 2, 3 })));
}

TEST(WeightedThreeSets, MatchesBruteForceTripleMax)
{
    std::mt19937_64 rng(41);
    int nonempty = 0;
    for (int trial = 0; trial < 600; ++trial) {
        auto g = random_clawfree(rng, 30);
        auto pair = stable_pair(g);
        if (! pair)
            continue;
        SolveContext ctx(g);
        auto cls = classify(ctx, NodeSet(g.size(), { pair->first, pair->second }));
        auto w = random_weights(rng, g.size(), 1, 100);
        std::array<const NodeSet *, 4> pool{ &cls.private_to(0), &cls.private_to(1), &cls.shared_by(0, 1),
                                             &cls.super_free() };
        std::shuffle(pool.begin(), pool.end(), rng);
        NodeSet z(g.size());
        for (auto v : *pool[2]) {
            bool ok = true;
            for (auto u : z)
                ok = ok && g.has_edge(u, v);
            if (ok)
                z.insert(v);
        }
        auto t = weighted_three_sets(ctx, w, *pool[0], *pool[1], z);
        auto truth = brute_triple(g, w, *pool[0], *pool[1], z);
        ASSERT_EQ(t.has_value(), truth.has_value());
        if (t) {
            ++nonempty;
            EXPECT_EQ(t->weight, *truth);
            EXPECT_TRUE(stable(g, t->nodes));
        }
    }
    EXPECT_GT(nonempty, 50);
}

TEST(OrderedCliquePrefix, OpenIsMonotoneAndFirstOpenIsExact)
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 400; ++trial) {
        auto g = random_clawfree(rng, 30);
        auto pair = stable_pair(g);
        if (! pair)
            continue;
        SolveContext ctx(g);
        auto cls = classify(ctx, NodeSet(g.size(), { pair->first, pair->second }));
        auto w = random_weights(rng, g.size(), 1, 20);
        // Z: a clique greedily taken from the shared set; probes: the private sets.
        NodeSet z(g.size());
        for (auto v : cls.shared_by(0, 1)) {
            bool ok = true;
            for (auto u : z)
                ok = ok && g.has_edge(u, v);
            if (ok)
                z.insert(v);
        }
        std::vector<NodeId> probes(cls.private_to(0).begin(), cls.private_to(0).end());
        probes.insert(probes.end(), cls.private_to(1).begin(), cls.private_to(1).end());
        OrderedCliquePrefix prefix(ctx, w, z, probes);
        for (std::size_t i = 0; i < probes.size(); ++i)
            for (std::size_t j = i + 1; j < probes.size(); ++j) {
                if (g.has_edge(probes[i], probes[j]))
                    continue;
                std::optional<std::size_t> first;
                for (std::size_t k = 0; k <= prefix.size(); ++k) {
                    bool open = prefix.open(i, j, k);
                    // Exhaustive: some node of the prefix misses both probes.
                    bool scan = false;
                    for (std::size_t q = 1; q <= k; ++q)
                        scan = scan || (! g.has_edge(probes[i], prefix.node(q)) && ! g.has_edge(probes[j], prefix.node(q)));
                    EXPECT_EQ(open, scan);
                    if (first)
                        EXPECT_TRUE(open) << "open prefix closed again at " << k;
                    if (open && ! first)
                        first = k;
                }
                EXPECT_EQ(prefix.first_open(i, j), first);
            }
    }
}

TEST(MwssSmall, Examples)
{
    auto k5 = complete(5);
    SolveContext ctx(k5);
    auto w = index_weights(5);
    auto best = mwss_small(ctx, w, NodeSet::all(5));
    ASSERT_TRUE(best);
    EXPECT_EQ(best->nodes, (std::vector<NodeId>{ 4 }));
    EXPECT_EQ(best->weight, 5);

    auto single = mwss_small(ctx, w, set_of(k5, { 2 }));
    ASSERT_TRUE(single);
    EXPECT_EQ(single->nodes, (std::vector<NodeId>{ 2 }));
    EXPECT_FALSE(mwss_small(ctx, w, set_of(k5, {})));
}

TEST(MwssSmall, MatchesPairScan)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(rng, static_cast<NodeId>(rng() % 20 + 1), 0.5);
        auto w = random_weights(rng, g.size(), 0, 50);
        SolveContext ctx(g);
        auto best = mwss_small(ctx, w, NodeSet::all(g.size()));
        Weight truth = 0;
        for (NodeId u = 0; u < g.size(); ++u) {
            truth = std::max(truth, w[u]);
            for (NodeId v = u + 1; v < g.size(); ++v)
                if (! g.has_edge(u, v))
                    truth = std::max(truth, w[u] + w[v]);
        }
        ASSERT_TRUE(best);
        EXPECT_EQ(best->weight, truth);
        EXPECT_TRUE(stable(g, best->nodes));
    }
}

TEST(MwssIntersecting, CycleOfSeven)
{
    auto g = cycle(7);
    SolveContext ctx(g);
    NodeWeights unit(7, 1);
    auto t = set_of(g, { 0, 2, 4 });
    auto a = mwss_intersecting(ctx, unit, t);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->weight, 3);

    auto b = mwss_intersecting(ctx, index_weights(7), t);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->nodes, (std::vector<NodeId>{ 2, 4, 6 }));
    EXPECT_EQ(b->weight, 15);
}

TEST(MwssIntersecting, NoNonNeighbours)
{
    // T = {0}; 0 sees every other node.
    auto g = build_graph(3, { { 0, 1 }, { 0, 2 } });
    SolveContext ctx(g);
    NodeWeights w{ 7, 3, 3 };
    auto best = mwss_intersecting(ctx, w, set_of(g, { 0 }));
    ASSERT_TRUE(best);
    EXPECT_EQ(best->nodes, (std::vector<NodeId>{ 0 }));
    EXPECT_EQ(best->weight, 7);
}

TEST(TypePath6, CycleOfSeven)
{
    auto g = cycle(7);
    SolveContext ctx(g);
    auto cls = classify(ctx, { 0, 2, 4 });
    auto best = mwss_type_path6(ctx, NodeWeights(7, 1), cls);
    ASSERT_TRUE(best);
    EXPECT_EQ(best->nodes, (std::vector<NodeId>{ 1, 3, 5 }));
}

TEST(TypePath6, NothingWithoutSharedNodes)
{
    // T = {0, 1, 2} isolated plus private pendants.
    auto g = build_graph(6, { { 0, 3 }, { 1, 4 }, { 2, 5 } });
    SolveContext ctx(g);
    auto cls = classify(ctx, { 0, 1, 2 });
    EXPECT_FALSE(mwss_type_path6(ctx, NodeWeights(6, 1), cls));
    EXPECT_FALSE(mwss_type_cycle6(ctx, NodeWeights(6, 1), cls));
}

TEST(TypeCycle6, SixCycle)
{
    // (s, a, t, b, u, c) = (0, 1, 2, 3, 4, 5)
    auto g = cycle(6);
    SolveContext ctx(g);
    auto cls = classify(ctx, { 0, 2, 4 });
    auto best = mwss_type_cycle6(ctx, NodeWeights(6, 1), cls);
    ASSERT_TRUE(best);
    EXPECT_EQ(best->nodes, (std::vector<NodeId>{ 1, 3, 5 }));
}

TEST(TypeIII, CycleOfSeven)
{
    auto g = cycle(7);
    SolveContext ctx(g);
    auto cls = classify(ctx, { 0, 2, 4 });
    auto w = index_weights(7);
    // F(2) is empty, so no split finds three private partners; the 4-node paths still qualify.
    auto best = mwss_type_iii(ctx, w, cls);
    if (best) {
        EXPECT_TRUE(stable(g, best->nodes));
        EXPECT_LE(best->weight, 15);
    }
}

TEST(TypeIII, ThreePrivatePartners)
{
    // Private pendants 3, 4, 5 of T = {0, 1, 2}, mutually non-adjacent.
    auto g = build_graph(6, { { 0, 3 }, { 1, 4 }, { 2, 5 } });
    SolveContext ctx(g);
    auto cls = classify(ctx, { 0, 1, 2 });
    NodeWeights w{ 1, 1, 1, 4, 5, 6 };
    auto best = mwss_type_iii(ctx, w, cls);
    ASSERT_TRUE(best);
    EXPECT_EQ(best->nodes, (std::vector<NodeId>{ 3, 4, 5 }));
    EXPECT_EQ(best->weight, 15);
}

TEST(TypeCases, TogetherMatchBruteForceOnAlpha3Graphs)
{
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 400; ++trial) {
        auto c = alpha3_case(rng);
        SolveContext ctx(c.g);
        std::optional<WeightedSet> best = WeightedSet{};
        keep_better(best, mwss_intersecting(ctx, c.w, c.cls.stable()));
        for (auto part : { mwss_type_path6(ctx, c.w, c.cls), mwss_type_cycle6(ctx, c.w, c.cls),
                           mwss_type_iii(ctx, c.w, c.cls), mwss_small(ctx, c.w, NodeSet::all(c.g.size())) }) {
            if (part)
                EXPECT_TRUE(stable(c.g, part->nodes));
            keep_better(best, part);
        }
        EXPECT_EQ(best->weight, brute_mwss(c.g, c.w).weight);
    }
}

TEST(MwssAlpha3, Examples)
{
    auto c9 = mwss_alpha3(cycle(9), NodeWeights(9, 1));
    ASSERT_FALSE(c9.is_optimal());
    EXPECT_TRUE(stable(cycle(9), c9.witness()));

    auto c7 = mwss_alpha3(cycle(7), index_weights(7));
    ASSERT_TRUE(c7.is_optimal());
    EXPECT_EQ(c7.optimal().nodes, (std::vector<NodeId>{ 2, 4, 6 }));
    EXPECT_EQ(c7.optimal().weight, 15);

    auto unit = mwss_alpha3(cycle(7), NodeWeights(7, 1));
    ASSERT_TRUE(unit.is_optimal());
    EXPECT_EQ(unit.optimal().nodes, (std::vector<NodeId>{ 0, 2, 4 }));

    auto negative = mwss_alpha3(cycle(7), NodeWeights(7, -3));
    ASSERT_TRUE(negative.is_optimal());
    EXPECT_TRUE(negative.optimal().nodes.empty());
    EXPECT_EQ(negative.optimal().weight, 0);
    EXPECT_EQ(negative.optimal().dropped_negative, 7u);

    auto empty = mwss_alpha3(build_graph(0, {}), NodeWeights{});
    ASSERT_TRUE(empty.is_optimal());
    EXPECT_EQ(empty.optimal().weight, 0);
}

TEST(MwssAlpha3, ZeroWeightsPreferTheEmptySet)
{
    auto r = mwss_alpha3(cycle(7), NodeWeights(7, 0));
    ASSERT_TRUE(r.is_optimal());
    EXPECT_TRUE(r.optimal().nodes.empty());
}

TEST(MwssAlpha3, NegativeNodesCanLowerAlpha)
{
    // C9 minus nodes 0, 3, 6 is three disjoint edges.
    NodeWeights w(9, 2);
    w[0] = w[3] = w[6] = -1;
    auto r = mwss_alpha3(cycle(9), w);
    ASSERT_TRUE(r.is_optimal());
    EXPECT_EQ(r.optimal().weight, 6);
    EXPECT_EQ(r.optimal().dropped_negative, 3u);
}

TEST(MwssAlpha3, MatchesBruteForceOnRandomClawFreeGraphs)
{
    std::mt19937_64 rng(45);
    int optimal = 0, witnesses = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        auto g = random_clawfree(rng, 24);
        auto w = random_weights(rng, g.size(), trial % 2 ? -50 : 1, trial % 2 ? 50 : 100);
        auto r = mwss_alpha3(g, w);
        if (r.is_optimal()) {
            ++optimal;
            EXPECT_TRUE(stable(g, r.optimal().nodes));
            EXPECT_EQ(r.optimal().weight, total_weight(w, r.optimal().nodes));
            EXPECT_EQ(r.optimal().weight, brute_mwss(g, w).weight);
        }
        else {
            ++witnesses;
            EXPECT_TRUE(stable(g, r.witness()));
            for (auto v : r.witness())
                EXPECT_GE(w[v], 0);
        }
    }
    EXPECT_GT(optimal, 200);
    EXPECT_GT(witnesses, 100);
}

TEST(MwssAlpha3, QueryCountIsReported)
{
    auto r = mwss_alpha3(cycle(7), index_weights(7));
    EXPECT_GT(r.stats.cardinality_queries, 0u);
    EXPECT_GE(r.stats.queries, r.stats.cardinality_queries);
}
