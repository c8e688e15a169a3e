#include <clawmwss/instance_io.hpp>

#include "support/test_graphs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace clawmwss;
using namespace clawmwss::testing;

TEST(ReadInstance, DefaultWeights)
{
    auto inst = read_instance("p edge 2 1\ne 1 2\n");
    EXPECT_EQ(inst.graph.size(), 2u);
    EXPECT_EQ(inst.graph.edge_count(), 1u);
    EXPECT_EQ(inst.weights, (NodeWeights{ 1, 1 }));
}

TEST(ReadInstance, OneBasedWeightLine)
{
    auto inst = read_instance("c hello\np edge 3 0\nn 1 5\nn 3 -7\n");
    EXPECT_EQ(inst.weights, (NodeWeights{ 5, 1, -7 }));
    EXPECT_EQ(inst.comments, (std::vector<std::string>{ "hello" }));
}

TEST(ReadInstance, ErrorsCarryLineNumbers)
{
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            read_instance(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("e 1 2\n"), 1u);                       // edge before header
    EXPECT_EQ(line_of("c x\np edge two 1\n"), 2u);           // malformed header
    EXPECT_EQ(line_of("p edge 2 1\nn 1 abc\ne 1 2\n"), 2u);  // non-integer weight
    EXPECT_EQ(line_of("p edge 2 1\nn 3 4\ne 1 2\n"), 2u);    // node out of range
    EXPECT_EQ(line_of("p edge 2 1\nn 1 4\nn 1 5\n"), 3u);    // duplicate weight line
    EXPECT_EQ(line_of("p edge 2 1\ne 1 1\n"), 2u);           // self-loop
    EXPECT_EQ(line_of("p edge 3 1\ne 1 2\ne 2 3\n"), 3u);    // more edges than declared
    EXPECT_EQ(line_of("p edge 3 2\ne 1 2\n"), 2u);           // fewer edges than declared
    EXPECT_EQ(line_of("p edge 2 0\np edge 2 0\n"), 2u);      // duplicate header
    EXPECT_EQ(line_of("p edge 2 0\nx 1\n"), 2u);             // unknown line
    EXPECT_EQ(line_of("p edge 2 0\nn 1 3000000000000000000\n"), 2u); // beyond 2^61
}

TEST(ReadInstance, EmptyInputIsMissingHeader)
{
    EXPECT_THROW(read_instance(""), ParseError);
}

TEST(WriteInstance, RoundTripFixpoint)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto n = static_cast<NodeId>(rng() % 30 + 1);
        auto g = random_graph(rng, n, 0.25);
        auto w = random_weights(rng, n, -1000, 1000);
        auto first = write_instance(g, w, std::vector<std::string>{ "trial " + std::to_string(trial) });
        auto parsed = read_instance(first);
        EXPECT_EQ(parsed.graph.edges(), g.edges());
        EXPECT_EQ(parsed.weights, w);
        auto second = write_instance(parsed.graph, parsed.weights, parsed.comments);
        EXPECT_EQ(first, second);
    }
}
