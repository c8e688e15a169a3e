#pragma once

/**
 * Randomised differential testing of the solvers against the brute-force
 * oracles over generated instances.
 */

#include <clawmwss/cardinality.hpp>
#include <clawmwss/generate.hpp>
#include <clawmwss/instance_io.hpp>
#include <clawmwss/oracle.hpp>
#include <clawmwss/weighted.hpp>

#include <fstream>
#include <functional>
#include <string>
#include <vector>

namespace clawmwss {

using WeightedSolver = std::function<SolveOutcome(const Graph &, std::span<const Weight>)>;

struct VerifyOptions
{
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::size_t max_n = 60;
    std::string dump_path = "verify_failure.txt"; // empty: no dump
};

struct VerifySummary
{
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t alpha_at_least_4 = 0;
    std::size_t optimal = 0;
    std::vector<std::string> failures; // first few, for the report

    auto ok() const -> bool { return failed == 0; }
};

/**
 * The i-th instance of a verification run: kinds rotate, weights alternate
 * between [1,100] and [-50,50] every three instances, sizes are uniform in
 * 3..max_n.
 */
inline auto verify_instance_spec(std::uint64_t seed, std::size_t index, std::size_t max_n) -> GenSpec
{
    if (max_n < 3)
        throw std::invalid_argument("max-n must be at least 3");
    SplitMix64 rng(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
    GenSpec spec;
    spec.kind = static_cast<GenKind>(index % 3);
    spec.nodes = static_cast<std::size_t>(rng.between(3, static_cast<std::int64_t>(max_n)));
    if ((index / 3) % 2 == 0) {
        spec.weight_lo = 1;
        spec.weight_hi = 100;
    }
    else {
        spec.weight_lo = -50;
        spec.weight_hi = 50;
    }
    auto min_leaves = std::max<std::int64_t>(3, (static_cast<std::int64_t>(spec.nodes) - 3 + 2) / 3);
    spec.leaves = static_cast<std::size_t>(rng.between(min_leaves, std::max<std::int64_t>(min_leaves, spec.nodes)));
    spec.density = double(rng.between(1, 9)) / 10.0;
    spec.seed = rng.next();
    return spec;
}

/// Empty string when the solvers agree with the oracles on this instance.
inline auto check_instance(const Graph & g, std::span<const Weight> w, const WeightedSolver & solver,
                           bool * was_optimal = nullptr) -> std::string
{
    auto alpha = brute_alpha_min4(g);
    auto report = stable_set_min_alpha4(g);
    if (! is_stable(g, report.nodes))
        return "cardinality solver returned a non-stable set";
    if (report.nodes.size() != alpha)
        return "cardinality solver found " + std::to_string(report.nodes.size()) + " nodes, oracle says "
               + std::to_string(alpha);
    if (report.is_exact() != (alpha < 4))
        return "cardinality verdict disagrees with oracle";

    auto outcome = solver(g, w);
    if (was_optimal)
        *was_optimal = outcome.is_optimal();
    NodeSet non_negative(g.size());
    for (NodeId v = 0; v < g.size(); ++v)
        if (w[v] >= 0)
            non_negative.insert(v);

    if (! outcome.is_optimal()) {
        const auto & quad = outcome.witness();
        std::vector<NodeId> nodes(quad.begin(), quad.end());
        if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end() || ! is_stable(g, nodes))
            return "alpha >= 4 witness is not a stable 4-set";
        if (brute_alpha_min4(induced_subgraph(g, non_negative).graph) != 4)
            return "solver claims alpha >= 4 on the non-negative nodes, oracle disagrees";
        return {};
    }

    const auto & opt = outcome.optimal();
    if (! is_stable(g, opt.nodes))
        return "optimal set is not stable";
    if (total_weight(w, opt.nodes) != opt.weight)
        return "reported weight differs from the set's weight";
    auto truth = brute_mwss(g, w);
    if (truth.weight != opt.weight)
        return "solver weight " + std::to_string(opt.weight) + ", oracle weight " + std::to_string(truth.weight);
    return {};
}

inline auto verify(const VerifyOptions & options, const WeightedSolver & solver = mwss_alpha3) -> VerifySummary
{
    VerifySummary summary;
    bool dumped = false;
    for (std::size_t i = 0; i < options.count; ++i) {
        auto spec = verify_instance_spec(options.seed, i, options.max_n);
        auto inst = generate(spec);
        std::string problem;
        bool was_optimal = false;
        try {
            problem = check_instance(inst.graph, inst.weights, solver, &was_optimal);
        }
        catch (const std::exception & e) {
            problem = std::string("exception: ") + e.what();
        }

        if (problem.empty()) {
            ++summary.passed;
            ++(was_optimal ? summary.optimal : summary.alpha_at_least_4);
            continue;
        }
        ++summary.failed;
        auto label = "instance " + std::to_string(i) + " (" + to_string(spec.kind) + ", n=" + std::to_string(spec.nodes)
                     + ", seed=" + std::to_string(spec.seed) + "): " + problem;
        if (summary.failures.size() < 10)
            summary.failures.push_back(label);
        if (! dumped && ! options.dump_path.empty()) {
            std::ofstream out(options.dump_path);
            auto comments = inst.certificate.lines(spec.seed);
            comments.insert(comments.begin(), "verify failure: " + label);
            write_instance(out, inst.graph, inst.weights, comments);
            dumped = true;
        }
    }
    return summary;
}

} // namespace clawmwss
