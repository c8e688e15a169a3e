#pragma once

#include <clawmwss/generate.hpp>
#include <clawmwss/weighted.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace clawmwss {

struct BenchRecord
{
    std::string instance;
    NodeId n = 0;
    std::size_t m = 0;
    std::uint64_t queries = 0;
    std::uint64_t ns = 0;
    double ratio = 0.0; // queries / (m log2(n + 2))

    std::uint64_t cardinality_queries = 0; // not part of the CSV
};

inline auto normalised_ratio(std::uint64_t queries, NodeId n, std::size_t m) -> double
{
    double scale = double(m) * std::log2(double(n) + 2.0);
    return double(queries) / std::max(scale, 1.0);
}

/// Solves one scaling-family instance per target edge count.
inline auto run_bench(const std::vector<std::size_t> & target_edges, std::uint64_t seed) -> std::vector<BenchRecord>
{
    std::vector<BenchRecord> records;
    for (auto target : target_edges) {
        auto inst = scaling_instance(target, seed);
        auto start = std::chrono::steady_clock::now();
        auto outcome = mwss_alpha3(inst.graph, inst.weights);
        auto elapsed = std::chrono::steady_clock::now() - start;

        BenchRecord r;
        r.instance = "lg3-m" + std::to_string(target);
        r.n = inst.graph.size();
        r.m = inst.graph.edge_count();
        r.queries = outcome.stats.queries;
        r.cardinality_queries = outcome.stats.cardinality_queries;
        r.ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
        r.ratio = normalised_ratio(r.queries, r.n, r.m);
        records.push_back(r);
    }
    return records;
}

inline auto write_bench_csv(std::ostream & out, const std::vector<BenchRecord> & records) -> void
{
    out << "instance,n,m,queries,ns,ratio\n";
    for (auto & r : records)
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.queries << ',' << r.ns << ',' << std::fixed
            << std::setprecision(6) << r.ratio << std::defaultfloat << '\n';
}

/// max / min over the records of `value`; 1 for fewer than two records.
template <typename F>
auto spread(const std::vector<BenchRecord> & records, F && value) -> double
{
    if (records.size() < 2)
        return 1.0;
    double lo = value(records.front()), hi = lo;
    for (auto & r : records) {
        lo = std::min(lo, value(r));
        hi = std::max(hi, value(r));
    }
    return lo > 0 ? hi / lo : INFINITY;
}

} // namespace clawmwss
