#include <clawmwss/clawmwss.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace clawmwss;

namespace {

enum ExitCode
{
    exit_ok = 0,
    exit_input_error = 1,
    exit_alpha_ge_4 = 2,
    exit_not_claw_free = 3
};

auto join_one_based(auto && ids) -> std::string
{
    std::string out;
    for (auto v : ids) {
        if (! out.empty())
            out += ',';
        out += std::to_string(v + 1);
    }
    return out;
}

auto claw_line(const Claw & claw) -> std::string
{
    return "NOT_CLAW_FREE center=" + std::to_string(claw.center + 1) + " leaves=" + join_one_based(claw.leaves);
}

auto load(const std::string & path) -> Instance
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    return read_instance(in);
}

auto cmd_solve(const std::string & input, bool validate) -> int
{
    auto inst = load(input);
    if (validate)
        if (auto claw = find_claw(inst.graph)) {
            std::cout << claw_line(*claw) << '\n';
            return exit_not_claw_free;
        }

    try {
        auto outcome = mwss_alpha3(inst.graph, inst.weights);
        if (! outcome.is_optimal()) {
            std::cout << "ALPHA_GE_4 witness=" << join_one_based(outcome.witness()) << '\n';
            return exit_alpha_ge_4;
        }
        const auto & opt = outcome.optimal();
        std::cout << "OPTIMAL weight=" << opt.weight << " set=" << join_one_based(opt.nodes) << '\n';
        return exit_ok;
    }
    catch (const ClawWitness & e) {
        std::cout << claw_line(e.claw()) << '\n';
        return exit_not_claw_free;
    }
}

auto cmd_check(const std::string & input) -> int
{
    auto inst = load(input);
    if (auto claw = find_claw(inst.graph)) {
        std::cout << claw_line(*claw) << '\n';
        return exit_not_claw_free;
    }
    auto report = stable_set_min_alpha4(inst.graph);
    if (report.is_exact())
        std::cout << "CLAW_FREE alpha=" << report.nodes.size() << '\n';
    else
        std::cout << "CLAW_FREE alpha>=4\n";
    return exit_ok;
}

auto cmd_gen(const GenSpec & spec, const std::string & out_path, bool certify_output) -> int
{
    auto inst = generate(spec);
    if (certify_output) {
        auto result = certify(inst.graph, inst.certificate);
        if (! result.ok) {
            std::cerr << "certification failed: " << result.message << '\n';
            return exit_input_error;
        }
    }

    auto comments = inst.certificate.lines(spec.seed);
    if (out_path == "-")
        write_instance(std::cout, inst.graph, inst.weights, comments);
    else {
        std::ofstream out(out_path);
        if (! out)
            throw std::runtime_error("cannot write " + out_path);
        write_instance(out, inst.graph, inst.weights, comments);
    }
    if (certify_output)
        std::cerr << "certified: claw-free, " << (inst.certificate.alpha_is_bound ? "alpha<=" : "alpha=")
                  << inst.certificate.alpha << '\n';
    return exit_ok;
}

auto cmd_verify(const VerifyOptions & options) -> int
{
    auto summary = verify(options);
    std::cout << "verify: " << options.count << " instances, " << summary.passed << " passed, " << summary.failed
              << " failed (" << summary.optimal << " optimal, " << summary.alpha_at_least_4 << " alpha>=4)\n";
    for (auto & f : summary.failures)
        std::cout << "  " << f << '\n';
    if (! summary.ok() && ! options.dump_path.empty())
        std::cout << "first failing instance written to " << options.dump_path << '\n';
    return summary.ok() ? exit_ok : exit_input_error;
}

auto parse_sizes(const std::string & text) -> std::vector<std::size_t>
{
    std::vector<std::size_t> sizes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (! item.empty())
            sizes.push_back(std::stoull(item));
    return sizes;
}

auto cmd_bench(const std::string & sizes, std::uint64_t seed, const std::string & out_path) -> int
{
    auto records = run_bench(parse_sizes(sizes), seed);
    std::ofstream out(out_path);
    if (! out)
        throw std::runtime_error("cannot write " + out_path);
    write_bench_csv(out, records);

    for (auto & r : records)
        std::cout << r.instance << ": n=" << r.n << " m=" << r.m << " queries=" << r.queries << " ratio=" << r.ratio
                  << '\n';
    std::cout << "max/min ratio: " << spread(records, [](auto & r) { return r.ratio; }) << '\n';
    std::cout << "max/min cardinality queries per edge: "
              << spread(records, [](auto & r) { return double(r.cardinality_queries) / double(std::max<std::size_t>(r.m, 1)); })
              << '\n';
    return exit_ok;
}

} // namespace

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Maximum-weight stable sets in claw-free graphs with independence number at most 3" };
    app.require_subcommand(1);

    std::string input;
    bool validate = false;
    auto * solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--input", input, "instance file")->required();
    solve->add_flag("--validate", validate, "reject inputs containing a claw");

    auto * check = app.add_subcommand("check", "report claw-freeness and min(alpha, 4)");
    check->add_option("--input", input, "instance file")->required();

    GenSpec spec;
    std::string kind = "line_graph_cover3";
    std::string out_path;
    bool certify_output = false;
    auto * gen = app.add_subcommand("gen", "generate a certified claw-free instance");
    gen->add_option("--kind", kind, "line_graph_cover3 | complement_triangle_free | cycle")->required();
    gen->add_option("--seed", spec.seed, "generator seed")->required();
    gen->add_option("--out", out_path, "output file, - for stdout")->required();
    gen->add_flag("--certify", certify_output, "re-check claw-freeness and alpha with the brute-force oracles");
    gen->add_option("--nodes", spec.nodes, "node count (base edges for line graphs)")->capture_default_str();
    gen->add_option("--leaves", spec.leaves, "leaf pool size for line graphs, 0 for automatic")->capture_default_str();
    gen->add_option("--density", spec.density, "cross-edge probability of the bipartite base")->capture_default_str();
    gen->add_option("--wmin", spec.weight_lo, "smallest node weight")->capture_default_str();
    gen->add_option("--wmax", spec.weight_hi, "largest node weight")->capture_default_str();

    VerifyOptions verify_options;
    auto * verify_cmd = app.add_subcommand("verify", "differential test against brute-force oracles");
    verify_cmd->add_option("--count", verify_options.count, "number of instances")->required();
    verify_cmd->add_option("--seed", verify_options.seed, "seed")->required();
    verify_cmd->add_option("--max-n", verify_options.max_n, "largest instance size")->capture_default_str();
    verify_cmd->add_option("--dump", verify_options.dump_path, "where to write the first failing instance")
        ->capture_default_str();

    std::string sizes;
    std::uint64_t bench_seed = 0;
    auto * bench = app.add_subcommand("bench", "adjacency-query scaling benchmark");
    bench->add_option("--sizes", sizes, "comma-separated target edge counts")->required();
    bench->add_option("--seed", bench_seed, "seed")->required();
    bench->add_option("--out", out_path, "CSV output file")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*solve)
            return cmd_solve(input, validate);
        if (*check)
            return cmd_check(input);
        if (*gen) {
            auto parsed = parse_gen_kind(kind);
            if (! parsed)
                throw std::invalid_argument("unknown kind '" + kind + "'");
            spec.kind = *parsed;
            return cmd_gen(spec, out_path, certify_output);
        }
        if (*verify_cmd)
            return cmd_verify(verify_options);
        if (*bench)
            return cmd_bench(sizes, bench_seed, out_path);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}
