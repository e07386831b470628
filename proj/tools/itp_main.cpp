// Command-line front end: solve one instance, batch benchmarks, random
// instance generation, and the exact-vs-oracle consistency check.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 consistency failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "itp/errors.hpp"
#include "itp/exact.hpp"
#include "itp/instance_io.hpp"
#include "itp/report.hpp"

namespace {

namespace fs = std::filesystem;
using namespace itp;

struct SolverFlags {
    GaParams params;
    std::string selection = "tournament";
    int exact_cap = 24;
    bool no_shortcut = false;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    cmd->add_option("--seed", f.params.seed, "random seed (bench: base, run r uses seed+r)");
    cmd->add_option("--pop", f.params.pop_size, "population size N_pop");
    cmd->add_option("--tga", f.params.stall_limit, "non-improving generations before stopping");
    cmd->add_option("--pls", f.params.prob_local_search, "local-search probability (memetic)");
    cmd->add_option("--tls", f.params.ls_iteration_cap, "local-search iteration cap, 0 = unlimited");
    cmd->add_option("--pm-balanced", f.params.prob_mutation_balanced,
                    "mutation probability, balanced scenarios");
    cmd->add_option("--pm-unbalanced", f.params.prob_mutation_unbalanced,
                    "mutation probability, unbalanced scenarios");
    cmd->add_option("--pc", f.params.prob_crossover, "crossover probability");
    cmd->add_option("--selection", f.selection, "fps1|fps2|fps3|tournament")
        ->check(CLI::IsMember({"fps1", "fps2", "fps3", "tournament"}));
    cmd->add_option("--fps3-ratio", f.params.fps3_ratio, "max/min probability ratio of fps3");
    cmd->add_option("--tournament-size", f.params.tournament_size, "tournament draw size");
    cmd->add_option("--elite", f.params.elite_count, "elite copies per selection");
    cmd->add_option("--time-limit", f.params.time_limit_seconds, "per-run limit in seconds");
    cmd->add_option("--cap", f.exact_cap, "exact enumeration cap on m+n");
    cmd->add_flag("--no-shortcut", f.no_shortcut,
                  "exact: enumerate even when all scenarios are feasible");
}

ExactOptions exact_options(const SolverFlags& f) {
    ExactOptions opts;
    opts.max_total_indices = f.exact_cap;
    opts.use_shortcut = !f.no_shortcut;
    if (!f.no_shortcut)
        return opts;
    // Without the shortcut the balanced filter would skip everything on
    // all-feasible instances; widen to the clamped quasi-extreme set.
    opts.balanced_filter = false;
    return opts;
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw Error("cannot write file: " + out_path);
    out << text;
}

Interval parse_range(const std::string& text, const char* what) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError(std::string(what) + ": expected lo:hi, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + ": expected lo:hi, got '" + text + "'");
    }
}

// "-" reads the instance from stdin (canonical json unless --in-format csv).
IntervalTpInstance load_instance(const std::string& path, const std::string& in_format) {
    FileFormat fmt = format_from_path(path);
    if (in_format == "json")
        fmt = FileFormat::CanonicalJson;
    else if (in_format == "csv")
        fmt = FileFormat::FlatCsv;
    IntervalTpInstance inst = path == "-" ? read_instance(std::cin, fmt)
                                          : read_instance_file(path, fmt);
    if (inst.name.empty())
        inst.name = path == "-" ? "stdin" : fs::path(path).stem().string();
    return inst;
}

int cmd_solve(const std::string& path, std::string alg, const std::string& ls_policy,
              SolverFlags& flags, const std::string& format, const std::string& in_format,
              const std::string& out_path, const std::string& flow_out) {
    flags.params.selection = selection_from_string(flags.selection);
    if (alg == "ls")
        alg = ls_policy == "best" ? "ls-best" : "ls-first";

    const IntervalTpInstance inst = load_instance(path, in_format);
    if (alg == "exact" && inst.m + inst.n > 20 && inst.m + inst.n <= flags.exact_cap)
        std::cerr << "warning: enumerating " << (inst.m + inst.n)
                  << " indices means " << (inst.m + inst.n) << "*2^" << (inst.m + inst.n - 1)
                  << " scenarios; this may take very long\n";

    const RunReport rep = run_algorithm(inst, alg, flags.params, exact_options(flags));
    if (format == "csv")
        write_or_print(report_csv_header() + report_to_csv_row(rep), out_path);
    else
        write_or_print(report_to_json(rep), out_path);

    if (!flow_out.empty()) {
        const DecodedScenario dec = decode(inst, rep.best_config);
        const EvalResult lp = evaluate(dec.scenario);
        std::ostringstream os;
        os << "i,j,flow\n";
        for (int i = 0; i < inst.m; ++i)
            for (int j = 0; j < inst.n; ++j)
                os << i + 1 << ',' << j + 1 << ',' << lp.flow_at(i, j, inst.n) << '\n';
        write_or_print(os.str(), flow_out);
    }
    return 0;
}

int cmd_bench(BenchSpec& spec, SolverFlags& flags, const std::string& algs_csv,
              const std::string& out_path, const std::string& reports_dir) {
    flags.params.selection = selection_from_string(flags.selection);
    spec.params = flags.params;
    spec.exact_opts = exact_options(flags);
    spec.seed_base = flags.params.seed;

    std::string token;
    std::istringstream algs(algs_csv);
    while (std::getline(algs, token, ','))
        if (!token.empty())
            spec.algorithms.push_back(token);

    const BenchResult result = run_bench(spec);
    write_or_print(bench_to_csv(result), out_path);

    if (!reports_dir.empty()) {
        fs::create_directories(reports_dir);
        for (const auto& cell : result.cells)
            for (const auto& rep : cell.reports) {
                const std::string name = cell.instance + "_" + cell.algorithm + "_s" +
                                         std::to_string(rep.seed) + ".json";
                std::ofstream out(fs::path(reports_dir) / name);
                out << report_to_json(rep);
            }
    }
    return 0;
}

int cmd_gen(int m, int n, int count, std::uint64_t seed, const std::string& outdir,
            const std::string& cost_range, const std::string& supply_range,
            const std::string& demand_range) {
    GeneratorRanges ranges;
    ranges.cost = parse_range(cost_range, "--cost-range");
    ranges.supply_base = parse_range(supply_range, "--supply-range");
    ranges.demand_base = parse_range(demand_range, "--demand-range");

    fs::create_directories(outdir);
    for (int idx = 0; idx < count; ++idx) {
        const IntervalTpInstance inst =
            generate_random(m, n, ranges, seed + static_cast<std::uint64_t>(idx));
        const std::string name = "itp_" + std::to_string(m) + "x" + std::to_string(n) + "_" +
                                 std::to_string(idx + 1) + ".json";
        write_instance_file(inst, (fs::path(outdir) / name).string());
        std::cout << (fs::path(outdir) / name).string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, SolverFlags& flags, std::uint64_t budget) {
    flags.params.selection = selection_from_string(flags.selection);
    const IntervalTpInstance inst = load_instance(path, "auto");
    const VerifyReport rep = run_verify(inst, flags.params, budget);
    std::cout << rep.text;
    return rep.consistent ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Worst finite optimal value of interval transportation problems"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "run one solver on one instance");
    std::string solve_path, solve_alg = "ma", solve_ls_policy = "first";
    std::string solve_format = "json", solve_in_format = "auto", solve_out, solve_flow_out;
    SolverFlags solve_flags;
    solve->add_option("instance", solve_path, "instance file (canonical json or flat csv)")
        ->required();
    solve->add_option("--alg", solve_alg, "exact|ls-first|ls-best|ga|ma|ls")
        ->check(CLI::IsMember({"exact", "ls-first", "ls-best", "ga", "ma", "ls"}));
    solve->add_option("--ls-policy", solve_ls_policy, "first|best (with --alg ls)")
        ->check(CLI::IsMember({"first", "best"}));
    solve->add_option("--format", solve_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    solve->add_option("--in-format", solve_in_format, "instance format: auto|json|csv")
        ->check(CLI::IsMember({"auto", "json", "csv"}));
    solve->add_option("--out", solve_out, "write the report here instead of stdout");
    solve->add_option("--dump-flow", solve_flow_out, "write the optimal flow as CSV");
    add_solver_flags(solve, solve_flags);

    // bench
    auto* bench = app.add_subcommand("bench", "seeded batch of runs with an aggregate CSV");
    BenchSpec bench_spec;
    std::string bench_algs = "ls-first,ls-best,ga,ma", bench_out, bench_reports_dir;
    SolverFlags bench_flags;
    bench->add_option("instances", bench_spec.instance_paths, "instance files")->required();
    bench->add_option("--algs", bench_algs, "comma-separated algorithm list");
    bench->add_option("--runs", bench_spec.runs, "runs per (instance, algorithm)");
    bench->add_option("--reports-dir", bench_reports_dir, "write per-run JSON reports here");
    bench->add_option("--out", bench_out, "write the aggregate CSV here instead of stdout");
    add_solver_flags(bench, bench_flags);

    // gen
    auto* gen = app.add_subcommand("gen", "generate random Mixed instances (u = 2l pattern)");
    int gen_m = 0, gen_n = 0, gen_count = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_outdir = ".", gen_cost = "1:20", gen_supply = "10:50", gen_demand = "10:50";
    gen->add_option("m", gen_m, "sources")->required();
    gen->add_option("n", gen_n, "destinations")->required();
    gen->add_option("--count", gen_count, "number of instances");
    gen->add_option("--seed", gen_seed, "base seed; file i uses seed+i");
    gen->add_option("--outdir", gen_outdir, "output directory");
    gen->add_option("--cost-range", gen_cost, "cost bounds lo:hi");
    gen->add_option("--supply-range", gen_supply, "supply lower-bound range lo:hi");
    gen->add_option("--demand-range", gen_demand, "demand lower-bound range lo:hi");

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check exact, grid oracle and heuristics");
    std::string verify_path;
    std::uint64_t verify_budget = 10'000'000;
    SolverFlags verify_flags;
    verify->add_option("instance", verify_path, "instance file")->required();
    verify->add_option("--budget", verify_budget, "grid-oracle point budget");
    add_solver_flags(verify, verify_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve)
            return cmd_solve(solve_path, solve_alg, solve_ls_policy, solve_flags, solve_format,
                             solve_in_format, solve_out, solve_flow_out);
        if (*bench)
            return cmd_bench(bench_spec, bench_flags, bench_algs, bench_out, bench_reports_dir);
        if (*gen)
            return cmd_gen(gen_m, gen_n, gen_count, gen_seed, gen_outdir, gen_cost, gen_supply,
                           gen_demand);
        if (*verify)
            return cmd_verify(verify_path, verify_flags, verify_budget);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
