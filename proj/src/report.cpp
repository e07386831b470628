#include "itp/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "itp/errors.hpp"
#include "itp/instance_io.hpp"

namespace itp {

namespace {

using nlohmann::ordered_json;

ordered_json params_to_json(const GaParams& p) {
    ordered_json j;
    j["pop_size"] = p.pop_size;
    j["stall_limit"] = p.stall_limit;
    j["prob_crossover"] = p.prob_crossover;
    j["prob_mutation_balanced"] = p.prob_mutation_balanced;
    j["prob_mutation_unbalanced"] = p.prob_mutation_unbalanced;
    j["prob_local_search"] = p.prob_local_search;
    j["ls_iteration_cap"] = p.ls_iteration_cap;
    j["selection"] = to_string(p.selection);
    j["tournament_size"] = p.tournament_size;
    j["fps3_ratio"] = p.fps3_ratio;
    j["elite_count"] = p.elite_count;
    j["time_limit_seconds"] = p.time_limit_seconds;
    return j;
}

} // namespace

std::string report_to_json(const RunReport& rep) {
    ordered_json j;
    j["algorithm"] = rep.algorithm;
    j["instance"] = rep.instance_name;
    j["seed"] = rep.seed;
    if (rep.algorithm == "exact") {
        j["scenarios_examined"] = rep.scenarios_examined;
        j["scenarios_skipped_infeasible"] = rep.scenarios_skipped_infeasible;
        j["scenarios_skipped_unbalanced"] = rep.scenarios_skipped_unbalanced;
        j["used_shortcut"] = rep.used_shortcut;
    } else {
        j["params"] = params_to_json(rep.params);
    }
    j["best_value"] = rep.best_value;
    j["best_config"] = to_string(rep.best_config);
    j["lp_count"] = rep.lp_count;
    j["iterations"] = rep.iteration_count;
    std::vector<Value> trace_values;
    std::vector<double> trace_seconds;
    for (const auto& pt : rep.trace) {
        trace_values.push_back(pt.value);
        trace_seconds.push_back(pt.seconds);
    }
    j["trace_values"] = trace_values;
    j["trace_seconds"] = trace_seconds;
    j["wall_seconds"] = rep.wall_seconds;
    return j.dump(2) + "\n";
}

std::string report_csv_header() {
    return "algorithm,instance,seed,best_value,best_config,lp_count,iterations,wall_seconds\n";
}

std::string report_to_csv_row(const RunReport& rep) {
    std::ostringstream os;
    os << rep.algorithm << ',' << rep.instance_name << ',' << rep.seed << ',' << rep.best_value
       << ',' << to_string(rep.best_config) << ',' << rep.lp_count << ',' << rep.iteration_count
       << ',' << rep.wall_seconds << '\n';
    return os.str();
}

RunReport run_algorithm(const IntervalTpInstance& inst, const std::string& alg,
                        const GaParams& params, const ExactOptions& exact_opts) {
    if (alg == "exact") {
        const auto t0 = std::chrono::steady_clock::now();
        const ExactResult res = exact_worst(inst, exact_opts);
        RunReport rep;
        rep.algorithm = "exact";
        rep.instance_name = inst.name;
        rep.seed = params.seed;
        rep.best_value = res.worst_value;
        rep.best_config = res.worst_config;
        rep.lp_count = res.scenarios_examined;
        rep.iteration_count = res.scenarios_examined;
        rep.scenarios_examined = res.scenarios_examined;
        rep.scenarios_skipped_infeasible = res.scenarios_skipped_infeasible;
        rep.scenarios_skipped_unbalanced = res.scenarios_skipped_unbalanced;
        rep.used_shortcut = res.used_shortcut;
        rep.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.trace.push_back({rep.wall_seconds, rep.best_value});
        return rep;
    }
    if (alg == "ls-first" || alg == "ls-best") {
        Rng rng(params.seed);
        const Configuration start = random_balanced_configuration(inst, rng);
        return alg == "ls-first"
                   ? local_search_first(inst, start, params.ls_iteration_cap, params.seed,
                                        params.time_limit_seconds)
                   : local_search_best(inst, start, params.ls_iteration_cap, params.seed,
                                       params.time_limit_seconds);
    }
    if (alg == "ga")
        return genetic(inst, params);
    if (alg == "ma")
        return memetic(inst, params);
    throw ParseError("unknown algorithm: " + alg + " (expected exact|ls-first|ls-best|ga|ma)");
}

BenchResult run_bench(const BenchSpec& spec) {
    if (spec.runs < 1)
        throw ValidationError("bench: runs must be >= 1");
    if (spec.algorithms.empty())
        throw ValidationError("bench: algorithm list must be non-empty");

    BenchResult result;
    for (const auto& path : spec.instance_paths) {
        IntervalTpInstance inst;
        std::string load_error;
        try {
            inst = read_instance_file(path);
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        for (const auto& alg : spec.algorithms) {
            BenchCell cell;
            cell.instance = inst.name.empty() ? path : inst.name;
            cell.algorithm = alg;
            if (!load_error.empty()) {
                cell.errors.push_back(load_error);
            } else {
                for (int r = 0; r < spec.runs; ++r) {
                    GaParams p = spec.params;
                    p.seed = spec.seed_base + static_cast<std::uint64_t>(r);
                    try {
                        cell.reports.push_back(run_algorithm(inst, alg, p, spec.exact_opts));
                    } catch (const std::exception& e) {
                        cell.errors.push_back(e.what());
                    }
                }
            }
            result.cells.push_back(std::move(cell));
        }
    }
    return result;
}

std::string bench_to_csv(const BenchResult& result) {
    std::ostringstream os;
    os << "instance,algorithm,runs,failures,best_value,min_value,avg_value,max_value,"
          "min_seconds,avg_seconds,max_seconds,avg_lps,avg_iterations,error\n";
    for (const auto& cell : result.cells) {
        os << cell.instance << ',' << cell.algorithm << ',' << cell.reports.size() << ','
           << cell.errors.size() << ',';
        if (cell.reports.empty()) {
            os << ",,,,,,,,," << (cell.errors.empty() ? "" : cell.errors.front()) << '\n';
            continue;
        }
        Value vmin = cell.reports.front().best_value, vmax = vmin;
        double vsum = 0, tmin = cell.reports.front().wall_seconds, tmax = tmin, tsum = 0;
        double lsum = 0, isum = 0;
        for (const auto& rep : cell.reports) {
            vmin = std::min(vmin, rep.best_value);
            vmax = std::max(vmax, rep.best_value);
            vsum += static_cast<double>(rep.best_value);
            tmin = std::min(tmin, rep.wall_seconds);
            tmax = std::max(tmax, rep.wall_seconds);
            tsum += rep.wall_seconds;
            lsum += static_cast<double>(rep.lp_count);
            isum += static_cast<double>(rep.iteration_count);
        }
        const double runs = static_cast<double>(cell.reports.size());
        os << vmax << ',' << vmin << ',' << vsum / runs << ',' << vmax << ',' << tmin << ','
           << tsum / runs << ',' << tmax << ',' << lsum / runs << ',' << isum / runs << ','
           << (cell.errors.empty() ? "" : cell.errors.front()) << '\n';
    }
    return os.str();
}

VerifyReport run_verify(const IntervalTpInstance& inst, const GaParams& params,
                        std::uint64_t grid_budget) {
    VerifyReport out;
    std::ostringstream os;

    const ExactResult exact = exact_worst(inst);
    out.exact_value = exact.worst_value;
    out.oracle_value = grid_oracle_worst(inst, grid_budget);
    os << "exact_worst        = " << out.exact_value << "\n";
    os << "grid_oracle_worst  = " << out.oracle_value << "\n";
    if (out.exact_value != out.oracle_value) {
        out.consistent = false;
        os << "MISMATCH: exact enumeration disagrees with the grid oracle\n";
    }

    for (const char* alg : {"ls-first", "ls-best", "ga", "ma"}) {
        RunReport rep = run_algorithm(inst, alg, params);
        os << rep.algorithm << (std::string(10 - std::string(rep.algorithm).size(), ' '))
           << "         = " << rep.best_value << "  (gap " << out.exact_value - rep.best_value
           << ")\n";
        if (rep.best_value > out.exact_value) {
            out.consistent = false;
            os << "MISMATCH: heuristic exceeded the exact worst value\n";
        }
        out.heuristic_runs.push_back(std::move(rep));
    }
    os << (out.consistent ? "consistent\n" : "INCONSISTENT\n");
    out.text = os.str();
    return out;
}

} // namespace itp
