#ifndef ITP_REPORT_HPP
#define ITP_REPORT_HPP

#include <string>
#include <vector>

#include "itp/exact.hpp"
#include "itp/heuristics.hpp"
#include "itp/instance.hpp"

namespace itp {

// Canonically ordered JSON document for one run. Timing fields
// (wall_seconds, trace_seconds) are the only ones excluded from
// determinism comparisons.
std::string report_to_json(const RunReport& rep);

std::string report_csv_header();
std::string report_to_csv_row(const RunReport& rep);

// Shared solver dispatcher behind `solve`, `bench` and `verify`.
// alg is one of: exact | ls-first | ls-best | ga | ma. Local searches start
// from a seed-derived random balanced feasible configuration.
RunReport run_algorithm(const IntervalTpInstance& inst, const std::string& alg,
                        const GaParams& params, const ExactOptions& exact_opts = {});

struct BenchSpec {
    std::vector<std::string> instance_paths;
    std::vector<std::string> algorithms;
    int runs = 1;
    std::uint64_t seed_base = 0;
    GaParams params; // per-run seed = seed_base + run index
    ExactOptions exact_opts;
};

struct BenchCell {
    std::string instance;
    std::string algorithm;
    std::vector<RunReport> reports;
    std::vector<std::string> errors; // one entry per failed run
};

struct BenchResult {
    std::vector<BenchCell> cells;
};

// Runs every (instance, algorithm) cell; a failing run is recorded in the
// cell's error list and never aborts the batch.
BenchResult run_bench(const BenchSpec& spec);

// Aggregate table: one row per cell with min/avg/max objective and time,
// plus average LP and iteration counts (the same shape as the summary
// tables and interval plots used to compare the solvers).
std::string bench_to_csv(const BenchResult& result);

struct VerifyReport {
    Value exact_value = 0;
    Value oracle_value = 0;
    std::vector<RunReport> heuristic_runs;
    bool consistent = true; // exact == oracle and every heuristic <= exact
    std::string text;
};

// Cross-checks the two exact paths and all four heuristics on one instance.
VerifyReport run_verify(const IntervalTpInstance& inst, const GaParams& params,
                        std::uint64_t grid_budget = 10'000'000);

} // namespace itp

#endif
