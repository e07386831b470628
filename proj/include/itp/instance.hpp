#ifndef ITP_INSTANCE_HPP
#define ITP_INSTANCE_HPP

#include <string>
#include <vector>

#include "itp/rng.hpp"
#include "itp/value.hpp"

namespace itp {

// Closed non-negative interval [lo, hi].
struct Interval {
    Value lo = 0;
    Value hi = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Transportation problem with interval costs, supplies and demands.
// Immutable after construction; all operations on it are pure.
struct IntervalTpInstance {
    int m = 0; // sources
    int n = 0; // destinations
    std::vector<Interval> cost; // row-major m*n
    std::vector<Interval> supply; // m
    std::vector<Interval> demand; // n
    std::string name;

    const Interval& cost_at(int i, int j) const { return cost[static_cast<std::size_t>(i) * n + j]; }
    Interval& cost_at(int i, int j) { return cost[static_cast<std::size_t>(i) * n + j]; }

    Value total_supply_lo() const;
    Value total_supply_hi() const;
    Value total_demand_lo() const;
    Value total_demand_hi() const;

    friend bool operator==(const IntervalTpInstance&, const IntervalTpInstance&) = default;
};

// One concrete realization (C, s, d) of the interval data.
struct Scenario {
    int m = 0;
    int n = 0;
    std::vector<Value> cost; // row-major m*n
    std::vector<Value> supply; // m
    std::vector<Value> demand; // n

    Value cost_at(int i, int j) const { return cost[static_cast<std::size_t>(i) * n + j]; }
    Value total_supply() const;
    Value total_demand() const;
    // Feasible iff total supply covers total demand.
    bool feasible() const { return total_supply() >= total_demand(); }
    bool balanced() const { return total_supply() == total_demand(); }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// True iff the scenario lies componentwise within the instance's intervals.
bool scenario_within(const IntervalTpInstance& inst, const Scenario& sc);

struct Violation {
    std::string field;
    std::string reason;
};

// Report-style validation; empty result means all invariants hold.
std::vector<Violation> validate(const IntervalTpInstance& inst);

inline bool is_valid(const IntervalTpInstance& inst) { return validate(inst).empty(); }

enum class Feasibility {
    NoFeasibleScenario, // sum s_hi < sum d_lo
    AllScenariosFeasible, // sum s_lo >= sum d_hi
    Mixed,
};

const char* to_string(Feasibility f);

Feasibility classify_feasibility(const IntervalTpInstance& inst);

struct GeneratorRanges {
    Interval cost{1, 20};
    Interval supply_base{10, 50};
    Interval demand_base{10, 50};
};

// Random instance with the benchmark dataset's structure: integer lower
// bounds drawn uniformly from the base ranges, upper bounds fixed at twice
// the lower bound for supplies and demands, and cost upper bounds drawn in
// [c_lo, range.hi]. Demand bases are resampled until the instance classifies
// as Mixed (throws GenerationFailed after a bounded number of retries).
//
// Draw order per attempt: supply lows (i ascending), demand lows
// (j ascending, redrawn on retry), then cost lo/hi pairs row-major.
IntervalTpInstance generate_random(int m, int n, const GeneratorRanges& ranges, std::uint64_t seed);

} // namespace itp

#endif
