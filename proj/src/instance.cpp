#include "itp/instance.hpp"

#include <sstream>

#include "itp/errors.hpp"

namespace itp {

namespace {

Value sum_lo(const std::vector<Interval>& v) {
    Value s = 0;
    for (const auto& iv : v)
        s = checked_add(s, iv.lo);
    return s;
}

Value sum_hi(const std::vector<Interval>& v) {
    Value s = 0;
    for (const auto& iv : v)
        s = checked_add(s, iv.hi);
    return s;
}

void check_interval(std::vector<Violation>& out, const std::string& field, const Interval& iv) {
    if (iv.lo > iv.hi) {
        std::ostringstream os;
        os << "lo <= hi violated (lo=" << iv.lo << ", hi=" << iv.hi << ")";
        out.push_back({field, os.str()});
    }
    if (iv.lo < 0) {
        std::ostringstream os;
        os << "interval must be non-negative (lo=" << iv.lo << ")";
        out.push_back({field, os.str()});
    }
}

} // namespace

Value IntervalTpInstance::total_supply_lo() const { return sum_lo(supply); }
Value IntervalTpInstance::total_supply_hi() const { return sum_hi(supply); }
Value IntervalTpInstance::total_demand_lo() const { return sum_lo(demand); }
Value IntervalTpInstance::total_demand_hi() const { return sum_hi(demand); }

Value Scenario::total_supply() const {
    Value s = 0;
    for (Value v : supply)
        s = checked_add(s, v);
    return s;
}

Value Scenario::total_demand() const {
    Value s = 0;
    for (Value v : demand)
        s = checked_add(s, v);
    return s;
}

bool scenario_within(const IntervalTpInstance& inst, const Scenario& sc) {
    if (sc.m != inst.m || sc.n != inst.n)
        return false;
    for (std::size_t c = 0; c < inst.cost.size(); ++c)
        if (sc.cost[c] < inst.cost[c].lo || sc.cost[c] > inst.cost[c].hi)
            return false;
    for (int i = 0; i < inst.m; ++i)
        if (sc.supply[i] < inst.supply[i].lo || sc.supply[i] > inst.supply[i].hi)
            return false;
    for (int j = 0; j < inst.n; ++j)
        if (sc.demand[j] < inst.demand[j].lo || sc.demand[j] > inst.demand[j].hi)
            return false;
    return true;
}

std::vector<Violation> validate(const IntervalTpInstance& inst) {
    std::vector<Violation> out;
    if (inst.m < 1)
        out.push_back({"m", "must be >= 1"});
    if (inst.n < 1)
        out.push_back({"n", "must be >= 1"});
    const std::size_t want_cost = static_cast<std::size_t>(inst.m) * static_cast<std::size_t>(inst.n);
    if (inst.m >= 1 && inst.n >= 1 && inst.cost.size() != want_cost)
        out.push_back({"cost", "dimension mismatch: expected m*n intervals"});
    if (inst.supply.size() != static_cast<std::size_t>(inst.m))
        out.push_back({"supply", "dimension mismatch: expected m intervals"});
    if (inst.demand.size() != static_cast<std::size_t>(inst.n))
        out.push_back({"demand", "dimension mismatch: expected n intervals"});
    if (!out.empty())
        return out; // per-entry checks below assume consistent shapes

    for (int i = 0; i < inst.m; ++i)
        check_interval(out, "supply[" + std::to_string(i) + "]", inst.supply[i]);
    for (int j = 0; j < inst.n; ++j)
        check_interval(out, "demand[" + std::to_string(j) + "]", inst.demand[j]);
    for (int i = 0; i < inst.m; ++i)
        for (int j = 0; j < inst.n; ++j)
            check_interval(out, "cost[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                           inst.cost_at(i, j));
    if (!out.empty())
        return out;

    if (inst.total_supply_hi() < inst.total_demand_lo())
        out.push_back({"instance", "no feasible scenario: sum s_hi < sum d_lo"});
    return out;
}

const char* to_string(Feasibility f) {
    switch (f) {
    case Feasibility::NoFeasibleScenario:
        return "NoFeasibleScenario";
    case Feasibility::AllScenariosFeasible:
        return "AllScenariosFeasible";
    case Feasibility::Mixed:
        return "Mixed";
    }
    return "?";
}

Feasibility classify_feasibility(const IntervalTpInstance& inst) {
    if (inst.total_supply_hi() < inst.total_demand_lo())
        return Feasibility::NoFeasibleScenario;
    if (inst.total_supply_lo() >= inst.total_demand_hi())
        return Feasibility::AllScenariosFeasible;
    return Feasibility::Mixed;
}

IntervalTpInstance generate_random(int m, int n, const GeneratorRanges& ranges, std::uint64_t seed) {
    if (m < 1 || n < 1)
        throw GenerationFailed("generate_random: m and n must be >= 1");
    if (ranges.cost.lo < 1 || ranges.cost.lo > ranges.cost.hi || ranges.supply_base.lo < 1 ||
        ranges.supply_base.lo > ranges.supply_base.hi || ranges.demand_base.lo < 1 ||
        ranges.demand_base.lo > ranges.demand_base.hi)
        throw GenerationFailed("generate_random: ranges need positive integer endpoints with lo <= hi");

    Rng rng(seed);
    IntervalTpInstance inst;
    inst.m = m;
    inst.n = n;
    inst.name = "rand_" + std::to_string(m) + "x" + std::to_string(n) + "_s" + std::to_string(seed);

    inst.supply.resize(m);
    for (int i = 0; i < m; ++i) {
        Value lo = rng.uniform_int(ranges.supply_base.lo, ranges.supply_base.hi);
        inst.supply[i] = {lo, checked_mul(lo, 2)};
    }

    // Resample demand bases until both a feasible and an infeasible scenario
    // exist; with u = 2*l this cannot loop forever for sane ranges.
    constexpr int kMaxRetries = 1000;
    inst.demand.resize(n);
    bool mixed = false;
    for (int attempt = 0; attempt < kMaxRetries && !mixed; ++attempt) {
        for (int j = 0; j < n; ++j) {
            Value lo = rng.uniform_int(ranges.demand_base.lo, ranges.demand_base.hi);
            inst.demand[j] = {lo, checked_mul(lo, 2)};
        }
        mixed = inst.total_supply_hi() >= inst.total_demand_lo() &&
                inst.total_supply_lo() < inst.total_demand_hi();
    }
    if (!mixed)
        throw GenerationFailed("generate_random: could not reach a Mixed instance within the retry budget");

    inst.cost.resize(static_cast<std::size_t>(m) * n);
    for (auto& c : inst.cost) {
        Value lo = rng.uniform_int(ranges.cost.lo, ranges.cost.hi);
        Value hi = rng.uniform_int(lo, ranges.cost.hi);
        c = {lo, hi};
    }
    return inst;
}

} // namespace itp
