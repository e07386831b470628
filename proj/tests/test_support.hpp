#ifndef ITP_TESTS_TEST_SUPPORT_HPP
#define ITP_TESTS_TEST_SUPPORT_HPP

#include <vector>

#include "itp/instance.hpp"
#include "itp/rng.hpp"

namespace itp_test {

using itp::Interval;
using itp::IntervalTpInstance;
using itp::Rng;
using itp::Scenario;
using itp::Value;

inline IntervalTpInstance make_instance(int m, int n, std::vector<Interval> cost,
                                        std::vector<Interval> supply,
                                        std::vector<Interval> demand) {
    IntervalTpInstance inst;
    inst.m = m;
    inst.n = n;
    inst.cost = std::move(cost);
    inst.supply = std::move(supply);
    inst.demand = std::move(demand);
    return inst;
}

// The 1x1 toy from the worked examples: s in [5,10], d in [3,7], c in [1,2].
inline IntervalTpInstance toy_1x1() {
    return make_instance(1, 1, {{1, 2}}, {{5, 10}}, {{3, 7}});
}

// The 2x1 toy: s1 in [1,3], s2 in [2,4], d in [3,6], upper costs (2, 5).
inline IntervalTpInstance toy_2x1() {
    return make_instance(2, 1, {{2, 2}, {5, 5}}, {{1, 3}, {2, 4}}, {{3, 6}});
}

// Small random instance with bounded interval widths and at least one
// feasible scenario (may be Mixed or AllScenariosFeasible).
inline IntervalTpInstance random_small_instance(Rng& rng, int max_mn, Value max_lo,
                                                Value max_width) {
    for (;;) {
        IntervalTpInstance inst;
        inst.m = static_cast<int>(rng.uniform_int(1, max_mn));
        inst.n = static_cast<int>(rng.uniform_int(1, max_mn));
        auto draw = [&] {
            const Value lo = rng.uniform_int(0, max_lo);
            return Interval{lo, lo + rng.uniform_int(0, max_width)};
        };
        for (int i = 0; i < inst.m; ++i)
            inst.supply.push_back(draw());
        for (int j = 0; j < inst.n; ++j)
            inst.demand.push_back(draw());
        for (int c = 0; c < inst.m * inst.n; ++c) {
            const Value lo = rng.uniform_int(0, 9);
            inst.cost.push_back({lo, lo + rng.uniform_int(0, 5)});
        }
        if (inst.total_supply_hi() >= inst.total_demand_lo())
            return inst;
    }
}

// As above but guaranteed Mixed (the interesting case for the enumeration).
inline IntervalTpInstance random_mixed_instance(Rng& rng, int max_mn, Value max_lo,
                                                Value max_width) {
    for (;;) {
        IntervalTpInstance inst = random_small_instance(rng, max_mn, max_lo, max_width);
        if (itp::classify_feasibility(inst) == itp::Feasibility::Mixed)
            return inst;
    }
}

inline Scenario random_scenario(Rng& rng, int max_mn, Value max_cost, Value max_amount) {
    Scenario sc;
    sc.m = static_cast<int>(rng.uniform_int(1, max_mn));
    sc.n = static_cast<int>(rng.uniform_int(1, max_mn));
    for (int c = 0; c < sc.m * sc.n; ++c)
        sc.cost.push_back(rng.uniform_int(0, max_cost));
    for (int i = 0; i < sc.m; ++i)
        sc.supply.push_back(rng.uniform_int(0, max_amount));
    for (int j = 0; j < sc.n; ++j)
        sc.demand.push_back(rng.uniform_int(0, max_amount));
    return sc;
}

} // namespace itp_test

#endif
