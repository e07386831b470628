#include <doctest.h>

#include "itp/errors.hpp"
#include "itp/exact.hpp"
#include "test_support.hpp"

using namespace itp;

TEST_CASE("1x1 toy: worst value 14 at s=7, d=7") {
    const auto inst = itp_test::toy_1x1();
    const auto res = exact_worst(inst);
    CHECK(res.worst_value == 14);
    CHECK(res.worst_scenario.supply == std::vector<Value>{7});
    CHECK(res.worst_scenario.demand == std::vector<Value>{7});
    CHECK(grid_oracle_worst(inst) == 14);
}

TEST_CASE("2x1 toy: worst value 24 with an interior free supply") {
    const auto inst = itp_test::toy_2x1();
    const auto res = exact_worst(inst);
    CHECK(res.worst_value == 24);
    CHECK(res.worst_scenario.supply == std::vector<Value>{2, 4});
    CHECK(res.worst_scenario.demand == std::vector<Value>{6});
    CHECK(grid_oracle_worst(inst) == 24);
}

TEST_CASE("all-feasible shortcut equals the wider enumeration") {
    const auto inst = itp_test::make_instance(1, 1, {{1, 2}}, {{8, 10}}, {{3, 7}});
    REQUIRE(classify_feasibility(inst) == Feasibility::AllScenariosFeasible);

    const auto fast = exact_worst(inst);
    CHECK(fast.used_shortcut);
    CHECK(fast.worst_value == 14); // f(C_hi, s_lo, d_hi) = 2*7
    CHECK(fast.worst_scenario.supply == std::vector<Value>{8});
    CHECK(fast.worst_scenario.demand == std::vector<Value>{7});

    ExactOptions opts;
    opts.use_shortcut = false;
    opts.balanced_filter = false;
    const auto slow = exact_worst(inst, opts);
    CHECK(!slow.used_shortcut);
    CHECK(slow.worst_value == 14);
    CHECK(grid_oracle_worst(inst) == 14);
}

TEST_CASE("counters partition the full assignment space") {
    Rng rng(51);
    for (int t = 0; t < 20; ++t) {
        const auto inst = itp_test::random_mixed_instance(rng, 3, 10, 6);
        const auto res = exact_worst(inst);
        const int total = inst.m + inst.n;
        const std::uint64_t space = static_cast<std::uint64_t>(total) << (total - 1);
        CHECK(res.scenarios_examined + res.scenarios_skipped_infeasible +
                  res.scenarios_skipped_unbalanced ==
              space);
        CHECK(res.scenarios_examined >= 1);
    }
}

TEST_CASE("point intervals collapse to a single scenario") {
    const auto inst = itp_test::make_instance(2, 1, {{2, 2}, {5, 5}}, {{2, 2}, {4, 4}}, {{5, 5}});
    const auto res = exact_worst(inst);
    Scenario sc;
    sc.m = 2;
    sc.n = 1;
    sc.cost = {2, 5};
    sc.supply = {2, 4};
    sc.demand = {5};
    CHECK(res.worst_value == evaluate(sc).objective);
    CHECK(grid_oracle_worst(inst) == res.worst_value);
}

TEST_CASE("exact equals the grid oracle on random instances") {
    Rng rng(52);
    for (int t = 0; t < 40; ++t) {
        const auto inst = itp_test::random_small_instance(rng, 3, 8, 4);
        CAPTURE(t);
        CHECK(exact_worst(inst).worst_value == grid_oracle_worst(inst));
    }
}

TEST_CASE("the wider enumeration agrees on Mixed instances too") {
    Rng rng(53);
    ExactOptions wide;
    wide.balanced_filter = false;
    for (int t = 0; t < 15; ++t) {
        const auto inst = itp_test::random_mixed_instance(rng, 3, 8, 4);
        const auto balanced = exact_worst(inst);
        const auto unfiltered = exact_worst(inst, wide);
        CHECK(balanced.worst_value == unfiltered.worst_value);
        CHECK(unfiltered.scenarios_skipped_unbalanced == 0);
        CHECK(unfiltered.scenarios_examined >= balanced.scenarios_examined);
    }
}

TEST_CASE("worst scenario is consistent with its reported value") {
    Rng rng(54);
    for (int t = 0; t < 15; ++t) {
        const auto inst = itp_test::random_small_instance(rng, 3, 8, 4);
        const auto res = exact_worst(inst);
        CHECK(evaluate(res.worst_scenario).objective == res.worst_value);
        CHECK(scenario_within(inst, res.worst_scenario));
        const auto dec = decode(inst, res.worst_config);
        CHECK(dec.scenario == res.worst_scenario);
    }
}

TEST_CASE("guards: instance cap, grid budget, infeasible instance") {
    GeneratorRanges ranges;
    const auto big = generate_random(13, 12, ranges, 3);
    CHECK_THROWS_AS(exact_worst(big), InstanceTooLarge);
    ExactOptions opts;
    opts.max_total_indices = 30;
    // 25 indices would pass the raised cap but the call stays refused below it.
    CHECK_NOTHROW(exact_worst(itp_test::toy_1x1(), opts));

    CHECK_THROWS_AS(grid_oracle_worst(generate_random(6, 6, ranges, 4)), BudgetExceeded);

    const auto infeasible = itp_test::make_instance(1, 1, {{1, 1}}, {{1, 1}}, {{2, 3}});
    CHECK_THROWS_AS(exact_worst(infeasible), ValidationError);
    CHECK_THROWS_AS(grid_oracle_worst(infeasible), ValidationError);
}
