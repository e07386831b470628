#include <doctest.h>

#include <sstream>

#include "itp/errors.hpp"
#include "itp/instance.hpp"
#include "itp/instance_io.hpp"
#include "test_support.hpp"

using namespace itp;
using itp_test::make_instance;

TEST_CASE("validate accepts the 1x1 toy") {
    CHECK(validate(itp_test::toy_1x1()).empty());
}

TEST_CASE("validate flags a reversed interval") {
    auto inst = itp_test::toy_1x1();
    inst.cost[0] = {5, 3};
    const auto report = validate(inst);
    REQUIRE(report.size() == 1);
    CHECK(report[0].field == "cost[0][0]");
    CHECK(report[0].reason.find("lo <= hi") != std::string::npos);
}

TEST_CASE("validate flags an instance without feasible scenarios") {
    const auto inst = make_instance(1, 1, {{1, 1}}, {{1, 1}}, {{2, 3}});
    const auto report = validate(inst);
    REQUIRE(report.size() == 1);
    CHECK(report[0].reason.find("no feasible scenario") != std::string::npos);
}

TEST_CASE("validate flags dimension mismatches") {
    auto inst = itp_test::toy_1x1();
    inst.supply.push_back({1, 2});
    const auto report = validate(inst);
    REQUIRE(report.size() == 1);
    CHECK(report[0].field == "supply");
    CHECK(report[0].reason.find("dimension mismatch") != std::string::npos);
}

TEST_CASE("classify_feasibility on the three spec cases") {
    CHECK(classify_feasibility(itp_test::toy_1x1()) == Feasibility::Mixed);
    CHECK(classify_feasibility(make_instance(1, 1, {{1, 2}}, {{8, 10}}, {{3, 7}})) ==
          Feasibility::AllScenariosFeasible);
    CHECK(classify_feasibility(make_instance(1, 1, {{1, 1}}, {{1, 1}}, {{2, 3}})) ==
          Feasibility::NoFeasibleScenario);
}

TEST_CASE("generator is deterministic and follows the u=2l pattern") {
    GeneratorRanges ranges;
    ranges.cost = {1, 20};
    ranges.supply_base = {10, 50};
    ranges.demand_base = {10, 50};
    const auto a = generate_random(2, 3, ranges, 7);
    const auto b = generate_random(2, 3, ranges, 7);
    CHECK(a == b);
    CHECK(a != generate_random(2, 3, ranges, 8));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = generate_random(3, 4, ranges, seed);
        CHECK(validate(inst).empty());
        CHECK(classify_feasibility(inst) == Feasibility::Mixed);
        for (const auto& iv : inst.supply) {
            CHECK(iv.hi == 2 * iv.lo);
            CHECK(iv.lo >= 10);
            CHECK(iv.lo <= 50);
        }
        for (const auto& iv : inst.demand)
            CHECK(iv.hi == 2 * iv.lo);
        for (const auto& iv : inst.cost) {
            CHECK(iv.lo >= 1);
            CHECK(iv.hi <= 20);
            CHECK(iv.lo <= iv.hi);
        }
    }
}

TEST_CASE("json round-trip is the identity") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        auto inst = itp_test::random_small_instance(rng, 5, 40, 12);
        inst.name = "case_" + std::to_string(t);
        const auto text = instance_to_string(inst, FileFormat::CanonicalJson);
        CHECK(instance_from_string(text, FileFormat::CanonicalJson) == inst);
    }
}

TEST_CASE("csv round-trip is the identity") {
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        auto inst = itp_test::random_small_instance(rng, 5, 40, 12);
        inst.name = "case_" + std::to_string(t);
        const auto text = instance_to_string(inst, FileFormat::FlatCsv);
        CHECK(instance_from_string(text, FileFormat::FlatCsv) == inst);
    }
}

TEST_CASE("json reader names the missing field") {
    CHECK_THROWS_WITH_AS(instance_from_string(R"({"m":1,"n":1})", FileFormat::CanonicalJson),
                         doctest::Contains("cost_lo"), ParseError);
    CHECK_THROWS_AS(instance_from_string("{\"m\":1,", FileFormat::CanonicalJson), ParseError);
}

TEST_CASE("json reader rejects dimension mismatches and non-integers") {
    const char* mismatched = R"({"m":2,"n":1,"cost_lo":[1,1],"cost_hi":[2,2],
        "supply_lo":[5,5,5],"supply_hi":[9,9,9],"demand_lo":[3],"demand_hi":[7]})";
    CHECK_THROWS_WITH_AS(instance_from_string(mismatched, FileFormat::CanonicalJson),
                         doctest::Contains("dimension mismatch"), ValidationError);

    const char* fractional = R"({"m":1,"n":1,"cost_lo":[1.5],"cost_hi":[2],
        "supply_lo":[5],"supply_hi":[9],"demand_lo":[3],"demand_hi":[7]})";
    CHECK_THROWS_WITH_AS(instance_from_string(fractional, FileFormat::CanonicalJson),
                         doctest::Contains("integer"), ParseError);
}

TEST_CASE("csv reader reports missing cells with context") {
    const std::string text = "kind,index1,index2,lo,hi\n"
                             "supply,1,,5,10\n"
                             "demand,1,,3,7\n";
    CHECK_THROWS_WITH_AS(instance_from_string(text, FileFormat::FlatCsv),
                         doctest::Contains("cost"), ParseError);

    const std::string bad_header = "a,b\nsupply,1,,5,10\n";
    CHECK_THROWS_AS(instance_from_string(bad_header, FileFormat::FlatCsv), ParseError);
}

TEST_CASE("interval csv keeps integers exact") {
    auto inst = itp_test::toy_1x1();
    inst.name = "toy";
    inst.supply[0] = {5'000'000'000LL, 6'000'000'000LL}; // beyond 32 bits
    const auto text = instance_to_string(inst, FileFormat::FlatCsv);
    CHECK(instance_from_string(text, FileFormat::FlatCsv) == inst);
    const auto json = instance_to_string(inst, FileFormat::CanonicalJson);
    CHECK(instance_from_string(json, FileFormat::CanonicalJson) == inst);
}
