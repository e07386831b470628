#include <cassert>
#include <numeric>

#include "itp/errors.hpp"
#include "itp/heuristics.hpp"
#include "ls_core.hpp"

namespace itp {

Configuration random_configuration(int m, int n, Rng& rng) {
    const int total = m + n;
    Configuration cfg;
    cfg.a.resize(total);
    cfg.free_index = static_cast<int>(rng.uniform_index(total));
    for (int i = 0; i < total; ++i) {
        if (i == cfg.free_index)
            cfg.a[i] = 0;
        else
            cfg.a[i] = rng.uniform_index(2) == 0 ? -1 : 1;
    }
    return cfg;
}

Configuration random_feasible_configuration(const IntervalTpInstance& inst, Rng& rng) {
    Configuration cfg = random_configuration(inst.m, inst.n, rng);
    if (!decode(inst, cfg).feasible)
        cfg = repair(inst, cfg);
    return cfg;
}

namespace {

// Greedy walk from the extreme feasible point (s_hi, d_lo) towards
// (s_lo, d_hi); the coordinate whose flip would overshoot the balance gap
// becomes the free value.
Configuration constructive_balanced(const IntervalTpInstance& inst) {
    const int m = inst.m;
    const int n = inst.n;
    Configuration cfg;
    cfg.a.assign(m + n, 0);
    for (int i = 0; i < m; ++i)
        cfg.a[i] = 1;
    for (int j = 0; j < n; ++j)
        cfg.a[m + j] = -1;

    Value gap = checked_sub(inst.total_supply_hi(), inst.total_demand_lo());
    if (gap < 0)
        throw ValidationError("balanced start: instance has no feasible scenario");
    for (int i = 0; i < m && gap > 0; ++i) {
        const Value width = inst.supply[i].hi - inst.supply[i].lo;
        if (gap < width) {
            cfg.a[i] = 0;
            cfg.free_index = i;
            return cfg;
        }
        gap -= width;
        cfg.a[i] = -1;
    }
    for (int j = 0; j < n && gap > 0; ++j) {
        const Value width = inst.demand[j].hi - inst.demand[j].lo;
        if (gap < width) {
            cfg.a[m + j] = 0;
            cfg.free_index = m + j;
            return cfg;
        }
        gap -= width;
        cfg.a[m + j] = 1;
    }
    // gap == 0: balanced with every coordinate on a bound; free the last
    // coordinate in place. gap > 0 only without any balanced scenario
    // (strictly all-feasible); the all-(s_lo, d_hi) configuration reached
    // here is then the worst-value scenario itself.
    cfg.a[m + n - 1] = 0;
    cfg.free_index = m + n - 1;
    return cfg;
}

} // namespace

Configuration random_balanced_configuration(const IntervalTpInstance& inst, Rng& rng) {
    constexpr int kAttempts = 500;
    for (int t = 0; t < kAttempts; ++t) {
        Configuration cfg = random_feasible_configuration(inst, rng);
        if (decode(inst, cfg).balanced)
            return cfg;
    }
    return constructive_balanced(inst);
}

namespace detail {

LsOutcome ls_first_core(const IntervalTpInstance& inst, Configuration start, int cap, Rng& rng,
                        FitnessCache& cache, const RunClock& clock,
                        std::vector<TracePoint>* trace) {
    LsOutcome out;
    out.config = std::move(start);
    out.value = fitness(inst, out.config, cache);
    if (trace)
        trace->push_back({clock.seconds(), out.value});

    std::vector<std::size_t> order;
    for (;;) {
        if ((cap > 0 && out.passes >= static_cast<std::uint64_t>(cap)) || clock.expired())
            break;
        ++out.passes;
        std::vector<Configuration> neigh = neighborhood(inst, out.config);
        order.resize(neigh.size());
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        bool improved = false;
        for (std::size_t idx : order) {
            const Value v = fitness(inst, neigh[idx], cache);
            if (v > out.value) {
                out.config = std::move(neigh[idx]);
                out.value = v;
                improved = true;
                if (trace)
                    trace->push_back({clock.seconds(), v});
                break;
            }
        }
        if (!improved)
            break;
    }
    return out;
}

LsOutcome ls_best_core(const IntervalTpInstance& inst, Configuration start, int cap,
                       FitnessCache& cache, const RunClock& clock,
                       std::vector<TracePoint>* trace) {
    LsOutcome out;
    out.config = std::move(start);
    out.value = fitness(inst, out.config, cache);
    if (trace)
        trace->push_back({clock.seconds(), out.value});

    for (;;) {
        if ((cap > 0 && out.passes >= static_cast<std::uint64_t>(cap)) || clock.expired())
            break;
        ++out.passes;
        std::vector<Configuration> neigh = neighborhood(inst, out.config);
        int best = -1;
        Value best_value = 0;
        for (std::size_t idx = 0; idx < neigh.size(); ++idx) {
            const Value v = fitness(inst, neigh[idx], cache);
            if (best < 0 || v > best_value) { // strict: ties keep the lowest index
                best = static_cast<int>(idx);
                best_value = v;
            }
        }
        if (best < 0 || best_value <= out.value)
            break;
        out.config = std::move(neigh[best]);
        out.value = best_value;
        if (trace)
            trace->push_back({clock.seconds(), best_value});
    }
    return out;
}

} // namespace detail

namespace {

RunReport run_ls(const IntervalTpInstance& inst, const Configuration& start, int cap,
                 std::uint64_t seed, double time_limit, bool first_improvement) {
    const DecodedScenario dec = decode(inst, start);
    if (!dec.feasible)
        throw ValidationError("local search: start configuration decodes infeasible");

    detail::RunClock clock(time_limit);
    Rng rng(seed);
    FitnessCache cache;
    RunReport rep;
    rep.algorithm = first_improvement ? "ls-first" : "ls-best";
    rep.instance_name = inst.name;
    rep.seed = seed;
    rep.params.seed = seed;
    rep.params.ls_iteration_cap = cap;
    rep.params.time_limit_seconds = time_limit;

    detail::LsOutcome out =
        first_improvement
            ? detail::ls_first_core(inst, start, cap, rng, cache, clock, &rep.trace)
            : detail::ls_best_core(inst, start, cap, cache, clock, &rep.trace);
    rep.best_config = std::move(out.config);
    rep.best_value = out.value;
    rep.iteration_count = out.passes;
    rep.lp_count = cache.evals;
    rep.wall_seconds = clock.seconds();
    return rep;
}

} // namespace

RunReport local_search_first(const IntervalTpInstance& inst, const Configuration& start, int cap,
                             std::uint64_t seed, double time_limit_seconds) {
    return run_ls(inst, start, cap, seed, time_limit_seconds, true);
}

RunReport local_search_best(const IntervalTpInstance& inst, const Configuration& start, int cap,
                            std::uint64_t seed, double time_limit_seconds) {
    return run_ls(inst, start, cap, seed, time_limit_seconds, false);
}

} // namespace itp
