#include "itp/exact.hpp"

#include <cassert>

#include "itp/errors.hpp"

namespace itp {

namespace {

// Only the cost upper bounds ever enter the worst-value search.
std::vector<Value> upper_costs(const IntervalTpInstance& inst) {
    std::vector<Value> c(inst.cost.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = inst.cost[i].hi;
    return c;
}

class Enumerator {
public:
    Enumerator(const IntervalTpInstance& inst, const ExactOptions& opts, ExactResult& res)
        : inst_(inst), opts_(opts), res_(res), cost_hi_(upper_costs(inst)) {}

    void run() {
        const int total = inst_.m + inst_.n;
        for (int k = 0; k < total; ++k)
            enumerate_free_index(k);
    }

private:
    // All +/- assignments of the coordinates other than k, visited in
    // Gray-code order so consecutive scenarios differ in one coordinate.
    void enumerate_free_index(int k) {
        const int m = inst_.m;
        const int n = inst_.n;
        const int bits = m + n - 1;

        Configuration cfg;
        cfg.a.assign(m + n, -1);
        cfg.a[k] = 0;
        cfg.free_index = k;

        // other[b] = coordinate driven by bit b; fixed_* track the bound sums.
        std::vector<int> other;
        other.reserve(bits);
        for (int i = 0; i < m + n; ++i)
            if (i != k)
                other.push_back(i);

        Scenario sc;
        sc.m = m;
        sc.n = n;
        sc.cost = cost_hi_;
        sc.supply.resize(m);
        sc.demand.resize(n);
        Value fixed_supply = 0, fixed_demand = 0;
        for (int i = 0; i < m; ++i) {
            if (i == k)
                continue;
            sc.supply[i] = inst_.supply[i].lo;
            fixed_supply = checked_add(fixed_supply, sc.supply[i]);
        }
        for (int j = 0; j < n; ++j) {
            if (m + j == k)
                continue;
            sc.demand[j] = inst_.demand[j].lo;
            fixed_demand = checked_add(fixed_demand, sc.demand[j]);
        }

        const std::uint64_t count = std::uint64_t{1} << bits;
        std::uint64_t gray = 0;
        for (std::uint64_t t = 0;; ++t) {
            visit(k, cfg, sc, fixed_supply, fixed_demand);
            if (t + 1 == count)
                break;
            const std::uint64_t next = (t + 1) ^ ((t + 1) >> 1);
            const int bit = __builtin_ctzll(gray ^ next);
            gray = next;
            const int coord = other[bit];
            const bool up = (next >> bit) & 1;
            if (coord < m) {
                fixed_supply -= sc.supply[coord];
                sc.supply[coord] = up ? inst_.supply[coord].hi : inst_.supply[coord].lo;
                fixed_supply = checked_add(fixed_supply, sc.supply[coord]);
            } else {
                const int j = coord - m;
                fixed_demand -= sc.demand[j];
                sc.demand[j] = up ? inst_.demand[j].hi : inst_.demand[j].lo;
                fixed_demand = checked_add(fixed_demand, sc.demand[j]);
            }
            cfg.a[coord] = up ? 1 : -1;
        }
    }

    void visit(int k, const Configuration& cfg, Scenario& sc, Value fixed_supply,
               Value fixed_demand) {
        const int m = inst_.m;
        if (k < m) {
            const Interval& iv = inst_.supply[k];
            const Value balancing = checked_sub(fixed_demand, fixed_supply);
            if (balancing > iv.hi) {
                ++res_.scenarios_skipped_infeasible; // no s_k can restore feasibility
                return;
            }
            if (opts_.balanced_filter && iv.lo > balancing) {
                ++res_.scenarios_skipped_unbalanced;
                return;
            }
            sc.supply[k] = std::max(balancing, iv.lo);
            score(cfg, sc);
            return;
        }
        const int j = k - m;
        const Interval& iv = inst_.demand[j];
        const Value balancing = checked_sub(fixed_supply, fixed_demand);
        if (balancing < iv.lo) {
            ++res_.scenarios_skipped_infeasible; // no d_k can restore feasibility
            return;
        }
        if (opts_.balanced_filter && iv.hi < balancing) {
            ++res_.scenarios_skipped_unbalanced;
            return;
        }
        sc.demand[j] = std::min(balancing, iv.hi);
        score(cfg, sc);
    }

    void score(const Configuration& cfg, const Scenario& sc) {
        ++res_.scenarios_examined;
        const EvalResult lp = evaluate(sc);
        assert(lp.status == LpStatus::Optimal);
        if (res_.scenarios_examined == 1 || lp.objective > res_.worst_value) {
            res_.worst_value = lp.objective;
            res_.worst_scenario = sc;
            res_.worst_config = cfg;
        }
    }

    const IntervalTpInstance& inst_;
    const ExactOptions& opts_;
    ExactResult& res_;
    std::vector<Value> cost_hi_;
};

} // namespace

ExactResult exact_worst(const IntervalTpInstance& inst, const ExactOptions& opts) {
    const Feasibility cls = classify_feasibility(inst);
    if (cls == Feasibility::NoFeasibleScenario)
        throw ValidationError("exact_worst: instance has no feasible scenario");
    if (inst.m + inst.n > opts.max_total_indices)
        throw InstanceTooLarge("exact_worst: m+n = " + std::to_string(inst.m + inst.n) +
                               " exceeds the cap of " + std::to_string(opts.max_total_indices));

    ExactResult res;
    if (cls == Feasibility::AllScenariosFeasible && opts.use_shortcut) {
        // Worst value is attained at (C_hi, s_lo, d_hi); encoded by the
        // all-lower supplies / all-upper demands configuration, whose free
        // supply clamps to its lower bound.
        Configuration cfg;
        cfg.a.assign(inst.m + inst.n, 1);
        for (int i = 0; i < inst.m; ++i)
            cfg.a[i] = -1;
        cfg.a[0] = 0;
        cfg.free_index = 0;
        const DecodedScenario dec = decode(inst, cfg);
        const EvalResult lp = evaluate(dec.scenario);
        assert(lp.status == LpStatus::Optimal);
        res.worst_value = lp.objective;
        res.worst_scenario = dec.scenario;
        res.worst_config = cfg;
        res.scenarios_examined = 1;
        res.used_shortcut = true;
        return res;
    }

    Enumerator(inst, opts, res).run();
    if (res.scenarios_examined == 0)
        throw Error("exact_worst: balanced enumeration examined no scenario; "
                    "disable the balanced filter for this instance");
    return res;
}

Value grid_oracle_worst(const IntervalTpInstance& inst, std::uint64_t budget) {
    if (classify_feasibility(inst) == Feasibility::NoFeasibleScenario)
        throw ValidationError("grid_oracle_worst: instance has no feasible scenario");

    std::uint64_t cells = 1;
    auto account = [&](const Interval& iv) {
        const std::uint64_t width = static_cast<std::uint64_t>(iv.hi - iv.lo) + 1;
        if (cells > budget / width)
            throw BudgetExceeded("grid_oracle_worst: grid larger than the point budget");
        cells *= width;
    };
    for (const auto& iv : inst.supply)
        account(iv);
    for (const auto& iv : inst.demand)
        account(iv);

    Scenario sc;
    sc.m = inst.m;
    sc.n = inst.n;
    sc.cost = upper_costs(inst);
    sc.supply.resize(inst.m);
    sc.demand.resize(inst.n);
    for (int i = 0; i < inst.m; ++i)
        sc.supply[i] = inst.supply[i].lo;
    for (int j = 0; j < inst.n; ++j)
        sc.demand[j] = inst.demand[j].lo;

    bool any = false;
    Value worst = 0;
    for (;;) {
        if (sc.total_supply() >= sc.total_demand()) {
            const EvalResult lp = evaluate(sc);
            if (!any || lp.objective > worst) {
                worst = lp.objective;
                any = true;
            }
        }
        // Odometer over supplies then demands.
        int pos = 0;
        const int total = inst.m + inst.n;
        for (; pos < total; ++pos) {
            if (pos < inst.m) {
                if (sc.supply[pos] < inst.supply[pos].hi) {
                    ++sc.supply[pos];
                    break;
                }
                sc.supply[pos] = inst.supply[pos].lo;
            } else {
                const int j = pos - inst.m;
                if (sc.demand[j] < inst.demand[j].hi) {
                    ++sc.demand[j];
                    break;
                }
                sc.demand[j] = inst.demand[j].lo;
            }
        }
        if (pos == total)
            break;
    }
    assert(any && "a feasible grid point exists whenever some scenario is feasible");
    return worst;
}

} // namespace itp
