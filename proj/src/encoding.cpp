#include "itp/encoding.hpp"

#include <algorithm>
#include <cassert>

#include "itp/errors.hpp"

namespace itp {

Configuration Configuration::from_entries(std::vector<std::int8_t> entries) {
    Configuration cfg;
    cfg.a = std::move(entries);
    for (std::size_t i = 0; i < cfg.a.size(); ++i) {
        const std::int8_t v = cfg.a[i];
        if (v != -1 && v != 0 && v != 1)
            throw ValidationError("configuration entries must be in {-1,0,1}");
        if (v == 0) {
            if (cfg.free_index >= 0)
                throw ValidationError("configuration must have exactly one zero");
            cfg.free_index = static_cast<int>(i);
        }
    }
    if (cfg.free_index < 0)
        throw ValidationError("configuration must have exactly one zero");
    return cfg;
}

std::string to_string(const Configuration& cfg) {
    std::string s;
    s.reserve(cfg.a.size());
    for (std::int8_t v : cfg.a)
        s.push_back(v < 0 ? '-' : (v > 0 ? '+' : '0'));
    return s;
}

Configuration configuration_from_string(const std::string& text) {
    std::vector<std::int8_t> entries;
    entries.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '-':
            entries.push_back(-1);
            break;
        case '0':
            entries.push_back(0);
            break;
        case '+':
            entries.push_back(1);
            break;
        default:
            throw ParseError(std::string("configuration: unexpected character '") + c + "'");
        }
    }
    return Configuration::from_entries(std::move(entries));
}

DecodedScenario decode(const IntervalTpInstance& inst, const Configuration& cfg) {
    const int m = inst.m;
    const int n = inst.n;
    if (cfg.size() != m + n)
        throw DimensionMismatch("decode: configuration length must be m+n");
    const int k = cfg.free_index;
    assert(k >= 0 && k < m + n && cfg.a[k] == 0);

    DecodedScenario dec;
    Scenario& sc = dec.scenario;
    sc.m = m;
    sc.n = n;
    sc.cost.resize(static_cast<std::size_t>(m) * n);
    for (std::size_t c = 0; c < sc.cost.size(); ++c)
        sc.cost[c] = inst.cost[c].hi;

    sc.supply.resize(m);
    sc.demand.resize(n);
    Value fixed_supply = 0, fixed_demand = 0;
    for (int i = 0; i < m; ++i) {
        if (i == k)
            continue;
        sc.supply[i] = cfg.a[i] < 0 ? inst.supply[i].lo : inst.supply[i].hi;
        fixed_supply = checked_add(fixed_supply, sc.supply[i]);
    }
    for (int j = 0; j < n; ++j) {
        if (m + j == k)
            continue;
        sc.demand[j] = cfg.a[m + j] < 0 ? inst.demand[j].lo : inst.demand[j].hi;
        fixed_demand = checked_add(fixed_demand, sc.demand[j]);
    }

    if (k < m) {
        // Free supply: s_k = max{lo, min{sum d - sum_{i!=k} s_i, hi}}.
        const Interval& iv = inst.supply[k];
        const Value balancing = checked_sub(fixed_demand, fixed_supply);
        sc.supply[k] = std::clamp(balancing, iv.lo, iv.hi);
        dec.clamped = balancing < iv.lo || balancing > iv.hi;
        dec.feasible = balancing <= iv.hi;
    } else {
        // Free demand: d_k = min{hi, max{sum s - sum_{j!=k} d_j, lo}}.
        const Interval& iv = inst.demand[k - m];
        const Value balancing = checked_sub(fixed_supply, fixed_demand);
        sc.demand[k - m] = std::clamp(balancing, iv.lo, iv.hi);
        dec.clamped = balancing < iv.lo || balancing > iv.hi;
        dec.feasible = balancing >= iv.lo;
    }
    dec.balanced = !dec.clamped;
    assert(dec.balanced == (sc.total_supply() == sc.total_demand()));
    assert(dec.feasible == (sc.total_supply() >= sc.total_demand()));
    return dec;
}

Configuration repair(const IntervalTpInstance& inst, const Configuration& cfg) {
    Configuration cur = cfg;
    if (decode(inst, cur).feasible)
        return cur;
    const int m = inst.m;
    const int n = inst.n;
    for (int i = 0; i < m; ++i) {
        if (i == cur.free_index || cur.a[i] != -1)
            continue;
        cur.a[i] = 1;
        if (decode(inst, cur).feasible)
            return cur;
    }
    for (int j = 0; j < n; ++j) {
        if (m + j == cur.free_index || cur.a[m + j] != 1)
            continue;
        cur.a[m + j] = -1;
        if (decode(inst, cur).feasible)
            return cur;
    }
    throw RepairFailed("repair: no feasible scenario exists (sum s_hi < sum d_lo)");
}

Configuration fitness_representative(const IntervalTpInstance& inst, const Configuration& cfg) {
    if (decode(inst, cfg).feasible)
        return cfg;
    return repair(inst, cfg);
}

Value fitness(const IntervalTpInstance& inst, const Configuration& cfg, FitnessCache& cache) {
    ++cache.evals;
    const std::string key = to_string(cfg);
    Value cached;
    if (cache.lookup(key, cached)) {
        ++cache.hits;
        return cached;
    }
    DecodedScenario dec = decode(inst, cfg);
    if (!dec.feasible)
        dec = decode(inst, repair(inst, cfg));
    EvalResult lp = evaluate(dec.scenario);
    assert(lp.status == LpStatus::Optimal);
    cache.store(key, lp.objective);
    return lp.objective;
}

std::vector<Configuration> neighborhood(const IntervalTpInstance& inst, const Configuration& cfg) {
    const int k = cfg.free_index;
    const int total = cfg.size();
    const bool k_is_supply = k < inst.m;

    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(total) - 1);
    for (int i = 0; i < total; ++i) {
        if (i == k)
            continue;

        Configuration flipped = cfg;
        flipped.a[i] = static_cast<std::int8_t>(-flipped.a[i]);
        if (!decode(inst, flipped).clamped) {
            out.push_back(std::move(flipped));
            continue;
        }

        // The free value cannot absorb the flip: move the free position to i
        // and pin k to a bound. Worsening direction first (supply down,
        // demand up); fall back to the other bound, or skip the index.
        Configuration swapped = cfg;
        swapped.a[i] = 0;
        swapped.free_index = i;
        const std::int8_t preferred = k_is_supply ? -1 : 1;
        bool found = false;
        for (std::int8_t choice : {preferred, static_cast<std::int8_t>(-preferred)}) {
            swapped.a[k] = choice;
            if (!decode(inst, swapped).clamped) {
                found = true;
                break;
            }
        }
        if (found)
            out.push_back(std::move(swapped));
    }
    return out;
}

} // namespace itp
