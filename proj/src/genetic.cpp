#include <algorithm>
#include <cassert>
#include <numeric>

#include "itp/errors.hpp"
#include "itp/heuristics.hpp"
#include "ls_core.hpp"

namespace itp {

const char* to_string(SelectionKind k) {
    switch (k) {
    case SelectionKind::Fps1:
        return "fps1";
    case SelectionKind::Fps2:
        return "fps2";
    case SelectionKind::Fps3:
        return "fps3";
    case SelectionKind::Tournament:
        return "tournament";
    }
    return "?";
}

SelectionKind selection_from_string(const std::string& s) {
    if (s == "fps1")
        return SelectionKind::Fps1;
    if (s == "fps2")
        return SelectionKind::Fps2;
    if (s == "fps3")
        return SelectionKind::Fps3;
    if (s == "tournament")
        return SelectionKind::Tournament;
    throw ParseError("unknown selection strategy: " + s);
}

std::vector<double> selection_weights(const std::vector<Value>& fitnesses, SelectionKind kind,
                                      double fps3_ratio) {
    const std::size_t n = fitnesses.size();
    std::vector<double> w(n, 1.0);
    if (n == 0)
        return w;
    const auto [lo_it, hi_it] = std::minmax_element(fitnesses.begin(), fitnesses.end());
    const Value f_min = *lo_it, f_max = *hi_it;

    switch (kind) {
    case SelectionKind::Fps1: {
        Value sum = 0;
        for (Value f : fitnesses)
            sum = checked_add(sum, f);
        if (sum == 0)
            return w; // degenerate, uniform
        for (std::size_t i = 0; i < n; ++i)
            w[i] = static_cast<double>(fitnesses[i]);
        return w;
    }
    case SelectionKind::Fps2: {
        if (f_min == f_max)
            return w; // degenerate, uniform
        for (std::size_t i = 0; i < n; ++i)
            w[i] = static_cast<double>(fitnesses[i] - f_min);
        return w;
    }
    case SelectionKind::Fps3: {
        if (f_min == f_max)
            return w; // degenerate, uniform
        // pi_S^3 weights f - g with g pinned so that max/min probability
        // equals the ratio R; scaled by (R-1) to stay non-negative:
        // w = (R-1)(f - f_min) + (f_max - f_min).
        if (fps3_ratio <= 1.0)
            return w; // ratio 1 means uniform by definition
        const double spread = static_cast<double>(f_max - f_min);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = (fps3_ratio - 1.0) * static_cast<double>(fitnesses[i] - f_min) + spread;
        return w;
    }
    case SelectionKind::Tournament:
        throw Error("selection_weights: tournament selection is not weight-based");
    }
    return w;
}

std::vector<int> select_indices(const std::vector<Value>& fitnesses, const GaParams& params,
                                int count, Rng& rng) {
    const int n = static_cast<int>(fitnesses.size());
    if (n == 0)
        throw Error("select: empty population");

    std::vector<int> out;
    out.reserve(count);

    const int elites = std::min(params.elite_count, count);
    if (elites > 0) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fitnesses[a] > fitnesses[b]; });
        for (int e = 0; e < elites && e < n; ++e)
            out.push_back(order[e]);
    }

    const int rest = count - static_cast<int>(out.size());
    if (params.selection == SelectionKind::Tournament) {
        const int size = std::max(1, params.tournament_size);
        for (int l = 0; l < rest; ++l) {
            int winner = -1;
            for (int t = 0; t < size; ++t) {
                const int cand = static_cast<int>(rng.uniform_index(n));
                if (winner < 0 || fitnesses[cand] > fitnesses[winner])
                    winner = cand; // strict: earlier draw wins ties
            }
            out.push_back(winner);
        }
        return out;
    }

    const std::vector<double> w = selection_weights(fitnesses, params.selection, params.fps3_ratio);
    std::vector<double> cum(w.size());
    std::partial_sum(w.begin(), w.end(), cum.begin());
    const double total = cum.back();
    for (int l = 0; l < rest; ++l) {
        const double r = rng.uniform01() * total;
        const auto it = std::upper_bound(cum.begin(), cum.end(), r);
        int pick = static_cast<int>(it - cum.begin());
        if (pick >= n)
            pick = n - 1; // fp guard
        out.push_back(pick);
    }
    return out;
}

Configuration mutate(const IntervalTpInstance& inst, const Configuration& cfg, Rng& rng) {
    const int total = cfg.size();
    const int k = cfg.free_index;
    const DecodedScenario dec = decode(inst, cfg);

    if (!dec.balanced) {
        // Flip one uniformly random non-free coordinate.
        std::size_t r = rng.uniform_index(static_cast<std::size_t>(total) - 1);
        const int i = static_cast<int>(r) + (static_cast<int>(r) >= k ? 1 : 0);
        Configuration out = cfg;
        out.a[i] = static_cast<std::int8_t>(-out.a[i]);
        return out;
    }

    // Balanced: try to move the free index. suitable[v] holds the indices i
    // whose free value absorbs pinning a_k to the bound v.
    auto suitable_for = [&](std::int8_t v) {
        std::vector<int> idx;
        Configuration probe = cfg;
        probe.a[k] = v;
        for (int i = 0; i < total; ++i) {
            if (i == k)
                continue;
            const std::int8_t saved = probe.a[i];
            probe.a[i] = 0;
            probe.free_index = i;
            if (decode(inst, probe).balanced)
                idx.push_back(i);
            probe.a[i] = saved;
        }
        return idx;
    };
    const std::vector<int> down = suitable_for(-1);
    const std::vector<int> up = suitable_for(1);

    const std::vector<int>* chosen = nullptr;
    std::int8_t bound = 0;
    if (!down.empty() && !up.empty()) {
        bound = rng.uniform_index(2) == 0 ? std::int8_t{-1} : std::int8_t{1};
        chosen = bound < 0 ? &down : &up;
    } else if (!down.empty()) {
        bound = -1;
        chosen = &down;
    } else if (!up.empty()) {
        bound = 1;
        chosen = &up;
    }

    if (chosen != nullptr) {
        Configuration out = cfg;
        out.a[k] = bound;
        const int i = (*chosen)[rng.uniform_index(chosen->size())];
        out.a[i] = 0;
        out.free_index = i;
        assert(decode(inst, out).balanced);
        return out;
    }

    // Neither bound re-balances; some single flip must (the free value
    // absorbs it), keeping k free.
    std::vector<int> flippable;
    for (int i = 0; i < total; ++i) {
        if (i == k)
            continue;
        Configuration probe = cfg;
        probe.a[i] = static_cast<std::int8_t>(-probe.a[i]);
        if (decode(inst, probe).balanced)
            flippable.push_back(i);
    }
    if (flippable.empty())
        throw Error("mutate: balanced configuration with no balanced mutation");
    Configuration out = cfg;
    const int i = flippable[rng.uniform_index(flippable.size())];
    out.a[i] = static_cast<std::int8_t>(-out.a[i]);
    assert(decode(inst, out).balanced);
    return out;
}

Configuration crossover(const Configuration& a, const Configuration& b, Rng& rng) {
    if (a.size() != b.size())
        throw DimensionMismatch("crossover: parents differ in length");
    const int total = a.size();
    const int k = a.free_index;
    const int l = b.free_index;

    Configuration z;
    z.a.resize(total);
    if (k == l) {
        z.a[k] = 0;
        z.free_index = k;
        for (int i = 0; i < total; ++i) {
            if (i == k)
                continue;
            z.a[i] = rng.uniform_index(2) == 0 ? a.a[i] : b.a[i];
        }
        return z;
    }
    if (rng.uniform_index(2) == 0) {
        z.a[k] = 0;
        z.free_index = k;
        z.a[l] = a.a[l];
    } else {
        z.a[l] = 0;
        z.free_index = l;
        z.a[k] = b.a[k];
    }
    for (int i = 0; i < total; ++i) {
        if (i == k || i == l)
            continue;
        z.a[i] = rng.uniform_index(2) == 0 ? a.a[i] : b.a[i];
    }
    return z;
}

namespace {

// One engine backs both algorithms; the genetic algorithm is the memetic one
// with the local-search probability pinned to zero. The probability coins
// are drawn either way, so both algorithms consume the identical stream and
// ma with prob_local_search == 0 reproduces ga exactly.
//
// Draw order on the single seeded stream:
//   1. initial population: per member, free index + signs, then the
//      local-search coin (and the search's neighborhood shuffles if taken);
//   2. per generation: selection draws (one weighted draw per pick, or
//      tournament_size uniform draws per pick), then per consecutive pair a
//      crossover coin followed, on success, by the crossover's own draws and
//      the child's local-search coin, then one mutation coin per member of Q
//      followed, on success, by the mutation's draws.
void validate_params(const GaParams& p) {
    if (p.pop_size < 1)
        throw ValidationError("pop_size must be >= 1");
    if (p.stall_limit < 1)
        throw ValidationError("stall_limit must be >= 1");
    for (double prob : {p.prob_crossover, p.prob_mutation_balanced, p.prob_mutation_unbalanced,
                        p.prob_local_search})
        if (prob < 0.0 || prob > 1.0)
            throw ValidationError("probabilities must lie in [0, 1]");
    if (p.selection == SelectionKind::Tournament &&
        (p.tournament_size < 1 || p.tournament_size > p.pop_size))
        throw ValidationError("tournament size must be in [1, pop_size]");
    if (p.selection == SelectionKind::Fps3 && p.fps3_ratio < 1.0)
        throw ValidationError("fps3 ratio must be >= 1");
    if (p.elite_count < 0)
        throw ValidationError("elite count must be >= 0");
    if (p.ls_iteration_cap < 0)
        throw ValidationError("local-search iteration cap must be >= 0");
}

RunReport evolve(const IntervalTpInstance& inst, const GaParams& params, bool memetic_run) {
    if (classify_feasibility(inst) == Feasibility::NoFeasibleScenario)
        throw ValidationError("genetic/memetic: instance has no feasible scenario");
    validate_params(params);

    const detail::RunClock clock(params.time_limit_seconds);
    Rng rng(params.seed);
    FitnessCache cache;

    RunReport rep;
    rep.algorithm = memetic_run ? "ma" : "ga";
    rep.instance_name = inst.name;
    rep.params = params;
    rep.seed = params.seed;

    const double pls = memetic_run ? params.prob_local_search : 0.0;
    auto maybe_improve = [&](Configuration& cfg) {
        const double coin = rng.uniform01();
        if (coin < pls)
            cfg = detail::ls_first_core(inst, cfg, params.ls_iteration_cap, rng, cache, clock,
                                        nullptr)
                      .config;
    };

    std::vector<Configuration> pop;
    pop.reserve(params.pop_size);
    for (int l = 0; l < params.pop_size; ++l)
        pop.push_back(random_feasible_configuration(inst, rng));
    for (auto& member : pop)
        maybe_improve(member);

    bool have_incumbent = false;
    Value worst_value = 0;
    Configuration worst_config;
    int stall = 0;

    for (;;) {
        ++rep.iteration_count;
        bool improved = false;
        std::vector<Value> fits(pop.size());
        for (std::size_t idx = 0; idx < pop.size(); ++idx) {
            fits[idx] = fitness(inst, pop[idx], cache);
            if (!have_incumbent || fits[idx] > worst_value) {
                worst_value = fits[idx];
                worst_config = pop[idx];
                have_incumbent = true;
                improved = true;
                rep.trace.push_back({clock.seconds(), worst_value});
            }
        }

        const std::vector<int> chosen =
            select_indices(fits, params, params.pop_size, rng);
        std::vector<Configuration> next;
        next.reserve(chosen.size() + chosen.size() / 2);
        for (int idx : chosen)
            next.push_back(pop[idx]);

        const std::size_t pairs = next.size() / 2;
        for (std::size_t p = 0; p < pairs; ++p) {
            const double coin = rng.uniform01();
            if (coin < params.prob_crossover) {
                Configuration child = crossover(next[2 * p], next[2 * p + 1], rng);
                maybe_improve(child);
                next.push_back(std::move(child));
            }
        }

        for (auto& member : next) {
            const bool balanced = decode(inst, member).balanced;
            const double pm =
                balanced ? params.prob_mutation_balanced : params.prob_mutation_unbalanced;
            const double coin = rng.uniform01();
            if (coin < pm)
                member = mutate(inst, member, rng);
        }
        pop = std::move(next);

        stall = improved ? 0 : stall + 1;
        if (stall >= params.stall_limit)
            break;
        if (clock.expired())
            break;
    }

    // The incumbent may encode an infeasible scenario scored through repair;
    // report the feasible configuration carrying that value.
    rep.best_config = fitness_representative(inst, worst_config);
    rep.best_value = worst_value;
    rep.lp_count = cache.evals;
    rep.wall_seconds = clock.seconds();
    return rep;
}

} // namespace

RunReport genetic(const IntervalTpInstance& inst, const GaParams& params) {
    return evolve(inst, params, false);
}

RunReport memetic(const IntervalTpInstance& inst, const GaParams& params) {
    return evolve(inst, params, true);
}

} // namespace itp
