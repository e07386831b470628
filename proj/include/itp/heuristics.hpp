#ifndef ITP_HEURISTICS_HPP
#define ITP_HEURISTICS_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "itp/encoding.hpp"
#include "itp/instance.hpp"
#include "itp/rng.hpp"

namespace itp {

enum class SelectionKind { Fps1, Fps2, Fps3, Tournament };

const char* to_string(SelectionKind k);
SelectionKind selection_from_string(const std::string& s);

struct GaParams {
    int pop_size = 30; // N_pop
    int stall_limit = 20; // t_GA: stop after this many non-improving generations
    double prob_crossover = 1.0; // pi_C
    double prob_mutation_balanced = 0.1; // pi_M for balanced scenarios
    double prob_mutation_unbalanced = 0.7; // pi_M for unbalanced scenarios
    double prob_local_search = 0.7; // pi_LS (memetic only)
    int ls_iteration_cap = 0; // t_LS, 0 = unlimited
    SelectionKind selection = SelectionKind::Tournament;
    int tournament_size = 3;
    double fps3_ratio = 4.0; // fixed max/min selection-probability ratio of pi_S^3
    int elite_count = 0;
    std::uint64_t seed = 0;
    double time_limit_seconds = 0; // 0 = none; checked per generation / LS pass
};

struct TracePoint {
    double seconds = 0;
    Value value = 0;
};

struct RunReport {
    std::string algorithm; // exact | ls-first | ls-best | ga | ma
    std::string instance_name;
    GaParams params;
    std::uint64_t seed = 0;
    Value best_value = 0;
    Configuration best_config;
    std::uint64_t lp_count = 0; // scenario evaluations requested
    std::uint64_t iteration_count = 0; // LS passes or GA/MA generations
    double wall_seconds = 0;
    std::vector<TracePoint> trace; // best-so-far improvements, non-decreasing
    // exact-only counters
    std::uint64_t scenarios_examined = 0;
    std::uint64_t scenarios_skipped_infeasible = 0;
    std::uint64_t scenarios_skipped_unbalanced = 0;
    bool used_shortcut = false;
};

// ------------------------------------------------------------ construction

// Free index uniform in 0..m+n-1, then independent uniform +/-1 on the other
// coordinates in ascending order.
Configuration random_configuration(int m, int n, Rng& rng);

// Random configuration, repaired when its decode is infeasible.
Configuration random_feasible_configuration(const IntervalTpInstance& inst, Rng& rng);

// Random configuration decoding balanced and feasible: rejection-samples
// random feasible configurations (bounded attempts), then falls back to a
// deterministic greedy walk from (s_hi, d_lo) towards (s_lo, d_hi). When the
// instance admits no balanced scenario at all (strictly all-feasible), the
// fallback returns the all-(s_lo, d_hi) configuration, which decodes
// feasible and carries the worst value of such instances.
Configuration random_balanced_configuration(const IntervalTpInstance& inst, Rng& rng);

// -------------------------------------------------------------- operators

// Unnormalized selection weights of the fitness-proportionate strategies.
// All-equal fitness degenerates FPS2/FPS3 (and an all-zero sum degenerates
// FPS1); those cases fall back to uniform weights.
std::vector<double> selection_weights(const std::vector<Value>& fitnesses, SelectionKind kind,
                                      double fps3_ratio);

// Draws `count` population indices with replacement. Elites (fitness-best,
// ties by lower index) are copied first; the rest come from the strategy:
// one cumulative-weight draw per pick for FPS, or `tournament_size` uniform
// draws per pick with the first-drawn maximum winning for tournaments.
std::vector<int> select_indices(const std::vector<Value>& fitnesses, const GaParams& params,
                                int count, Rng& rng);

// Unbalanced scenario: flips one uniformly random non-free coordinate.
// Balanced scenario: moves the free index -- pins a_k to a bound that some
// other coordinate can absorb as the new free value (random among the bound
// choices when both work, uniform among the absorbing indices); when neither
// bound works, keeps k free and flips a coordinate whose flip re-balances.
// Balanced input always yields balanced output.
Configuration mutate(const IntervalTpInstance& inst, const Configuration& cfg, Rng& rng);

// Uniform crossover inheriting the free position from one parent: either
// z_k = 0 and z_l = a_l, or z_l = 0 and z_k = b_k (coin flip), then every
// other coordinate comes from a or b independently. Result is always a valid
// configuration; it may decode unbalanced or infeasible.
Configuration crossover(const Configuration& a, const Configuration& b, Rng& rng);

// ---------------------------------------------------------------- solvers

// First-improvement local search from `start` (must decode feasible; the
// documented contract wants balanced too). Each pass scans the neighborhood
// in a fresh uniformly random order and moves to the first strictly better
// configuration; stops when a pass finds no improvement or after `cap`
// passes (0 = unlimited). iteration_count includes the final failing pass.
RunReport local_search_first(const IntervalTpInstance& inst, const Configuration& start, int cap,
                             std::uint64_t seed, double time_limit_seconds = 0);

// Best-improvement variant: evaluates every neighbor each pass and moves to
// the best strict improvement (ties to the lowest neighbor index).
// Deterministic given the start.
RunReport local_search_best(const IntervalTpInstance& inst, const Configuration& start, int cap,
                            std::uint64_t seed, double time_limit_seconds = 0);

// Genetic algorithm: random feasible initial population; per generation
// evaluate fitness and update the incumbent, select pop_size members, pair
// them consecutively, insert crossover children with prob_crossover, mutate
// every member with the balanced/unbalanced-specific probability; stops once
// the incumbent stalls for stall_limit generations.
RunReport genetic(const IntervalTpInstance& inst, const GaParams& params);

// Memetic algorithm: the genetic loop with first-improvement local search
// (capped at ls_iteration_cap) applied to each initial member and to each
// inserted crossover child with probability prob_local_search.
RunReport memetic(const IntervalTpInstance& inst, const GaParams& params);

} // namespace itp

#endif
