#ifndef ITP_ENCODING_HPP
#define ITP_ENCODING_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "itp/instance.hpp"
#include "itp/transport_lp.hpp"

namespace itp {

// Vector in {-1,0,+1}^(m+n) with exactly one zero. Positions 0..m-1 address
// supplies, m..m+n-1 address demands; -1 picks the lower bound, +1 the upper
// bound, and the zero marks the free value computed at decode time.
struct Configuration {
    std::vector<std::int8_t> a;
    int free_index = -1;

    static Configuration from_entries(std::vector<std::int8_t> entries);

    int size() const { return static_cast<int>(a.size()); }

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Compact text form over {-,0,+}, e.g. "0++" for (0,+1,+1).
std::string to_string(const Configuration& cfg);
Configuration configuration_from_string(const std::string& text);

struct DecodedScenario {
    Scenario scenario; // cost fixed at the upper bound matrix
    bool balanced = false; // total supply == total demand
    bool feasible = false; // total supply >= total demand
    bool clamped = false; // free value was cut by an interval bound
};

// Maps a configuration to its quasi-extreme scenario. Bound entries sit
// exactly on the interval bounds; the free value balances the scenario when
// the balancing value fits its interval and clamps to the nearest bound
// otherwise (upper clamp => infeasible by construction).
DecodedScenario decode(const IntervalTpInstance& inst, const Configuration& cfg);

// Flips supplies -1 -> +1 (ascending index), then demands +1 -> -1, stopping
// at the first feasible decode; the free index never moves. Throws
// RepairFailed when no feasible scenario exists at all. Intended for
// configurations whose decode is infeasible; feasible input is returned
// unchanged.
Configuration repair(const IntervalTpInstance& inst, const Configuration& cfg);

// Memoizes fitness values by configuration; per-run object.
class FitnessCache {
public:
    // Logical scenario evaluations requested (what the run reports count as
    // "LPs solved"; cache hits included to match an uncached implementation).
    std::uint64_t evals = 0;
    std::uint64_t hits = 0;

    bool lookup(const std::string& key, Value& out) const {
        auto it = map_.find(key);
        if (it == map_.end())
            return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, Value v) { map_.emplace(key, v); }

private:
    std::unordered_map<std::string, Value> map_;
};

// f(a): optimal value of the decoded scenario; infeasible configurations are
// scored by their repaired counterpart (the configuration itself is not
// modified). Propagates RepairFailed.
Value fitness(const IntervalTpInstance& inst, const Configuration& cfg, FitnessCache& cache);

// The configuration actually scored by fitness(): cfg itself when its decode
// is feasible, repair(cfg) otherwise.
Configuration fitness_representative(const IntervalTpInstance& inst, const Configuration& cfg);

// Neighborhood of a configuration with free index k: for every other index i
// try flipping a_i while the free value re-balances; when that clamps, swap
// the free position to i and put k on a bound (worsening direction preferred
// when both bounds re-balance; the swap is skipped when neither does).
// Neighbors are emitted in ascending i; each decodes balanced and feasible.
std::vector<Configuration> neighborhood(const IntervalTpInstance& inst, const Configuration& cfg);

} // namespace itp

#endif
