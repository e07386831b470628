#ifndef ITP_EXACT_HPP
#define ITP_EXACT_HPP

#include <cstdint>

#include "itp/encoding.hpp"
#include "itp/instance.hpp"
#include "itp/transport_lp.hpp"

namespace itp {

struct ExactOptions {
    // Enumeration size guard: (m+n) * 2^(m+n-1) scenarios; refuse above this.
    int max_total_indices = 24;
    // When all scenarios are feasible the worst value sits at (C_hi, s_lo,
    // d_hi); taking it directly skips the enumeration entirely.
    bool use_shortcut = true;
    // Skip bound assignments whose balancing free value falls below its
    // interval (the scenario would be unbalanced). Disabling evaluates the
    // clamped feasible scenario instead of skipping; that is the wider
    // quasi-extreme enumeration, needed for all-feasible instances when the
    // shortcut is off.
    bool balanced_filter = true;
};

struct ExactResult {
    Value worst_value = 0;
    Scenario worst_scenario;
    Configuration worst_config;
    std::uint64_t scenarios_examined = 0;
    std::uint64_t scenarios_skipped_infeasible = 0;
    std::uint64_t scenarios_skipped_unbalanced = 0;
    bool used_shortcut = false;
};

// Exact worst finite optimal value by enumerating balanced quasi-extreme
// scenarios: for every free index k (supplies first, then demands) and every
// +/- assignment of the other m+n-1 coordinates (Gray-code order), the free
// value is set to balance the scenario; assignments that cannot be made
// feasible, or that would be unbalanced, are skipped and counted.
// Requires at least one feasible scenario and m+n within the cap.
ExactResult exact_worst(const IntervalTpInstance& inst, const ExactOptions& opts = {});

// Independent brute-force bound: max of evaluate(C_hi, s, d) over every
// integer point of the supply/demand box with sum s >= sum d. Equal to
// exact_worst on integer instances; exponential, guarded by `budget` on the
// number of grid points.
Value grid_oracle_worst(const IntervalTpInstance& inst, std::uint64_t budget = 10'000'000);

} // namespace itp

#endif
