#ifndef ITP_TRANSPORT_LP_HPP
#define ITP_TRANSPORT_LP_HPP

#include <vector>

#include "itp/instance.hpp"
#include "itp/value.hpp"

namespace itp {

enum class LpStatus { Optimal, Infeasible };

struct EvalResult {
    LpStatus status = LpStatus::Infeasible;
    Value objective = 0;
    std::vector<Value> flow; // row-major m*n, empty when infeasible
    // Dual potentials certifying optimality: u_i <= 0, u_i + v_j <= c_ij,
    // and sum u_i s_i + sum v_j d_j == objective. Filled by `evaluate`;
    // `evaluate_oracle` leaves them empty.
    std::vector<Value> dual_u; // m
    std::vector<Value> dual_v; // n

    Value flow_at(int i, int j, int n) const { return flow[static_cast<std::size_t>(i) * n + j]; }
};

// Optimal value f(C, s, d) of one concrete scenario:
//   min sum c_ij x_ij  s.t.  sum_j x_ij <= s_i,  sum_i x_ij = d_j,  x >= 0.
// Infeasible iff total supply < total demand. Solved by a transportation
// simplex on the balanced problem obtained by appending a zero-cost dummy
// destination; Bland's rule on the row-major cell order prevents cycling.
// Pure integer arithmetic; flows, objective and duals are exact.
EvalResult evaluate(const Scenario& sc);

// Same contract, solved by a textbook dense two-phase simplex on the
// explicit LP with exact rational arithmetic. Slow; used in tests and
// cross-checks only, as an independent path against `evaluate`.
EvalResult evaluate_oracle(const Scenario& sc);

// Checks the full optimality certificate of an Optimal result: primal
// feasibility, objective consistency, dual feasibility and strong duality.
// Requires the dual potentials, so it applies to `evaluate` results.
bool verify_optimality(const Scenario& sc, const EvalResult& res);

} // namespace itp

#endif
