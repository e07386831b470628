// Reference LP path: dense two-phase primal simplex over exact rationals.
// Deliberately naive and independent of the transportation kernel; only the
// scenario-to-LP translation is shared knowledge between the two solvers.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "itp/errors.hpp"
#include "itp/transport_lp.hpp"

namespace itp {

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Tableau simplex for  min c'x  s.t.  Ax = b, x >= 0  with b >= 0.
// Bland's rule throughout. Assumes a starting basis of identity columns
// (artificials/slacks) appended by the caller.
class DenseSimplex {
public:
    DenseSimplex(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs, int num_vars)
        : a_(std::move(rows)), b_(std::move(rhs)), n_(num_vars), basis_(a_.size(), -1) {}

    // Runs phase 1 on artificial columns [art_begin, art_begin+rows) then
    // phase 2 on the given objective. Returns false if phase 1 cannot reach
    // zero (infeasible).
    bool solve(const std::vector<Rat>& objective, int art_begin) {
        const int rows = static_cast<int>(a_.size());
        for (int r = 0; r < rows; ++r)
            basis_[r] = art_begin + r;

        std::vector<Rat> phase1(n_, Rat(0));
        for (int r = 0; r < rows; ++r)
            phase1[art_begin + r] = 1;
        run(phase1);
        if (objective_value(phase1) != 0)
            return false;

        // Pivot any artificial still basic (at zero level) out of the basis,
        // then freeze artificial columns so phase 2 never re-enters them.
        for (int r = 0; r < rows; ++r) {
            if (basis_[r] < art_begin)
                continue;
            int enter = -1;
            for (int c = 0; c < art_begin; ++c)
                if (a_[r][c] != 0) {
                    enter = c;
                    break;
                }
            if (enter >= 0)
                pivot(r, enter);
            // else: the row is all zeros over real columns (redundant
            // constraint); the artificial stays basic at level 0.
        }
        frozen_begin_ = art_begin;
        run(objective);
        return true;
    }

    Rat objective_value(const std::vector<Rat>& objective) const {
        Rat z = 0;
        for (std::size_t r = 0; r < basis_.size(); ++r)
            z += objective[basis_[r]] * b_[r];
        return z;
    }

    Rat var_value(int c) const {
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] == c)
                return b_[r];
        return Rat(0);
    }

private:
    void run(const std::vector<Rat>& objective) {
        for (;;) {
            // Reduced costs via the current basis: r_c = c_c - y'A_c with
            // y' read off the basic objective row. Recomputed densely.
            int enter = -1;
            for (int c = 0; c < n_; ++c) {
                if (frozen_begin_ >= 0 && c >= frozen_begin_)
                    break;
                if (is_basic(c))
                    continue;
                Rat rc = objective[c];
                for (std::size_t r = 0; r < basis_.size(); ++r)
                    rc -= objective[basis_[r]] * a_[r][c];
                if (rc < 0) {
                    enter = c; // Bland: first negative wins
                    break;
                }
            }
            if (enter < 0)
                return;

            int leave = -1;
            Rat best;
            for (std::size_t r = 0; r < basis_.size(); ++r) {
                if (a_[r][enter] <= 0)
                    continue;
                Rat ratio = b_[r] / a_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0)
                throw Error("dense simplex: unbounded, transportation LPs cannot be");
            pivot(leave, enter);
        }
    }

    bool is_basic(int c) const {
        for (int b : basis_)
            if (b == c)
                return true;
        return false;
    }

    void pivot(int row, int col) {
        Rat p = a_[row][col];
        for (int c = 0; c < n_; ++c)
            a_[row][c] /= p;
        b_[row] /= p;
        for (std::size_t r = 0; r < a_.size(); ++r) {
            if (static_cast<int>(r) == row || a_[r][col] == 0)
                continue;
            Rat f = a_[r][col];
            for (int c = 0; c < n_; ++c)
                a_[r][c] -= f * a_[row][c];
            b_[r] -= f * b_[row];
        }
        basis_[row] = col;
    }

    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_;
    int n_;
    std::vector<int> basis_;
    int frozen_begin_ = -1;
};

} // namespace

EvalResult evaluate_oracle(const Scenario& sc) {
    const int m = sc.m;
    const int n = sc.n;
    if (m < 1 || n < 1 || sc.cost.size() != static_cast<std::size_t>(m) * n ||
        sc.supply.size() != static_cast<std::size_t>(m) || sc.demand.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("evaluate_oracle: inconsistent scenario dimensions");
    for (Value c : sc.cost)
        if (c < 0)
            throw NegativeData("evaluate_oracle: negative cost");
    for (Value s : sc.supply)
        if (s < 0)
            throw NegativeData("evaluate_oracle: negative supply");
    for (Value d : sc.demand)
        if (d < 0)
            throw NegativeData("evaluate_oracle: negative demand");

    EvalResult res;
    if (sc.total_supply() < sc.total_demand()) {
        res.status = LpStatus::Infeasible;
        return res;
    }

    // Columns: x_ij (m*n), slack_i (m), artificial rows (m+n).
    const int nx = m * n;
    const int nslack = m;
    const int nart = m + n;
    const int ncols = nx + nslack + nart;
    const int nrows = m + n;

    std::vector<std::vector<Rat>> a(nrows, std::vector<Rat>(ncols, Rat(0)));
    std::vector<Rat> b(nrows);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][i * n + j] = 1;
        a[i][nx + i] = 1; // slack: sum_j x_ij + w_i = s_i
        b[i] = sc.supply[i];
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i)
            a[m + j][i * n + j] = 1;
        b[m + j] = sc.demand[j];
    }
    for (int r = 0; r < nrows; ++r)
        a[r][nx + nslack + r] = 1;

    std::vector<Rat> objective(ncols, Rat(0));
    for (int c = 0; c < nx; ++c)
        objective[c] = sc.cost[c];

    DenseSimplex simplex(std::move(a), std::move(b), ncols);
    if (!simplex.solve(objective, nx + nslack))
        throw Error("dense simplex: phase 1 failed on a supply-sufficient scenario");

    res.status = LpStatus::Optimal;
    res.flow.resize(nx);
    Rat z = simplex.objective_value(objective);
    for (int c = 0; c < nx; ++c) {
        Rat x = simplex.var_value(c);
        if (denominator(x) != 1)
            throw Error("dense simplex: fractional optimal flow on integer data");
        res.flow[c] = static_cast<Value>(numerator(x));
    }
    if (denominator(z) != 1)
        throw Error("dense simplex: fractional objective on integer data");
    res.objective = static_cast<Value>(numerator(z));
    return res;
}

} // namespace itp
