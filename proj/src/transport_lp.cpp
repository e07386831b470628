#include "itp/transport_lp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "itp/errors.hpp"

namespace itp {

namespace {

// Balanced transportation simplex over integers. Nodes are the m rows plus
// N columns; a basis is a spanning tree of m+N-1 cells. Start: northwest
// corner. Pricing: MODI potentials from the tree. Anti-cycling: Bland on
// the row-major cell order (first negative reduced cost enters; the
// lowest-index cell among minimal-flow '-' cells leaves).
class TransportSimplex {
public:
    TransportSimplex(int m, int ncols, const std::vector<Value>& cost,
                     const std::vector<Value>& supply, const std::vector<Value>& demand)
        : m_(m), n_(ncols), cost_(cost), supply_(supply), demand_(demand) {}

    void solve() {
        northwest_start();
        for (;;) {
            compute_potentials();
            const int enter = find_entering();
            if (enter < 0)
                break;
            pivot(enter);
        }
    }

    // Writes the basic flows into a dense row-major m x orig_cols matrix,
    // dropping any dummy column.
    void fill_flows(std::vector<Value>& out, int orig_cols) const {
        out.assign(static_cast<std::size_t>(m_) * orig_cols, 0);
        for (const auto& cell : basis_)
            if (cell.j < orig_cols)
                out[static_cast<std::size_t>(cell.i) * orig_cols + cell.j] = cell.flow;
    }

    Value objective() const {
        Value z = 0;
        for (const auto& cell : basis_)
            z = checked_add(z, checked_mul(cost_[idx(cell.i, cell.j)], cell.flow));
        return z;
    }

    const std::vector<Value>& row_potentials() const { return u_; }
    const std::vector<Value>& col_potentials() const { return v_; }

private:
    struct Cell {
        int i, j;
        Value flow;
    };

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    void northwest_start() {
        std::vector<Value> rs = supply_, rd = demand_;
        int i = 0, j = 0;
        // Staircase from (0,0) to (m-1,n-1): exactly m+n-1 cells, tree-shaped.
        while (i < m_ && j < n_) {
            Value q = std::min(rs[i], rd[j]);
            basis_.push_back({i, j, q});
            rs[i] -= q;
            rd[j] -= q;
            if (rs[i] == 0 && i + 1 < m_)
                ++i;
            else
                ++j;
        }
        rebuild_adjacency();
    }

    void rebuild_adjacency() {
        adj_.assign(m_ + n_, {});
        for (std::size_t c = 0; c < basis_.size(); ++c) {
            adj_[basis_[c].i].push_back(static_cast<int>(c));
            adj_[m_ + basis_[c].j].push_back(static_cast<int>(c));
        }
    }

    // Tree walk from row node 0; u_i + v_j = c_ij on basic cells.
    void compute_potentials() {
        u_.assign(m_, 0);
        v_.assign(n_, 0);
        std::vector<char> seen(m_ + n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int node = stack.back();
            stack.pop_back();
            for (int c : adj_[node]) {
                const Cell& cell = basis_[c];
                int other = node < m_ ? m_ + cell.j : cell.i;
                if (seen[other])
                    continue;
                seen[other] = 1;
                if (node < m_)
                    v_[cell.j] = cost_[idx(cell.i, cell.j)] - u_[cell.i];
                else
                    u_[cell.i] = cost_[idx(cell.i, cell.j)] - v_[cell.j];
                stack.push_back(other);
            }
        }
    }

    int find_entering() const {
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j)
                if (cost_[idx(i, j)] - u_[i] - v_[j] < 0)
                    return static_cast<int>(idx(i, j));
        return -1;
    }

    void pivot(int enter) {
        const int ei = enter / n_;
        const int ej = enter % n_;

        // Unique tree path from row node ei to column node m_+ej; together
        // with the entering cell it closes the pivot cycle.
        std::vector<int> parent_edge(m_ + n_, -1), parent_node(m_ + n_, -1);
        std::vector<char> seen(m_ + n_, 0);
        std::vector<int> stack{ei};
        seen[ei] = 1;
        while (!stack.empty()) {
            int node = stack.back();
            stack.pop_back();
            if (node == m_ + ej)
                break;
            for (int c : adj_[node]) {
                const Cell& cell = basis_[c];
                int other = node < m_ ? m_ + cell.j : cell.i;
                if (seen[other])
                    continue;
                seen[other] = 1;
                parent_edge[other] = c;
                parent_node[other] = node;
                stack.push_back(other);
            }
        }
        assert(seen[m_ + ej] && "basis must be a spanning tree");

        // Path cells from the column end back to ei; signs alternate with
        // the entering cell taking '+', so odd positions take '-'.
        std::vector<int> path;
        for (int node = m_ + ej; node != ei; node = parent_node[node])
            path.push_back(parent_edge[node]);
        std::reverse(path.begin(), path.end());

        Value theta = std::numeric_limits<Value>::max();
        int leave_pos = -1;
        for (std::size_t p = 0; p < path.size(); p += 2) { // '-' cells
            const Cell& cell = basis_[path[p]];
            const Value cell_idx = static_cast<Value>(idx(cell.i, cell.j));
            if (cell.flow < theta) {
                theta = cell.flow;
                leave_pos = static_cast<int>(p);
            } else if (cell.flow == theta && leave_pos >= 0) {
                const Cell& cur = basis_[path[leave_pos]];
                if (cell_idx < static_cast<Value>(idx(cur.i, cur.j)))
                    leave_pos = static_cast<int>(p);
            }
        }
        assert(leave_pos >= 0);

        for (std::size_t p = 0; p < path.size(); ++p)
            basis_[path[p]].flow += (p % 2 == 0) ? -theta : theta;
        basis_[path[leave_pos]] = {ei, ej, theta};
        rebuild_adjacency();
    }

    int m_, n_;
    const std::vector<Value>& cost_;
    const std::vector<Value>& supply_;
    const std::vector<Value>& demand_;
    std::vector<Cell> basis_;
    std::vector<std::vector<int>> adj_;
    std::vector<Value> u_, v_;
};

void check_scenario(const Scenario& sc) {
    if (sc.m < 1 || sc.n < 1 || sc.cost.size() != static_cast<std::size_t>(sc.m) * sc.n ||
        sc.supply.size() != static_cast<std::size_t>(sc.m) ||
        sc.demand.size() != static_cast<std::size_t>(sc.n))
        throw DimensionMismatch("evaluate: inconsistent scenario dimensions");
    for (Value c : sc.cost)
        if (c < 0)
            throw NegativeData("evaluate: negative cost");
    for (Value s : sc.supply)
        if (s < 0)
            throw NegativeData("evaluate: negative supply");
    for (Value d : sc.demand)
        if (d < 0)
            throw NegativeData("evaluate: negative demand");
}

} // namespace

EvalResult evaluate(const Scenario& sc) {
    check_scenario(sc);

    EvalResult res;
    const Value surplus = checked_sub(sc.total_supply(), sc.total_demand());
    if (surplus < 0) {
        res.status = LpStatus::Infeasible;
        return res;
    }

    const int m = sc.m;
    const int n = sc.n;
    const int ncols = surplus > 0 ? n + 1 : n; // dummy destination absorbs slack
    std::vector<Value> cost(static_cast<std::size_t>(m) * ncols, 0);
    std::vector<Value> demand(ncols, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            cost[static_cast<std::size_t>(i) * ncols + j] = sc.cost_at(i, j);
    for (int j = 0; j < n; ++j)
        demand[j] = sc.demand[j];
    if (surplus > 0)
        demand[n] = surplus;

    TransportSimplex simplex(m, ncols, cost, sc.supply, demand);
    simplex.solve();

    res.status = LpStatus::Optimal;
    res.objective = simplex.objective();
    simplex.fill_flows(res.flow, n);

    // Translate balanced-problem potentials into duals of the original LP:
    // shift by the dummy column's potential (or by max u when balanced) so
    // that u <= 0 and complementary slackness hold.
    const std::vector<Value>& ub = simplex.row_potentials();
    const std::vector<Value>& vb = simplex.col_potentials();
    Value shift;
    if (surplus > 0) {
        shift = vb[n]; // dummy-cell pricing makes ub_i + vb_n <= 0
    } else {
        Value umax = ub[0];
        for (int i = 1; i < m; ++i)
            umax = std::max(umax, ub[i]);
        shift = -umax; // any shift works when balanced; this pins max u to 0
    }
    res.dual_u.resize(m);
    res.dual_v.resize(n);
    for (int i = 0; i < m; ++i)
        res.dual_u[i] = checked_add(ub[i], shift);
    for (int j = 0; j < n; ++j)
        res.dual_v[j] = checked_sub(vb[j], shift);

    assert(verify_optimality(sc, res));
    return res;
}

bool verify_optimality(const Scenario& sc, const EvalResult& res) {
    if (res.status != LpStatus::Optimal)
        return false;
    if (res.flow.size() != static_cast<std::size_t>(sc.m) * sc.n ||
        res.dual_u.size() != static_cast<std::size_t>(sc.m) ||
        res.dual_v.size() != static_cast<std::size_t>(sc.n))
        return false;

    Value obj = 0;
    for (int i = 0; i < sc.m; ++i) {
        Value row = 0;
        for (int j = 0; j < sc.n; ++j) {
            Value x = res.flow_at(i, j, sc.n);
            if (x < 0)
                return false;
            row = checked_add(row, x);
            obj = checked_add(obj, checked_mul(sc.cost_at(i, j), x));
        }
        if (row > sc.supply[i])
            return false;
    }
    for (int j = 0; j < sc.n; ++j) {
        Value col = 0;
        for (int i = 0; i < sc.m; ++i)
            col = checked_add(col, res.flow_at(i, j, sc.n));
        if (col != sc.demand[j])
            return false;
    }
    if (obj != res.objective)
        return false;

    // Dual feasibility and strong duality.
    Value dual_obj = 0;
    for (int i = 0; i < sc.m; ++i) {
        if (res.dual_u[i] > 0)
            return false;
        dual_obj = checked_add(dual_obj, checked_mul(res.dual_u[i], sc.supply[i]));
    }
    for (int j = 0; j < sc.n; ++j)
        dual_obj = checked_add(dual_obj, checked_mul(res.dual_v[j], sc.demand[j]));
    for (int i = 0; i < sc.m; ++i)
        for (int j = 0; j < sc.n; ++j)
            if (checked_add(res.dual_u[i], res.dual_v[j]) > sc.cost_at(i, j))
                return false;
    return dual_obj == res.objective;
}

} // namespace itp
