#include "deltagame/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace deltagame::lp {

namespace {

constexpr double kEps = 1e-9;

struct Tableau {
    int nrows = 0;
    int ncols = 0;  // excluding rhs
    std::vector<double> t;  // nrows x (ncols + 1), last column = rhs
    std::vector<int> basis;

    double& at(int i, int j) { return t[static_cast<std::size_t>(i) * (ncols + 1) + j]; }
    double at(int i, int j) const { return t[static_cast<std::size_t>(i) * (ncols + 1) + j]; }
    double& rhs(int i) { return at(i, ncols); }

    void pivot(int r, int c) {
        const double p = at(r, c);
        for (int j = 0; j <= ncols; ++j) at(r, j) /= p;
        for (int i = 0; i < nrows; ++i) {
            if (i == r) continue;
            const double f = at(i, c);
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) at(i, j) -= f * at(r, j);
        }
        basis[r] = c;
    }
};

// Runs Bland-rule simplex on a tableau already in canonical form for the
// given cost vector. Columns with allowed[j] == 0 never enter the basis.
// Returns false on unboundedness.
bool run_simplex(Tableau& tb, std::vector<double>& cost_row, double& obj,
                 const std::vector<char>& allowed) {
    for (;;) {
        int enter = -1;
        for (int j = 0; j < tb.ncols; ++j) {
            if (allowed[j] && cost_row[j] < -kEps) {
                enter = j;
                break;  // Bland: smallest index
            }
        }
        if (enter < 0) return true;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < tb.nrows; ++i) {
            const double a = tb.at(i, enter);
            if (a > kEps) {
                const double ratio = tb.rhs(i) / a;
                if (ratio < best_ratio - kEps ||
                    (ratio < best_ratio + kEps &&
                     (leave < 0 || tb.basis[i] < tb.basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) return false;

        const double cf = cost_row[enter];
        tb.pivot(leave, enter);
        for (int j = 0; j <= tb.ncols; ++j) {
            const double v = (j == tb.ncols) ? tb.rhs(leave) : tb.at(leave, j);
            if (j == tb.ncols) obj += cf * v;
            else cost_row[j] -= cf * v;
        }
        cost_row[enter] = 0.0;
    }
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    const int n = static_cast<int>(lp.objective.size());
    const int m = static_cast<int>(lp.rows.size());
    for (const auto& row : lp.rows) {
        if (static_cast<int>(row.a.size()) != n) {
            throw std::invalid_argument("lp::solve: constraint dimension mismatch");
        }
    }

    // a.x >= b  ->  a.x - s = b; rows with b < 0 are negated so rhs >= 0.
    const int n_surplus = m;
    std::vector<int> art_col(m, -1);
    int n_art = 0;
    for (int i = 0; i < m; ++i) {
        if (lp.rows[i].b >= 0.0) art_col[i] = n + n_surplus + n_art++;
    }
    Tableau tb;
    tb.nrows = m;
    tb.ncols = n + n_surplus + n_art;
    tb.t.assign(static_cast<std::size_t>(m) * (tb.ncols + 1), 0.0);
    tb.basis.assign(m, -1);

    for (int i = 0; i < m; ++i) {
        const double sign = (lp.rows[i].b >= 0.0) ? 1.0 : -1.0;
        for (int j = 0; j < n; ++j) tb.at(i, j) = sign * lp.rows[i].a[j];
        tb.at(i, n + i) = -sign;  // surplus
        tb.rhs(i) = sign * lp.rows[i].b;
        if (art_col[i] >= 0) {
            tb.at(i, art_col[i]) = 1.0;
            tb.basis[i] = art_col[i];
        } else {
            tb.basis[i] = n + i;  // negated row: surplus enters with +1
        }
    }

    LpSolution sol;
    std::vector<char> allowed(tb.ncols, 1);

    // Phase 1: minimize the artificial sum.
    if (n_art > 0) {
        std::vector<double> cost(tb.ncols, 0.0);
        for (int i = 0; i < m; ++i) {
            if (art_col[i] >= 0) cost[art_col[i]] = 1.0;
        }
        double obj = 0.0;
        for (int i = 0; i < m; ++i) {
            if (tb.basis[i] >= 0 && cost[tb.basis[i]] != 0.0) {
                for (int j = 0; j < tb.ncols; ++j) cost[j] -= tb.at(i, j);
                obj += tb.rhs(i);
                cost[tb.basis[i]] = 0.0;
            }
        }
        run_simplex(tb, cost, obj, allowed);
        if (obj > 1e-7) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        // Drive any zero-level artificial out of the basis when possible.
        for (int i = 0; i < m; ++i) {
            if (tb.basis[i] >= n + n_surplus) {
                for (int j = 0; j < n + n_surplus; ++j) {
                    if (std::abs(tb.at(i, j)) > kEps) {
                        tb.pivot(i, j);
                        break;
                    }
                }
            }
        }
    }
    for (int j = n + n_surplus; j < tb.ncols; ++j) allowed[j] = 0;

    // Phase 2.
    std::vector<double> cost(tb.ncols, 0.0);
    for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
    double obj = 0.0;
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] < n && cost[tb.basis[i]] != 0.0) {
            const double cb = cost[tb.basis[i]];
            for (int j = 0; j < tb.ncols; ++j) cost[j] -= cb * tb.at(i, j);
            obj += cb * tb.rhs(i);
            cost[tb.basis[i]] = 0.0;
        }
    }
    if (!run_simplex(tb, cost, obj, allowed)) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] < n) sol.x[tb.basis[i]] = tb.rhs(i);
    }
    sol.objective_value = 0.0;
    for (int j = 0; j < n; ++j) sol.objective_value += lp.objective[j] * sol.x[j];
    return sol;
}

LinearProgram beta0_program(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::domain_error("theta must lie in [0, 1]");
    }
    LinearProgram lp;
    lp.objective = {1.0, 0.0, 0.0};  // x = (beta, s, t), minimize beta
    lp.rows = {
        {{3.0, 0.125, -1.0}, 3.0 * theta - 1.0},
        {{-2.0, -0.25, 1.0}, -theta},
        {{1.0, -0.125, -1.0}, 0.0},
    };
    return lp;
}

double beta0_closed(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::domain_error("theta must lie in [0, 1]");
    }
    if (theta <= 1.0 / 3.0) return 0.0;
    if (theta <= 0.5) return (3.0 * theta - 1.0) / 4.0;
    if (theta <= 2.0 / 3.0) return (5.0 * theta - 2.0) / 4.0;
    return 2.0 * theta - 1.0;
}

FBounds f_t(double theta) {
    FBounds f;
    f.lower = 0.5;
    f.upper = 0.5 + theta - beta0_closed(theta);
    f.lower_attained = true;
    f.upper_attained = true;
    return f;
}

}  // namespace deltagame::lp
