#pragma once

#include <vector>

namespace deltagame::lp {

/// minimize c.x subject to rows[i].a . x >= rows[i].b and x >= 0.
struct LinearProgram {
    struct Row {
        std::vector<double> a;
        double b = 0.0;
    };
    std::vector<double> objective;
    std::vector<Row> rows;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> x;
    double objective_value = 0.0;
};

struct FBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_attained = true;
    bool upper_attained = true;
};

/// Two-phase primal simplex with Bland's anti-cycling rule.
LpSolution solve(const LinearProgram& lp);

/// The 3-variable program of the tracial-state constraint reduction:
/// minimize beta over (beta, s, t) >= 0 with
///   3 beta + s/8 - t >= 3 theta - 1
///  -2 beta - s/4 + t >= -theta
///     beta - s/8 - t >= 0.
LinearProgram beta0_program(double theta);

/// Piecewise: 0 on [0,1/3], (3 theta-1)/4 on [1/3,1/2],
/// (5 theta-2)/4 on [1/2,2/3], 2 theta-1 on [2/3,1].
double beta0_closed(double theta);

/// f_t^l = 1/2, f_t^u = 1/2 + theta - beta0_closed(theta); identical for
/// the q, qa and qc models.
FBounds f_t(double theta);

}  // namespace deltagame::lp
