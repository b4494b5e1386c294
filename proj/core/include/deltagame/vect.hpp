#pragma once

#include "deltagame/game.hpp"
#include "deltagame/linalg.hpp"

namespace deltagame::vect {

struct BetaRange {
    double min = 0.0;
    double max = 0.0;
};

struct FBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_attained = true;
    bool upper_attained = true;
};

struct Witness {
    std::vector<std::vector<double>> vectors;  // h, x0..x2, y0..y2
    Correlation correlation;
};

/// Gramian of the seven vectors h, x0, x1, x2, y0, y1, y2 with
/// <x_v,h> = <x_v,x_v> = theta and <x_v,x_{v+1}> = beta, y_v = h - x_v.
linalg::SymMatrix build_gram(double theta, double beta);

/// One Cholesky step on the unit-norm h row: 6x6 matrix with circulant
/// blocks [[A,-A],[-A,A]], A = circ(theta - theta^2, beta - theta^2).
linalg::SymMatrix reduce_gram(double theta, double beta);

/// Closed form: beta_min = max{(3 theta^2 - theta)/2, 2 theta - 1, 0},
/// beta_max = theta.
BetaRange beta_range_closed(double theta);

bool feasible(double theta, double beta);

/// Bisection on [max(0, 2 theta - 1), theta] against the PSD-plus-entrywise
/// feasibility predicate; independent of beta_range_closed.
double beta_min_numeric(double theta, double tol = 1e-8);

/// f_vect^l = 1/2; f_vect^u = 1/2+theta on [0,1/3],
/// (1+3 theta-3 theta^2)/2 on [1/3,2/3], 3/2-theta on [2/3,1].
FBounds f_vect(double theta);

/// Explicit vector realization and its synchronous correlation; achieves
/// value 1/2 + theta - beta.
Witness vect_witness(double theta, double beta);

}  // namespace deltagame::vect
