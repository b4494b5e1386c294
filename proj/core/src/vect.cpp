#include "deltagame/vect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deltagame::vect {

namespace {

void require_unit_interval(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::domain_error("theta must lie in [0, 1]");
    }
}

constexpr double kPsdTol = 1e-10;

}  // namespace

linalg::SymMatrix build_gram(double theta, double beta) {
    linalg::SymMatrix g(7);
    const double tb = theta - beta;
    const double yb = 1.0 + beta - 2.0 * theta;
    // rows/cols: 0 = h, 1..3 = x_v, 4..6 = y_v
    g.set(0, 0, 1.0);
    for (int v = 0; v < 3; ++v) {
        g.set(0, 1 + v, theta);
        g.set(0, 4 + v, 1.0 - theta);
        g.set(1 + v, 1 + v, theta);
        g.set(4 + v, 4 + v, 1.0 - theta);
        g.set(1 + v, 4 + v, 0.0);  // <x_v, y_v>
        for (int w = 0; w < 3; ++w) {
            if (w == v) continue;
            g.set(1 + v, 1 + w, beta);
            g.set(4 + v, 4 + w, yb);
            g.set(1 + v, 4 + w, tb);
        }
    }
    return g;
}

linalg::SymMatrix reduce_gram(double theta, double beta) {
    const double a = theta - theta * theta;
    const double x = beta - theta * theta;
    linalg::SymMatrix g(6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double v = (i == j) ? a : x;
            g.set(i, j, v);
            g.set(3 + i, 3 + j, v);
            g.set(i, 3 + j, -v);
            g.set(3 + i, j, -v);
        }
    }
    return g;
}

BetaRange beta_range_closed(double theta) {
    require_unit_interval(theta);
    BetaRange r;
    r.min = std::max({(3.0 * theta * theta - theta) / 2.0, 2.0 * theta - 1.0, 0.0});
    r.max = theta;
    return r;
}

bool feasible(double theta, double beta) {
    if (!(theta >= 0.0 && theta <= 1.0)) return false;
    const BetaRange r = beta_range_closed(theta);
    return beta >= r.min - 1e-12 && beta <= r.max + 1e-12;
}

double beta_min_numeric(double theta, double tol) {
    require_unit_interval(theta);
    if (tol <= 0.0) throw std::domain_error("tol must be positive");

    const auto ok = [&](double beta) {
        if (beta < -1e-12) return false;
        if (theta - beta < -1e-12) return false;
        if (1.0 + beta - 2.0 * theta < -1e-12) return false;
        return linalg::psd_check(build_gram(theta, beta), kPsdTol);
    };

    double lo = std::max(0.0, 2.0 * theta - 1.0);
    double hi = theta;
    if (!ok(hi)) {
        throw std::runtime_error("beta_min_numeric: beta = theta infeasible");
    }
    if (ok(lo)) return lo;
    // feasible-beta set is an interval (G is affine in beta, PSD cone convex)
    for (int iter = 0; iter < 60 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (ok(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

FBounds f_vect(double theta) {
    require_unit_interval(theta);
    FBounds f;
    f.lower = 0.5;
    if (theta <= 1.0 / 3.0) {
        f.upper = 0.5 + theta;
    } else if (theta <= 2.0 / 3.0) {
        f.upper = (1.0 + 3.0 * theta - 3.0 * theta * theta) / 2.0;
    } else {
        f.upper = 1.5 - theta;
    }
    f.lower_attained = true;
    f.upper_attained = true;
    return f;
}

Witness vect_witness(double theta, double beta) {
    if (!feasible(theta, beta)) {
        throw std::domain_error("vect_witness: (theta, beta) infeasible");
    }
    Witness wit;
    wit.vectors = linalg::gram_vectors(build_gram(theta, beta), kPsdTol);

    // vectors[0] = h, [1+v] = x_v, [4+v] = y_v; p(i,j|v,w) is the inner
    // product of the i-th choice at v with the j-th choice at w.
    const auto dot = [&](int r1, int r2) {
        double s = 0.0;
        for (std::size_t k = 0; k < wit.vectors[r1].size(); ++k) {
            s += wit.vectors[r1][k] * wit.vectors[r2][k];
        }
        return s;
    };
    Correlation p(3, 2);
    for (int v = 0; v < 3; ++v) {
        for (int w = 0; w < 3; ++w) {
            p.at(0, 0, v, w) = dot(1 + v, 1 + w);
            p.at(0, 1, v, w) = dot(1 + v, 4 + w);
            p.at(1, 0, v, w) = dot(4 + v, 1 + w);
            p.at(1, 1, v, w) = dot(4 + v, 4 + w);
        }
    }
    wit.correlation = std::move(p);
    return wit;
}

}  // namespace deltagame::vect
