#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace deltagame {

/// A finite two-player nonlocal game: input set of size n, output set of
/// size m, rule predicate lambda(v,w,i,j) and input distribution pi(v,w).
struct Game {
    int n = 0;
    int m = 0;
    std::vector<std::uint8_t> rule;  // [(v*n+w)*m+i]*m+j
    std::vector<double> pi;          // v*n+w

    bool allowed(int v, int w, int i, int j) const {
        return rule[((static_cast<std::size_t>(v) * n + w) * m + i) * m + j] != 0;
    }
    double pi_at(int v, int w) const { return pi[static_cast<std::size_t>(v) * n + w]; }
};

/// Joint conditional output statistics p(i,j|v,w), stored row-major over
/// (i, j, v, w).
struct Correlation {
    int n = 0;
    int m = 0;
    std::vector<double> p;

    Correlation() = default;
    Correlation(int n_, int m_) : n(n_), m(m_), p(static_cast<std::size_t>(n_) * n_ * m_ * m_, 0.0) {}

    double& at(int i, int j, int v, int w) {
        return p[((static_cast<std::size_t>(i) * m + j) * n + v) * n + w];
    }
    double at(int i, int j, int v, int w) const {
        return p[((static_cast<std::size_t>(i) * m + j) * n + v) * n + w];
    }
};

struct CorrelationFlags {
    bool valid = false;
    bool synchronous = false;
};

/// The (theta, theta_tilde) coordinates of a synchronous correlation, with
/// the auxiliary cross-trace beta; theta_tilde = 1/2 + theta - beta.
struct ThetaPoint {
    double theta = 0.0;
    double theta_tilde = 0.0;
    double beta = 0.0;
};

/// The Delta game: three inputs, two outputs, uniform distribution on the
/// six edges E = {(0,0),(1,1),(2,2),(0,1),(1,2),(2,0)}. Same-input rounds
/// require equal outputs, the three directed edges (v,v+1 mod 3) require
/// different outputs, and every off-E tuple is allowed.
Game delta_game();

CorrelationFlags validate_correlation(const Correlation& p, double tol = 1e-9);

/// V(p, pi) = sum_{i,j,v,w} lambda(v,w,i,j) pi(v,w) p(i,j|v,w).
double value(const Game& g, const Correlation& p);

/// Synchronous correlation of the classical strategy where both players
/// answer assign[v] on input v.
Correlation deterministic_correlation(const std::array<int, 3>& assign);

/// theta = (1/3) sum_v p(0,0|v,v), beta = (1/3) sum_v p(0,0|v,v+1).
/// Throws std::domain_error if p is not synchronous.
ThetaPoint theta_point_of(const Correlation& p, double tol = 1e-9);

/// JSON round-trip for correlations: {"n":..,"m":..,"p":[[[[..]]]]} with p
/// nested as p[i][j][v][w].
std::string correlation_to_json(const Correlation& p);
Correlation correlation_from_json(const std::string& text);

}  // namespace deltagame
