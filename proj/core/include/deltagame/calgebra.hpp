#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "deltagame/game.hpp"

namespace deltagame::alg {

using cplx = std::complex<double>;

struct Mat2 {
    std::array<cplx, 4> e{};  // row-major: e[0] e[1] / e[2] e[3]

    static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
    cplx trace() const { return e[0] + e[3]; }
    cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, const Mat2& a);
Mat2 adjoint(const Mat2& a);
Mat2 expm(const Mat2& a);

/// Element of C^8 (+) M_2: eight scalar summands plus one 2x2 block.
struct AlgebraElement {
    std::array<cplx, 8> scalars{};
    Mat2 block{};

    static AlgebraElement identity();
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(cplx s, const AlgebraElement& x);
AlgebraElement adjoint(const AlgebraElement& x);
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement exp_element(const AlgebraElement& x);

double max_abs(const AlgebraElement& x);
bool is_hermitian(const AlgebraElement& x, double tol = 1e-12);
bool is_projection(const AlgebraElement& x, double tol = 1e-12);

/// Tracial state: tau(x) = sum_j t[j] lambda_j + (s/2) tr(block).
struct TracialState {
    std::array<double, 8> t{};
    double s = 0.0;

    bool valid(double tol = 1e-12) const;
};

cplx trace(const TracialState& st, const AlgebraElement& x);

struct Generators {
    AlgebraElement A, B, C;
};

/// The three generating projections of the universal algebra: scalar parts
/// enumerate the eight 0/1 patterns; M_2 blocks are rank-1 projections at
/// angles 0, pi/3 and -pi/3.
Generators universal_generators();

/// Trace constraints tau(A)=tau(B)=tau(C)=theta, tau(AB)=tau(AC)=tau(BC)=beta
/// reduced to free variables (s, t = t_8).
struct ConstraintReduction {
    double theta = 0.0;
    double beta = 0.0;

    std::array<double, 8> weights(double s, double t) const;
    TracialState state(double s, double t) const;
};

ConstraintReduction constraint_reduction(double theta, double beta);

struct PerturbationDerivative {
    double analytic = 0.0;
    double numeric = 0.0;
};

/// f(t) = tau(A e^{iHt} P e^{-iHt}) with H = i(PA - AP); analytic f'(0)
/// = tau(|PA - AP|^2) against a central finite difference at step 1e-5.
PerturbationDerivative perturbation_derivative(const AlgebraElement& a,
                                               const AlgebraElement& p,
                                               const TracialState& st,
                                               double step = 1e-5);

struct OptimalState {
    TracialState state;
    double beta0 = 0.0;
};

/// Tracial state realizing beta0(theta), chosen as the LP vertex with
/// maximal s, then minimal t.
OptimalState optimal_state(double theta);

/// p(i,j|v,w) = tau(e_{v,i} e_{w,j}) with e_{v,0} in {A,B,C} and
/// e_{v,1} = 1 - e_{v,0}.
Correlation correlation_from_state(const TracialState& st);

}  // namespace deltagame::alg
