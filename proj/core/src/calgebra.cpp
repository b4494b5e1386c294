#include "deltagame/calgebra.hpp"

#include <cmath>
#include <stdexcept>

#include "deltagame/lp.hpp"

namespace deltagame::alg {

Mat2 operator+(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                 a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Mat2 operator*(cplx s, const Mat2& a) {
    return Mat2{{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
}

Mat2 adjoint(const Mat2& a) {
    return Mat2{{std::conj(a.e[0]), std::conj(a.e[2]), std::conj(a.e[1]), std::conj(a.e[3])}};
}

Mat2 expm(const Mat2& a) {
    // exp(M) = e^{mu} (cosh(q) I + sinh(q)/q N), N = M - mu I traceless,
    // q^2 = -det(N).
    const cplx mu = 0.5 * a.trace();
    const Mat2 n = a - (mu * Mat2::identity());
    const cplx q = std::sqrt(-n.det());
    cplx ch, shq;  // cosh(q), sinh(q)/q
    if (std::abs(q) < 1e-6) {
        const cplx q2 = q * q;
        ch = 1.0 + q2 / 2.0 + q2 * q2 / 24.0;
        shq = 1.0 + q2 / 6.0 + q2 * q2 / 120.0;
    } else {
        ch = std::cosh(q);
        shq = std::sinh(q) / q;
    }
    return std::exp(mu) * ((ch * Mat2::identity()) + (shq * n));
}

AlgebraElement AlgebraElement::identity() {
    AlgebraElement x;
    x.scalars.fill(1.0);
    x.block = Mat2::identity();
    return x;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (int i = 0; i < 8; ++i) r.scalars[i] = x.scalars[i] + y.scalars[i];
    r.block = x.block + y.block;
    return r;
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (int i = 0; i < 8; ++i) r.scalars[i] = x.scalars[i] - y.scalars[i];
    r.block = x.block - y.block;
    return r;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (int i = 0; i < 8; ++i) r.scalars[i] = x.scalars[i] * y.scalars[i];
    r.block = x.block * y.block;
    return r;
}

AlgebraElement scale(cplx s, const AlgebraElement& x) {
    AlgebraElement r;
    for (int i = 0; i < 8; ++i) r.scalars[i] = s * x.scalars[i];
    r.block = s * x.block;
    return r;
}

AlgebraElement adjoint(const AlgebraElement& x) {
    AlgebraElement r;
    for (int i = 0; i < 8; ++i) r.scalars[i] = std::conj(x.scalars[i]);
    r.block = adjoint(x.block);
    return r;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return sub(mul(x, y), mul(y, x));
}

AlgebraElement exp_element(const AlgebraElement& x) {
    AlgebraElement r;
    for (int i = 0; i < 8; ++i) r.scalars[i] = std::exp(x.scalars[i]);
    r.block = expm(x.block);
    return r;
}

double max_abs(const AlgebraElement& x) {
    double m = 0.0;
    for (const auto& s : x.scalars) m = std::max(m, std::abs(s));
    for (const auto& s : x.block.e) m = std::max(m, std::abs(s));
    return m;
}

bool is_hermitian(const AlgebraElement& x, double tol) {
    return max_abs(sub(x, adjoint(x))) <= tol;
}

bool is_projection(const AlgebraElement& x, double tol) {
    return is_hermitian(x, tol) && max_abs(sub(mul(x, x), x)) <= tol;
}

bool TracialState::valid(double tol) const {
    double sum = s;
    if (s < -tol) return false;
    for (double w : t) {
        if (w < -tol) return false;
        sum += w;
    }
    return std::abs(sum - 1.0) <= tol;
}

cplx trace(const TracialState& st, const AlgebraElement& x) {
    cplx r = 0.0;
    for (int i = 0; i < 8; ++i) r += st.t[i] * x.scalars[i];
    r += 0.5 * st.s * x.block.trace();
    return r;
}

Generators universal_generators() {
    const double r3 = std::sqrt(3.0) / 4.0;
    Generators g;
    // scalar summand j (0-based): A bit = j>>2, B bit = (j>>1)&1, C bit = j&1
    for (int j = 0; j < 8; ++j) {
        g.A.scalars[j] = static_cast<double>((j >> 2) & 1);
        g.B.scalars[j] = static_cast<double>((j >> 1) & 1);
        g.C.scalars[j] = static_cast<double>(j & 1);
    }
    g.A.block = Mat2{{1.0, 0.0, 0.0, 0.0}};
    g.B.block = Mat2{{0.25, r3, r3, 0.75}};
    g.C.block = Mat2{{0.25, -r3, -r3, 0.75}};
    return g;
}

std::array<double, 8> ConstraintReduction::weights(double s, double t) const {
    std::array<double, 8> w{};
    const double t1 = 1.0 + 3.0 * beta - 3.0 * theta + s / 8.0 - t;
    const double t235 = theta - 2.0 * beta - s / 4.0 + t;
    const double t467 = beta - s / 8.0 - t;
    w[0] = t1;
    w[1] = w[2] = w[4] = t235;
    w[3] = w[5] = w[6] = t467;
    w[7] = t;
    return w;
}

TracialState ConstraintReduction::state(double s, double t) const {
    TracialState st;
    const auto w = weights(s, t);
    for (int i = 0; i < 8; ++i) {
        if (w[i] < -1e-9) {
            throw std::domain_error("constraint reduction: negative weight");
        }
        st.t[i] = std::max(0.0, w[i]);
    }
    st.s = std::max(0.0, s);
    return st;
}

ConstraintReduction constraint_reduction(double theta, double beta) {
    return ConstraintReduction{theta, beta};
}

PerturbationDerivative perturbation_derivative(const AlgebraElement& a,
                                               const AlgebraElement& p,
                                               const TracialState& st,
                                               double step) {
    if (!is_hermitian(a, 1e-10) || !is_hermitian(p, 1e-10)) {
        throw std::domain_error("perturbation_derivative requires hermitian inputs");
    }
    const AlgebraElement d = sub(mul(p, a), mul(a, p));  // PA - AP
    PerturbationDerivative out;
    out.analytic = trace(st, mul(adjoint(d), d)).real();

    const AlgebraElement h = scale(cplx(0.0, 1.0), d);  // hermitian
    const auto f = [&](double t) {
        const AlgebraElement u = exp_element(scale(cplx(0.0, t), h));
        const AlgebraElement conj_p = mul(mul(u, p), adjoint(u));
        return trace(st, mul(a, conj_p)).real();
    };
    out.numeric = (f(step) - f(-step)) / (2.0 * step);
    return out;
}

OptimalState optimal_state(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::domain_error("theta must lie in [0, 1]");
    }
    const double beta0 = lp::beta0_closed(theta);
    const ConstraintReduction red = constraint_reduction(theta, beta0);

    // Vertex selection over (s, t): maximize s, then minimize t, subject to
    // the reduced weights staying nonnegative.
    lp::LinearProgram feas;
    feas.rows = {
        {{0.125, -1.0}, 3.0 * theta - 3.0 * beta0 - 1.0},
        {{-0.25, 1.0}, 2.0 * beta0 - theta},
        {{-0.125, -1.0}, -beta0},
    };
    feas.objective = {-1.0, 0.0};  // max s
    const auto sol_s = lp::solve(feas);
    if (sol_s.status != lp::LpStatus::optimal) {
        throw std::runtime_error("optimal_state: feasibility LP failed");
    }
    const double s_star = sol_s.x[0];

    lp::LinearProgram tie = feas;
    tie.objective = {0.0, 1.0};  // min t at s = s_star
    tie.rows.push_back({{1.0, 0.0}, s_star - 1e-11});
    tie.rows.push_back({{-1.0, 0.0}, -s_star - 1e-11});
    const auto sol_t = lp::solve(tie);
    if (sol_t.status != lp::LpStatus::optimal) {
        throw std::runtime_error("optimal_state: tie-break LP failed");
    }

    OptimalState out;
    out.beta0 = beta0;
    out.state = red.state(sol_t.x[0], sol_t.x[1]);
    return out;
}

Correlation correlation_from_state(const TracialState& st) {
    const Generators g = universal_generators();
    const AlgebraElement one = AlgebraElement::identity();
    const std::array<AlgebraElement, 3> e0 = {g.A, g.B, g.C};
    std::array<std::array<AlgebraElement, 2>, 3> e;
    for (int v = 0; v < 3; ++v) {
        e[v][0] = e0[v];
        e[v][1] = sub(one, e0[v]);
    }
    Correlation p(3, 2);
    for (int v = 0; v < 3; ++v) {
        for (int w = 0; w < 3; ++w) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    p.at(i, j, v, w) = trace(st, mul(e[v][i], e[w][j])).real();
                }
            }
        }
    }
    return p;
}

}  // namespace deltagame::alg
