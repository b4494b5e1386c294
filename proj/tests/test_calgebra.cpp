#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "deltagame/calgebra.hpp"
#include "deltagame/game.hpp"
#include "deltagame/lp.hpp"

using namespace deltagame;
using alg::AlgebraElement;
using alg::TracialState;

namespace {

AlgebraElement random_hermitian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AlgebraElement x;
    for (auto& s : x.scalars) s = u(rng);
    const alg::cplx off(u(rng), u(rng));
    x.block = alg::Mat2{{u(rng), off, std::conj(off), u(rng)}};
    return x;
}

AlgebraElement random_element(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AlgebraElement x;
    for (auto& s : x.scalars) s = alg::cplx(u(rng), u(rng));
    for (auto& e : x.block.e) e = alg::cplx(u(rng), u(rng));
    return x;
}

TracialState random_state(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    TracialState st;
    double total = 0.0;
    for (auto& w : st.t) {
        w = e(rng);
        total += w;
    }
    st.s = e(rng);
    total += st.s;
    for (auto& w : st.t) w /= total;
    st.s /= total;
    return st;
}

}  // namespace

TEST_CASE("universal generators are projections with the commutation relations") {
    const auto g = alg::universal_generators();
    CHECK(alg::is_projection(g.A));
    CHECK(alg::is_projection(g.B));
    CHECK(alg::is_projection(g.C));

    CHECK(alg::max_abs(alg::commutator(g.A, alg::add(g.B, g.C))) < 1e-15);
    CHECK(alg::max_abs(alg::commutator(g.B, alg::add(g.A, g.C))) < 1e-15);
    CHECK(alg::max_abs(alg::commutator(g.C, alg::add(g.A, g.B))) < 1e-15);

    // irreducibility: pairwise non-commuting in the M2 block
    CHECK(alg::max_abs(alg::commutator(g.A, g.B)) > 0.1);
    CHECK(alg::max_abs(alg::commutator(g.B, g.C)) > 0.1);

    // scalar parts enumerate all 8 bit patterns
    for (int j = 0; j < 8; ++j) {
        CHECK(g.A.scalars[j].real() == static_cast<double>((j >> 2) & 1));
        CHECK(g.B.scalars[j].real() == static_cast<double>((j >> 1) & 1));
        CHECK(g.C.scalars[j].real() == static_cast<double>(j & 1));
    }
}

TEST_CASE("algebra arithmetic") {
    const auto g = alg::universal_generators();
    CHECK(alg::max_abs(alg::sub(alg::mul(g.A, g.A), g.A)) < 1e-15);

    // Y = 2(B+C) - (B+C)^2 is central with M2 block (3/4) I
    const auto bc = alg::add(g.B, g.C);
    const auto y = alg::sub(alg::scale(2.0, bc), alg::mul(bc, bc));
    CHECK(y.block.e[0] == alg::cplx(0.75));
    CHECK(y.block.e[3] == alg::cplx(0.75));
    CHECK(std::abs(y.block.e[1]) < 1e-15);
    CHECK(alg::max_abs(alg::commutator(y, g.A)) < 1e-15);
    CHECK(alg::max_abs(alg::commutator(y, g.B)) < 1e-15);
    CHECK(alg::max_abs(alg::commutator(y, g.C)) < 1e-15);

    // B + C is diag(1/2, 3/2) in the block
    CHECK(bc.block.e[0] == alg::cplx(0.5));
    CHECK(bc.block.e[3] == alg::cplx(1.5));
    CHECK(bc.block.e[1] == alg::cplx(0.0));
}

TEST_CASE("trace examples") {
    const auto g = alg::universal_generators();
    TracialState pure_m2;
    pure_m2.s = 1.0;
    CHECK(alg::trace(pure_m2, g.A).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(alg::trace(pure_m2, g.B).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(alg::trace(pure_m2, g.C).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(alg::trace(pure_m2, alg::mul(g.A, g.B)).real() ==
          doctest::Approx(0.125).epsilon(1e-15));

    TracialState t1;
    t1.t[0] = 1.0;
    CHECK(alg::trace(t1, g.A).real() == 0.0);

    TracialState uniform;
    uniform.t.fill(0.125);
    CHECK(alg::trace(uniform, g.A).real() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("trace is unital, tracial and positive") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto st = random_state(rng);
        CHECK(alg::trace(st, AlgebraElement::identity()).real() ==
              doctest::Approx(1.0).epsilon(1e-12));
        const auto x = random_element(rng);
        const auto y = random_element(rng);
        const auto txy = alg::trace(st, alg::mul(x, y));
        const auto tyx = alg::trace(st, alg::mul(y, x));
        CHECK(std::abs(txy - tyx) <= 1e-12);
        CHECK(alg::trace(st, alg::mul(alg::adjoint(x), x)).real() >= -1e-12);
    }
}

TEST_CASE("constraint reduction round trip") {
    const auto g = alg::universal_generators();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int tested = 0;
    while (tested < 50) {
        const double theta = u(rng);
        const double beta = lp::beta0_closed(theta) +
                            (theta - lp::beta0_closed(theta)) * u(rng);
        const double s = u(rng);
        const double t = 0.25 * u(rng);
        const auto red = alg::constraint_reduction(theta, beta);
        const auto w = red.weights(s, t);
        bool feasible = true;
        for (double wi : w) feasible = feasible && wi >= 0.0;
        if (!feasible) continue;
        ++tested;
        const auto st = red.state(s, t);
        CHECK(st.valid(1e-12));
        for (const auto* p : {&g.A, &g.B, &g.C}) {
            CHECK(alg::trace(st, *p).real() == doctest::Approx(theta).epsilon(1e-12));
        }
        CHECK(alg::trace(st, alg::mul(g.A, g.B)).real() ==
              doctest::Approx(beta).epsilon(1e-12));
        CHECK(alg::trace(st, alg::mul(g.A, g.C)).real() ==
              doctest::Approx(beta).epsilon(1e-12));
        CHECK(alg::trace(st, alg::mul(g.B, g.C)).real() ==
              doctest::Approx(beta).epsilon(1e-12));
    }
}

TEST_CASE("constraint reduction spec points") {
    auto red = alg::constraint_reduction(0.5, 0.125);
    auto w = red.weights(1.0, 0.0);
    CHECK(w[0] == doctest::Approx(0.0).epsilon(1e-15));
    for (int i = 1; i < 8; ++i) CHECK(std::abs(w[i]) < 1e-15);

    red = alg::constraint_reduction(0.0, 0.0);
    w = red.weights(0.0, 0.0);
    CHECK(w[0] == doctest::Approx(1.0));
    for (int i = 1; i < 8; ++i) CHECK(w[i] == 0.0);

    red = alg::constraint_reduction(1.0, 1.0);
    w = red.weights(0.0, 1.0);
    CHECK(w[7] == 1.0);
    for (int i = 0; i < 7; ++i) CHECK(std::abs(w[i]) < 1e-15);
}

TEST_CASE("perturbation derivative") {
    const auto g = alg::universal_generators();
    TracialState pure_m2;
    pure_m2.s = 1.0;

    auto d = alg::perturbation_derivative(g.A, g.B, pure_m2);
    CHECK(d.analytic > 0.0);
    CHECK(std::abs(d.analytic - d.numeric) <= 1e-6);

    d = alg::perturbation_derivative(g.A, g.A, pure_m2);
    CHECK(d.analytic == 0.0);
    CHECK(std::abs(d.numeric) <= 1e-8);

    d = alg::perturbation_derivative(g.A, alg::add(g.B, g.C), pure_m2);
    CHECK(d.analytic == 0.0);

    AlgebraElement skew;
    skew.block = alg::Mat2{{0.0, 1.0, -1.0, 0.0}};
    CHECK_THROWS_AS(alg::perturbation_derivative(skew, g.A, pure_m2), std::domain_error);
}

TEST_CASE("perturbation derivative on random hermitian pairs") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_hermitian(rng);
        const auto p = random_hermitian(rng);
        const auto st = random_state(rng);
        const auto d = alg::perturbation_derivative(a, p, st);
        CHECK(std::abs(d.analytic - d.numeric) <= 1e-6);
        CHECK(d.analytic >= 0.0);
    }
}

TEST_CASE("optimal_state spec points") {
    auto opt = alg::optimal_state(0.5);
    CHECK(opt.beta0 == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(opt.state.s == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(opt.state.t[7] == doctest::Approx(0.0).epsilon(1e-9));

    opt = alg::optimal_state(0.0);
    CHECK(opt.beta0 == 0.0);
    CHECK(opt.state.t[0] == doctest::Approx(1.0).epsilon(1e-9));

    opt = alg::optimal_state(1.0 / 3.0);
    CHECK(opt.beta0 == 0.0);

    CHECK_THROWS_AS(alg::optimal_state(-0.5), std::domain_error);
}

TEST_CASE("optimal_state achieves the target traces") {
    const auto g = alg::universal_generators();
    for (int k = 0; k <= 20; ++k) {
        const double theta = k / 20.0;
        const auto opt = alg::optimal_state(theta);
        CHECK(opt.state.valid(1e-9));
        CHECK(alg::trace(opt.state, g.A).real() == doctest::Approx(theta).epsilon(1e-10));
        CHECK(alg::trace(opt.state, g.B).real() == doctest::Approx(theta).epsilon(1e-10));
        CHECK(alg::trace(opt.state, g.C).real() == doctest::Approx(theta).epsilon(1e-10));
        CHECK(alg::trace(opt.state, alg::mul(g.A, g.B)).real() ==
              doctest::Approx(opt.beta0).epsilon(1e-10));
        CHECK(alg::trace(opt.state, alg::mul(g.B, g.C)).real() ==
              doctest::Approx(opt.beta0).epsilon(1e-10));
    }
}

TEST_CASE("correlation_from_state") {
    const Game g = delta_game();
    TracialState pure_m2;
    pure_m2.s = 1.0;
    Correlation p = alg::correlation_from_state(pure_m2);
    auto flags = validate_correlation(p);
    CHECK(flags.valid);
    CHECK(flags.synchronous);
    CHECK(value(g, p) == doctest::Approx(0.875).epsilon(1e-12));

    // symmetry p(i,j|v,w) = p(j,i|w,v)
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int v = 0; v < 3; ++v)
                for (int w = 0; w < 3; ++w)
                    CHECK(p.at(i, j, v, w) == doctest::Approx(p.at(j, i, w, v)).epsilon(1e-14));

    TracialState t1;
    t1.t[0] = 1.0;
    p = alg::correlation_from_state(t1);
    CHECK(value(g, p) == doctest::Approx(0.5));
    CHECK(p.at(1, 1, 0, 0) == 1.0);  // all-output-1 deterministic

    p = alg::correlation_from_state(alg::optimal_state(0.4).state);
    CHECK(value(g, p) == doctest::Approx(0.85).epsilon(1e-10));
}

TEST_CASE("optimal states reproduce f_t^u on a grid") {
    const Game g = delta_game();
    for (int k = 0; k <= 100; ++k) {
        const double theta = k / 100.0;
        const Correlation p = alg::correlation_from_state(alg::optimal_state(theta).state);
        CHECK(std::abs(value(g, p) - lp::f_t(theta).upper) <= 1e-9);
    }
}
