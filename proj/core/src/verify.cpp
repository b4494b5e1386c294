#include "deltagame/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "deltagame/calgebra.hpp"
#include "deltagame/game.hpp"
#include "deltagame/lp.hpp"
#include "deltagame/oracle.hpp"
#include "deltagame/vect.hpp"

namespace deltagame::verify {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Exhaustive vertex enumeration for a 3-variable LP with x >= 0; assumes
// the feasible region is bounded.
struct VertexOptimum {
    bool feasible = false;
    double objective = 0.0;
};

VertexOptimum vertex_enumerate(const lp::LinearProgram& prog) {
    std::vector<std::array<double, 4>> cons;  // a0 a1 a2 b meaning a.x >= b
    for (const auto& row : prog.rows) {
        cons.push_back({row.a[0], row.a[1], row.a[2], row.b});
    }
    cons.push_back({1, 0, 0, 0});
    cons.push_back({0, 1, 0, 0});
    cons.push_back({0, 0, 1, 0});

    VertexOptimum best;
    best.objective = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(cons.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const auto& r0 = cons[i];
                const auto& r1 = cons[j];
                const auto& r2 = cons[k];
                const double det =
                    r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
                    r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
                    r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
                if (std::abs(det) < 1e-9) continue;
                const auto solve_col = [&](int col) {
                    std::array<std::array<double, 3>, 3> m = {
                        {{r0[0], r0[1], r0[2]},
                         {r1[0], r1[1], r1[2]},
                         {r2[0], r2[1], r2[2]}}};
                    m[0][col] = r0[3];
                    m[1][col] = r1[3];
                    m[2][col] = r2[3];
                    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) /
                           det;
                };
                const std::array<double, 3> x = {solve_col(0), solve_col(1), solve_col(2)};
                bool ok = true;
                for (const auto& c : cons) {
                    if (c[0] * x[0] + c[1] * x[1] + c[2] * x[2] < c[3] - 1e-7) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                const double obj = prog.objective[0] * x[0] +
                                   prog.objective[1] * x[1] +
                                   prog.objective[2] * x[2];
                best.feasible = true;
                best.objective = std::min(best.objective, obj);
            }
        }
    }
    return best;
}

alg::AlgebraElement random_hermitian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    alg::AlgebraElement x;
    for (auto& s : x.scalars) s = u(rng);
    const double d0 = u(rng);
    const double d1 = u(rng);
    const alg::cplx off(u(rng), u(rng));
    x.block = alg::Mat2{{d0, off, std::conj(off), d1}};
    return x;
}

alg::TracialState random_state(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    alg::TracialState st;
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

CriterionResult criterion1() {
    CriterionResult r{1, "closed-form agreement (beta_min and beta0 on 101-point grid)"};
    const auto start = clock_type::now();
    double worst_vect = 0.0;
    double worst_lp = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double theta = k / 100.0;
        worst_vect = std::max(worst_vect,
                              std::abs(vect::beta_min_numeric(theta, 1e-8) -
                                       vect::beta_range_closed(theta).min));
        const auto sol = lp::solve(lp::beta0_program(theta));
        if (sol.status != lp::LpStatus::optimal) {
            r.detail = "LP not optimal at theta=" + num(theta);
            return r;
        }
        worst_lp = std::max(worst_lp,
                            std::abs(sol.objective_value - lp::beta0_closed(theta)));
    }
    const double elapsed = seconds_since(start);
    r.pass = worst_vect <= 1e-6 && worst_lp <= 1e-9 && elapsed <= 10.0;
    r.detail = "max|bisection-closed|=" + num(worst_vect) +
               " max|lp-closed|=" + num(worst_lp) + " time=" + num(elapsed) + "s";
    return r;
}

CriterionResult criterion2() {
    CriterionResult r{2, "game value 7/8 attained at theta=1/2 in both models"};
    double max_t = 0.0, max_v = 0.0, arg_t = -1.0, arg_v = -1.0;
    for (int k = 0; k <= 100; ++k) {
        const double theta = k / 100.0;
        const double ft = lp::f_t(theta).upper;
        const double fv = vect::f_vect(theta).upper;
        if (ft > max_t) { max_t = ft; arg_t = theta; }
        if (fv > max_v) { max_v = fv; arg_v = theta; }
    }
    r.pass = std::abs(max_t - 0.875) <= 1e-12 && std::abs(arg_t - 0.5) <= 1e-12 &&
             std::abs(max_v - 0.875) <= 1e-12 && std::abs(arg_v - 0.5) <= 1e-12;
    r.detail = "max f_t^u=" + num(max_t) + " at " + num(arg_t) +
               "; max f_vect^u=" + num(max_v) + " at " + num(arg_v);
    return r;
}

CriterionResult criterion3() {
    CriterionResult r{3, "separation f_vect^u > f_t^u strictly between 1/3 and 2/3"};
    const std::array<double, 4> thetas = {0.4, 0.45, 0.55, 0.6};
    // closed-form differences (1+3t-3t^2)/2 - f_t^u at the sampled points
    const std::array<double, 4> gaps = {0.01, 0.00875, 0.00875, 0.01};
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double gap = vect::f_vect(thetas[i]).upper - lp::f_t(thetas[i]).upper;
        worst = std::max(worst, std::abs(gap - gaps[i]));
        if (!(gap > 0.0) || std::abs(gap - gaps[i]) > 1e-12) ok = false;
    }
    for (const double theta : {0.2, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.8}) {
        const double gap = vect::f_vect(theta).upper - lp::f_t(theta).upper;
        if (std::abs(gap) > 1e-12) ok = false;
    }
    r.pass = ok;
    r.detail = "max deviation from closed-form gap=" + num(worst);
    return r;
}

CriterionResult criterion4() {
    CriterionResult r{4, "witness round-trips on 21-point grid"};
    const Game g = delta_game();
    double worst_vect = 0.0, worst_qc = 0.0;
    bool ok = true;
    for (int k = 0; k <= 20; ++k) {
        const double theta = k / 20.0;
        const double bmin = vect::beta_range_closed(theta).min;
        const auto wit = vect::vect_witness(theta, bmin);
        const auto vf = validate_correlation(wit.correlation);
        if (!vf.valid || !vf.synchronous) ok = false;
        worst_vect = std::max(worst_vect,
                              std::abs(value(g, wit.correlation) -
                                       vect::f_vect(theta).upper));

        const auto opt = alg::optimal_state(theta);
        const Correlation p = alg::correlation_from_state(opt.state);
        const auto qf = validate_correlation(p);
        if (!qf.valid || !qf.synchronous) ok = false;
        worst_qc = std::max(worst_qc,
                            std::abs(value(g, p) - lp::f_t(theta).upper));
    }
    r.pass = ok && worst_vect <= 1e-8 && worst_qc <= 1e-9;
    r.detail = "max|vect witness - f_vect^u|=" + num(worst_vect) +
               " max|qc witness - f_t^u|=" + num(worst_qc);
    return r;
}

CriterionResult criterion5() {
    CriterionResult r{5, "algebra certification (projections, commutation, traces)"};
    const auto g = alg::universal_generators();
    bool ok = alg::is_projection(g.A, 1e-15) && alg::is_projection(g.B, 1e-15) &&
              alg::is_projection(g.C, 1e-15);

    const auto bc = alg::add(g.B, g.C);
    const auto ac = alg::add(g.A, g.C);
    const auto ab = alg::add(g.A, g.B);
    const double comm = std::max({alg::max_abs(alg::commutator(g.A, bc)),
                                  alg::max_abs(alg::commutator(g.B, ac)),
                                  alg::max_abs(alg::commutator(g.C, ab))});
    ok = ok && comm < 1e-15;

    const auto y = alg::sub(alg::scale(2.0, bc), alg::mul(bc, bc));
    const double central = std::max({alg::max_abs(alg::commutator(y, g.A)),
                                     alg::max_abs(alg::commutator(y, g.B)),
                                     alg::max_abs(alg::commutator(y, g.C))});
    ok = ok && central < 1e-15;

    alg::TracialState pure_m2;
    pure_m2.s = 1.0;
    const double th = alg::trace(pure_m2, g.A).real();
    const double be = alg::trace(pure_m2, alg::mul(g.A, g.B)).real();
    ok = ok && std::abs(th - 0.5) < 1e-15 && std::abs(be - 0.125) < 1e-15;

    const Correlation p_alg = alg::correlation_from_state(pure_m2);
    const double pi = std::acos(-1.0);
    const Correlation p_qubit = oracle::qubit_correlation(
        oracle::QubitStrategy{{0.0, pi / 3.0, 2.0 * pi / 3.0}}, 1.0, {0, 0, 0});
    double worst = 0.0;
    for (std::size_t i = 0; i < p_alg.p.size(); ++i) {
        worst = std::max(worst, std::abs(p_alg.p[i] - p_qubit.p[i]));
    }
    ok = ok && worst <= 1e-12;

    r.pass = ok;
    r.detail = "max commutator=" + num(comm) + " max central=" + num(central) +
               " max qubit mismatch=" + num(worst);
    return r;
}

CriterionResult criterion6(std::uint64_t seed) {
    CriterionResult r{6, "perturbation derivative analytic vs finite difference"};
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto a = random_hermitian(rng);
        const auto p = random_hermitian(rng);
        const auto st = random_state(rng);
        const auto d = alg::perturbation_derivative(a, p, st);
        worst = std::max(worst, std::abs(d.analytic - d.numeric));
    }
    const auto g = alg::universal_generators();
    alg::TracialState pure_m2;
    pure_m2.s = 1.0;
    const auto d0 = alg::perturbation_derivative(g.A, alg::add(g.B, g.C), pure_m2);
    r.pass = worst <= 1e-6 && d0.analytic == 0.0;
    r.detail = "max|analytic-numeric|=" + num(worst) +
               " commuting pair analytic=" + num(d0.analytic);
    return r;
}

CriterionResult criterion7() {
    CriterionResult r{7, "classical baseline: max 5/6, min 1/2"};
    const auto pts = oracle::enumerate_deterministic();
    double lo = 1.0, hi = 0.0;
    for (const auto& d : pts) {
        lo = std::min(lo, d.value);
        hi = std::max(hi, d.value);
    }
    r.pass = pts.size() == 8 && std::abs(hi - 5.0 / 6.0) <= 1e-15 &&
             std::abs(lo - 0.5) <= 1e-15 && hi < 0.875;
    r.detail = "min=" + num(lo) + " max=" + num(hi);
    return r;
}

CriterionResult criterion8(std::uint64_t seed) {
    CriterionResult r{8, "seeded random search soundness and sharpness"};
    const auto start = clock_type::now();
    bool ok = true;
    std::string detail;
    for (const double theta : {0.4, 0.5, 0.6}) {
        const double best = oracle::random_search_max(theta, 100000, seed);
        const double target = lp::f_t(theta).upper;
        if (best < target - 5e-3 || best > target + 1e-3) ok = false;
        detail += "theta=" + num(theta) + ": " + num(best) + "/" + num(target) + " ";
    }
    const double elapsed = seconds_since(start);
    r.pass = ok && elapsed <= 60.0;
    r.detail = detail + "time=" + num(elapsed) + "s";
    return r;
}

CriterionResult criterion9(std::uint64_t seed) {
    CriterionResult r{9, "simplex vs vertex enumeration on 500 random LPs"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    int mismatched = 0;
    for (int trial = 0; trial < 500; ++trial) {
        lp::LinearProgram prog;
        prog.objective = {u(rng), u(rng), u(rng)};
        for (int i = 0; i < 4; ++i) {
            prog.rows.push_back({{u(rng), u(rng), u(rng)}, u(rng)});
        }
        // box bound keeps the feasible region bounded
        prog.rows.push_back({{-1.0, 0.0, 0.0}, -10.0});
        prog.rows.push_back({{0.0, -1.0, 0.0}, -10.0});
        prog.rows.push_back({{0.0, 0.0, -1.0}, -10.0});

        const auto sol = lp::solve(prog);
        const auto ref = vertex_enumerate(prog);
        if (ref.feasible != (sol.status == lp::LpStatus::optimal)) {
            ++mismatched;
            continue;
        }
        if (ref.feasible) {
            worst = std::max(worst, std::abs(sol.objective_value - ref.objective));
        }
    }
    bool degenerate_ok = true;
    for (const double theta : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
        const auto sol = lp::solve(lp::beta0_program(theta));
        if (sol.status != lp::LpStatus::optimal ||
            std::abs(sol.objective_value - lp::beta0_closed(theta)) > 1e-9) {
            degenerate_ok = false;
        }
    }
    r.pass = mismatched == 0 && worst <= 1e-8 && degenerate_ok;
    r.detail = "status mismatches=" + num(mismatched) + " max|obj diff|=" + num(worst) +
               (degenerate_ok ? " degenerate ok" : " degenerate FAILED");
    return r;
}

CriterionResult criterion10() {
    CriterionResult r{10, "symmetry f^u(theta)=f^u(1-theta) and attainment"};
    double worst = 0.0;
    bool attained = true;
    for (int k = 0; k <= 100; ++k) {
        const double theta = k / 100.0;
        const auto ft = lp::f_t(theta);
        const auto fv = vect::f_vect(theta);
        worst = std::max(worst, std::abs(ft.upper - lp::f_t(1.0 - theta).upper));
        worst = std::max(worst, std::abs(fv.upper - vect::f_vect(1.0 - theta).upper));
        attained = attained && ft.lower_attained && ft.upper_attained &&
                   fv.lower_attained && fv.upper_attained;
    }
    r.pass = worst <= 1e-12 && attained;
    r.detail = "max asymmetry=" + num(worst);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(Level level, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.push_back(criterion1());
    out.push_back(criterion2());
    out.push_back(criterion3());
    out.push_back(criterion4());
    out.push_back(criterion5());
    out.push_back(criterion6(seed));
    out.push_back(criterion7());
    if (level == Level::full) out.push_back(criterion8(seed));
    out.push_back(criterion9(seed));
    out.push_back(criterion10());
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

}  // namespace deltagame::verify
