#include "deltagame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace deltagame::oracle {

namespace {

double det_theta(const std::array<int, 3>& aux) {
    int zeros = 0;
    for (int v : aux) zeros += (v == 0) ? 1 : 0;
    return zeros / 3.0;
}

double det_beta(const std::array<int, 3>& aux) {
    int both = 0;
    for (int v = 0; v < 3; ++v) {
        if (aux[v] == 0 && aux[(v + 1) % 3] == 0) ++both;
    }
    return both / 3.0;
}

double qubit_beta(const QubitStrategy& s) {
    double b = 0.0;
    for (int v = 0; v < 3; ++v) {
        const double d = s.angles[v] - s.angles[(v + 1) % 3];
        b += (1.0 + std::cos(2.0 * d)) / 4.0;
    }
    return b / 3.0;
}

std::array<int, 3> nth_assignment(int k) {
    return {(k >> 2) & 1, (k >> 1) & 1, k & 1};
}

}  // namespace

std::vector<DeterministicPoint> enumerate_deterministic() {
    std::vector<DeterministicPoint> out;
    out.reserve(8);
    for (int k = 0; k < 8; ++k) {
        DeterministicPoint d;
        d.assign = nth_assignment(k);
        d.point.theta = det_theta(d.assign);
        d.point.beta = det_beta(d.assign);
        d.point.theta_tilde = 0.5 + d.point.theta - d.point.beta;
        d.value = d.point.theta_tilde;
        out.push_back(d);
    }
    return out;
}

QubitEval qubit_value(const QubitStrategy& strategy, double mix,
                      const std::array<int, 3>& aux) {
    QubitEval e;
    e.point.theta = mix * 0.5 + (1.0 - mix) * det_theta(aux);
    e.point.beta = mix * qubit_beta(strategy) + (1.0 - mix) * det_beta(aux);
    e.point.theta_tilde = 0.5 + e.point.theta - e.point.beta;
    e.value = e.point.theta_tilde;
    return e;
}

Correlation qubit_correlation(const QubitStrategy& strategy, double mix,
                              const std::array<int, 3>& aux) {
    // Rank-1 projections in the qubit block; tau = (1/2) tr there.
    std::array<std::array<double, 4>, 3> proj;  // row-major 2x2
    for (int v = 0; v < 3; ++v) {
        const double c = std::cos(strategy.angles[v]);
        const double s = std::sin(strategy.angles[v]);
        proj[v] = {c * c, c * s, c * s, s * s};
    }
    const auto block = [&](int v, int i) {
        std::array<double, 4> p = proj[v];
        if (i == 1) {
            p = {1.0 - p[0], -p[1], -p[2], 1.0 - p[3]};
        }
        return p;
    };
    Correlation p(3, 2);
    for (int v = 0; v < 3; ++v) {
        for (int w = 0; w < 3; ++w) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    const auto a = block(v, i);
                    const auto b = block(w, j);
                    const double tr = a[0] * b[0] + a[1] * b[2] + a[2] * b[1] + a[3] * b[3];
                    const double det_part =
                        (aux[v] == i && aux[w] == j) ? 1.0 : 0.0;
                    p.at(i, j, v, w) = mix * 0.5 * tr + (1.0 - mix) * det_part;
                }
            }
        }
    }
    return p;
}

std::optional<double> mix_for_theta(double theta_target,
                                    const std::array<int, 3>& aux) {
    const double td = det_theta(aux);
    if (std::abs(0.5 - td) < 1e-15) {
        return std::nullopt;  // unreachable: td in {0, 1/3, 2/3, 1}
    }
    const double m = (theta_target - td) / (0.5 - td);
    if (m < 0.0 || m > 1.0) return std::nullopt;
    return m;
}

double random_search_max(double theta_target, int iterations, std::uint64_t seed) {
    if (!(theta_target >= 0.0 && theta_target <= 1.0)) {
        throw std::domain_error("theta_target must lie in [0, 1]");
    }
    if (iterations < 1) throw std::domain_error("iterations must be >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uangle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> uaux(0, 7);
    std::normal_distribution<double> jitter(0.0, 1.0);

    double best = 0.5;  // mix = 0 with any aux never scores below 1/2
    QubitStrategy best_strategy{};
    std::array<int, 3> best_aux{1, 1, 1};
    bool have_best = false;

    for (int it = 0; it < iterations; ++it) {
        QubitStrategy s;
        std::array<int, 3> aux;
        if (have_best && unit(rng) < 0.5) {
            const double sigma = 0.3 * std::pow(0.9999, it) + 1e-3;
            s = best_strategy;
            for (double& a : s.angles) a += sigma * jitter(rng);
            aux = best_aux;
        } else {
            s.angles = {uangle(rng), uangle(rng), uangle(rng)};
            aux = nth_assignment(uaux(rng));
        }
        const auto mix = mix_for_theta(theta_target, aux);
        if (!mix) continue;
        const QubitEval e = qubit_value(s, *mix, aux);
        if (std::abs(e.point.theta - theta_target) > 1e-3) continue;
        if (e.value > best) {
            best = e.value;
            best_strategy = s;
            best_aux = aux;
            have_best = true;
        }
    }
    return best;
}

}  // namespace deltagame::oracle
