#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "deltagame/game.hpp"

namespace deltagame::oracle {

/// Three rank-1 qubit projections P_v onto (cos phi_v, sin phi_v), evaluated
/// under the normalized trace.
struct QubitStrategy {
    std::array<double, 3> angles{};
};

struct QubitEval {
    ThetaPoint point;
    double value = 0.0;
};

struct DeterministicPoint {
    std::array<int, 3> assign{};
    ThetaPoint point;
    double value = 0.0;
};

/// All 8 assignments I -> O with exact rational values in sixths.
std::vector<DeterministicPoint> enumerate_deterministic();

/// Direct sum of the qubit block (trace weight mix) with the deterministic
/// strategy aux (weight 1 - mix). tau(P_v P_w) = (1 + cos 2(phi_v-phi_w))/4.
QubitEval qubit_value(const QubitStrategy& strategy, double mix,
                      const std::array<int, 3>& aux);

/// Full correlation tensor of the same direct-sum strategy.
Correlation qubit_correlation(const QubitStrategy& strategy, double mix,
                              const std::array<int, 3>& aux);

/// Mixing weight placing theta at theta_target for the given deterministic
/// block, or nullopt when no weight in [0,1] does.
std::optional<double> mix_for_theta(double theta_target,
                                    const std::array<int, 3>& aux);

/// Seeded random search (random restarts plus local perturbation of the
/// incumbent) for the best value at |theta - theta_target| <= 1e-3.
double random_search_max(double theta_target, int iterations, std::uint64_t seed);

}  // namespace deltagame::oracle
