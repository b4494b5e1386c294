#include "deltagame/game.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace deltagame {

Game delta_game() {
    Game g;
    g.n = 3;
    g.m = 2;
    g.rule.assign(3 * 3 * 2 * 2, 0);
    g.pi.assign(3 * 3, 0.0);
    for (int v = 0; v < 3; ++v) {
        for (int w = 0; w < 3; ++w) {
            const bool dashed = (v == w);
            const bool solid = (w == (v + 1) % 3);
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    bool ok = true;
                    if (dashed) ok = (i == j);
                    else if (solid) ok = (i != j);
                    g.rule[((static_cast<std::size_t>(v) * 3 + w) * 2 + i) * 2 + j] = ok ? 1 : 0;
                }
            }
            if (dashed || solid) g.pi[static_cast<std::size_t>(v) * 3 + w] = 1.0 / 6.0;
        }
    }
    return g;
}

CorrelationFlags validate_correlation(const Correlation& p, double tol) {
    if (p.n <= 0 || p.m <= 0 ||
        p.p.size() != static_cast<std::size_t>(p.n) * p.n * p.m * p.m) {
        throw std::invalid_argument("correlation tensor shape mismatch");
    }
    CorrelationFlags flags;
    flags.valid = true;
    flags.synchronous = true;
    for (int v = 0; v < p.n; ++v) {
        for (int w = 0; w < p.n; ++w) {
            double total = 0.0;
            for (int i = 0; i < p.m; ++i) {
                for (int j = 0; j < p.m; ++j) {
                    const double x = p.at(i, j, v, w);
                    if (x < -tol) flags.valid = false;
                    total += x;
                }
            }
            if (std::abs(total - 1.0) > tol) flags.valid = false;
        }
    }
    for (int v = 0; v < p.n; ++v) {
        for (int i = 0; i < p.m; ++i) {
            for (int j = 0; j < p.m; ++j) {
                if (i != j && p.at(i, j, v, v) > tol) flags.synchronous = false;
            }
        }
    }
    return flags;
}

double value(const Game& g, const Correlation& p) {
    if (p.n != g.n || p.m != g.m) {
        throw std::invalid_argument("correlation does not match game shape");
    }
    double total = 0.0;
    for (int v = 0; v < g.n; ++v) {
        for (int w = 0; w < g.n; ++w) {
            const double weight = g.pi_at(v, w);
            if (weight == 0.0) continue;
            for (int i = 0; i < g.m; ++i) {
                for (int j = 0; j < g.m; ++j) {
                    if (g.allowed(v, w, i, j)) total += weight * p.at(i, j, v, w);
                }
            }
        }
    }
    return total;
}

Correlation deterministic_correlation(const std::array<int, 3>& assign) {
    Correlation p(3, 2);
    for (int v = 0; v < 3; ++v) {
        for (int w = 0; w < 3; ++w) {
            p.at(assign[v], assign[w], v, w) = 1.0;
        }
    }
    return p;
}

ThetaPoint theta_point_of(const Correlation& p, double tol) {
    const auto flags = validate_correlation(p, tol);
    if (!flags.synchronous) {
        throw std::domain_error("theta_point_of requires a synchronous correlation");
    }
    ThetaPoint pt;
    for (int v = 0; v < p.n; ++v) {
        pt.theta += p.at(0, 0, v, v);
        pt.beta += p.at(0, 0, v, (v + 1) % p.n);
    }
    pt.theta /= p.n;
    pt.beta /= p.n;
    pt.theta_tilde = 0.5 + pt.theta - pt.beta;
    return pt;
}

std::string correlation_to_json(const Correlation& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["m"] = p.m;
    auto tensor = nlohmann::json::array();
    for (int i = 0; i < p.m; ++i) {
        auto ji = nlohmann::json::array();
        for (int jj = 0; jj < p.m; ++jj) {
            auto jv = nlohmann::json::array();
            for (int v = 0; v < p.n; ++v) {
                auto jw = nlohmann::json::array();
                for (int w = 0; w < p.n; ++w) jw.push_back(p.at(i, jj, v, w));
                jv.push_back(std::move(jw));
            }
            ji.push_back(std::move(jv));
        }
        tensor.push_back(std::move(ji));
    }
    j["p"] = std::move(tensor);
    return j.dump(2);
}

Correlation correlation_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Correlation p(j.at("n").get<int>(), j.at("m").get<int>());
    const auto& tensor = j.at("p");
    for (int i = 0; i < p.m; ++i) {
        for (int jj = 0; jj < p.m; ++jj) {
            for (int v = 0; v < p.n; ++v) {
                for (int w = 0; w < p.n; ++w) {
                    p.at(i, jj, v, w) = tensor.at(i).at(jj).at(v).at(w).get<double>();
                }
            }
        }
    }
    return p;
}

}  // namespace deltagame
