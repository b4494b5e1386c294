#include "deltagame/curves.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "deltagame/calgebra.hpp"
#include "deltagame/game.hpp"
#include "deltagame/lp.hpp"
#include "deltagame/vect.hpp"

namespace deltagame::curves {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

nlohmann::json correlation_node(const Correlation& p) {
    return nlohmann::json::parse(correlation_to_json(p));
}

}  // namespace

std::vector<CurveRow> build_curve_table(int grid_points, double tol) {
    if (grid_points < 2) throw std::domain_error("grid_points must be >= 2");
    std::vector<CurveRow> rows;
    rows.reserve(grid_points);
    for (int k = 0; k < grid_points; ++k) {
        const double theta = static_cast<double>(k) / (grid_points - 1);
        CurveRow r;
        r.theta = theta;
        r.f_l = 0.5;
        r.f_qc_u = lp::f_t(theta).upper;
        r.f_vect_u = vect::f_vect(theta).upper;
        r.beta0 = lp::beta0_closed(theta);
        r.beta_min_vect = vect::beta_min_numeric(theta, tol);
        rows.push_back(r);
    }
    return rows;
}

std::string to_csv(const std::vector<CurveRow>& rows) {
    std::string out = "theta,f_l,f_qc_u,f_vect_u,beta0,beta_min_vect\n";
    for (const auto& r : rows) {
        out += fmt(r.theta) + ',' + fmt(r.f_l) + ',' + fmt(r.f_qc_u) + ',' +
               fmt(r.f_vect_u) + ',' + fmt(r.beta0) + ',' + fmt(r.beta_min_vect) + '\n';
    }
    return out;
}

std::string to_json(const std::vector<CurveRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
        j.push_back({{"theta", r.theta},
                     {"f_l", r.f_l},
                     {"f_qc_u", r.f_qc_u},
                     {"f_vect_u", r.f_vect_u},
                     {"beta0", r.beta0},
                     {"beta_min_vect", r.beta_min_vect}});
    }
    return j.dump(2) + "\n";
}

std::string gnuplot_script(const std::string& csv_path) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set xlabel 'theta'\n";
    s += "set ylabel 'theta~'\n";
    s += "set xrange [0:1]\n";
    s += "set yrange [0.45:1]\n";
    s += "set key bottom center\n";
    s += "plot '" + csv_path + "' using 1:3 with lines title 'f_qc^u', \\\n";
    s += "     '" + csv_path + "' using 1:4 with lines title 'f_vect^u', \\\n";
    s += "     '" + csv_path + "' using 1:2 with lines title 'f^l'\n";
    return s;
}

std::string witness_json(double theta, const std::string& model) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::domain_error("theta must lie in [0, 1]");
    }
    const Game g = delta_game();
    nlohmann::json j;
    j["model"] = model;
    j["theta"] = theta;
    if (model == "vect") {
        const double beta = vect::beta_range_closed(theta).min;
        const auto wit = vect::vect_witness(theta, beta);
        const auto flags = validate_correlation(wit.correlation);
        if (!flags.valid || !flags.synchronous) {
            throw std::runtime_error("vect witness failed validation");
        }
        j["beta"] = beta;
        j["value"] = value(g, wit.correlation);
        j["correlation"] = correlation_node(wit.correlation);
        j["witness"] = {{"vectors", wit.vectors}};
    } else if (model == "qc") {
        const auto opt = alg::optimal_state(theta);
        const Correlation p = alg::correlation_from_state(opt.state);
        const auto flags = validate_correlation(p);
        if (!flags.valid || !flags.synchronous) {
            throw std::runtime_error("qc witness failed validation");
        }
        j["beta"] = opt.beta0;
        j["value"] = value(g, p);
        j["correlation"] = correlation_node(p);
        j["witness"] = {{"state", {{"t", opt.state.t}, {"s", opt.state.s}}}};
    } else {
        throw std::domain_error("model must be 'vect' or 'qc'");
    }
    return j.dump(2) + "\n";
}

}  // namespace deltagame::curves
