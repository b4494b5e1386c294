#pragma once

#include <string>
#include <vector>

namespace deltagame::curves {

struct CurveRow {
    double theta = 0.0;
    double f_l = 0.5;
    double f_qc_u = 0.0;
    double f_vect_u = 0.0;
    double beta0 = 0.0;
    double beta_min_vect = 0.0;
};

std::vector<CurveRow> build_curve_table(int grid_points, double tol = 1e-8);

/// Header: theta,f_l,f_qc_u,f_vect_u,beta0,beta_min_vect; fixed 12 decimals.
std::string to_csv(const std::vector<CurveRow>& rows);
std::string to_json(const std::vector<CurveRow>& rows);

/// gnuplot commands reproducing the two upper curves and the shared lower
/// bound from a CSV file at csv_path.
std::string gnuplot_script(const std::string& csv_path);

/// Witness JSON: {model, theta, beta, value, correlation: {n,m,p}, witness:
/// {vectors | state}}. model is "vect" or "qc"; the witness sits on the
/// upper boundary at theta.
std::string witness_json(double theta, const std::string& model);

}  // namespace deltagame::curves
