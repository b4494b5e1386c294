#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "deltagame/calgebra.hpp"
#include "deltagame/curves.hpp"
#include "deltagame/game.hpp"
#include "deltagame/lp.hpp"
#include "deltagame/vect.hpp"
#include "deltagame/verify.hpp"

namespace {

int write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    out << content;
    return out.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained synchronous values of the Delta game over the "
                 "quantum and vector correlation models"};
    app.require_subcommand(1);

    int grid = 101;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    std::string out_path;
    std::string format = "csv";
    std::string plot_path;

    auto* curves_cmd = app.add_subcommand("curves", "emit the boundary curves on a theta grid");
    curves_cmd->add_option("--grid", grid, "number of grid points")->check(CLI::Range(2, 1000000));
    curves_cmd->add_option("--tol", tol, "bisection tolerance");
    curves_cmd->add_option("--out", out_path, "output path (default stdout)");
    curves_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    curves_cmd->add_option("--plot-script", plot_path, "also write a gnuplot script");

    double theta = 0.5;
    double beta = 0.0;
    std::string model = "vect";

    auto* feasible_cmd = app.add_subcommand("feasible", "check (theta, beta) membership");
    feasible_cmd->add_option("theta", theta)->required();
    feasible_cmd->add_option("beta", beta)->required();
    feasible_cmd->add_option("--model", model, "vect or qc")
        ->check(CLI::IsMember({"vect", "qc"}));
    feasible_cmd->add_option("--tol", tol, "bisection tolerance");

    auto* lp_cmd = app.add_subcommand("lp", "solve the beta0 linear program at theta");
    lp_cmd->add_option("--theta", theta)->required();

    auto* witness_cmd = app.add_subcommand("witness", "export an upper-boundary witness as JSON");
    witness_cmd->add_option("--theta", theta)->required();
    witness_cmd->add_option("--model", model, "vect or qc")
        ->check(CLI::IsMember({"vect", "qc"}));
    witness_cmd->add_option("--out", out_path, "output path (default stdout)");

    std::string level = "quick";
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--seed", seed, "seed for the randomized checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (curves_cmd->parsed()) {
            const auto rows = deltagame::curves::build_curve_table(grid, tol);
            const std::string body = (format == "csv") ? deltagame::curves::to_csv(rows)
                                                       : deltagame::curves::to_json(rows);
            if (write_file(out_path, body) != 0) return 1;
            if (!plot_path.empty()) {
                const std::string csv_ref = out_path.empty() ? "curves.csv" : out_path;
                if (write_file(plot_path, deltagame::curves::gnuplot_script(csv_ref)) != 0)
                    return 1;
            }
            return 0;
        }
        if (feasible_cmd->parsed()) {
            if (!(theta >= 0.0 && theta <= 1.0)) {
                std::cerr << "error: theta must lie in [0, 1]\n";
                return 1;
            }
            double lo, hi;
            bool ok;
            if (model == "vect") {
                const auto range = deltagame::vect::beta_range_closed(theta);
                lo = range.min;
                hi = range.max;
                ok = deltagame::vect::feasible(theta, beta);
                const double numeric = deltagame::vect::beta_min_numeric(theta, tol);
                std::printf("model=vect theta=%.12g beta=%.12g\n", theta, beta);
                std::printf("closed-form range: [%.12g, %.12g]\n", lo, hi);
                std::printf("numeric beta_min (bisection): %.12g\n", numeric);
            } else {
                lo = deltagame::lp::beta0_closed(theta);
                hi = theta;
                ok = beta >= lo - 1e-12 && beta <= hi + 1e-12;
                const auto sol = deltagame::lp::solve(deltagame::lp::beta0_program(theta));
                std::printf("model=qc theta=%.12g beta=%.12g\n", theta, beta);
                std::printf("closed-form range: [%.12g, %.12g]\n", lo, hi);
                std::printf("numeric beta0 (simplex): %.12g\n", sol.objective_value);
            }
            std::printf("%s\n", ok ? "feasible" : "infeasible");
            return ok ? 0 : 2;
        }
        if (lp_cmd->parsed()) {
            const auto prog = deltagame::lp::beta0_program(theta);
            const auto sol = deltagame::lp::solve(prog);
            if (sol.status != deltagame::lp::LpStatus::optimal) {
                std::printf("status: %s\n",
                            sol.status == deltagame::lp::LpStatus::infeasible ? "infeasible"
                                                                              : "unbounded");
                return 1;
            }
            std::printf("status: optimal\n");
            std::printf("beta0 = %.12f (closed form %.12f)\n", sol.objective_value,
                        deltagame::lp::beta0_closed(theta));
            std::printf("x = (beta=%.12f, s=%.12f, t=%.12f)\n", sol.x[0], sol.x[1], sol.x[2]);
            return 0;
        }
        if (witness_cmd->parsed()) {
            const std::string body = deltagame::curves::witness_json(theta, model);
            return write_file(out_path, body);
        }
        if (verify_cmd->parsed()) {
            const auto lvl = (level == "full") ? deltagame::verify::Level::full
                                               : deltagame::verify::Level::quick;
            const auto results = deltagame::verify::run_suite(lvl, seed);
            for (const auto& r : results) {
                std::printf("[%2d] %s  %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                            r.name.c_str(), r.detail.c_str());
            }
            return deltagame::verify::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
