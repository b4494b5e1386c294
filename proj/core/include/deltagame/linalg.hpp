#pragma once

#include <vector>

namespace deltagame::linalg {

/// Dense real symmetric matrix, row-major.
struct SymMatrix {
    int dim = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

    void set(int i, int j, double v) {
        (*this)(i, j) = v;
        (*this)(j, i) = v;
    }

    static SymMatrix identity(int d);
    bool is_symmetric(double rel_tol = 1e-12) const;
};

struct EigenSystem {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column k = eigenvector of values[k], row-major dim x dim
};

/// Pivoted Cholesky feasibility test: true iff M is PSD up to -tol on the
/// spectrum. Pivot threshold tol * (1 + max initial diagonal).
bool psd_check(const SymMatrix& m, double tol);

/// Cyclic Jacobi eigendecomposition, intended for dim <= 7.
/// Throws std::runtime_error on non-convergence.
EigenSystem eigen_sym(const SymMatrix& m);

/// Gram factor rows: dim vectors whose pairwise inner products reproduce M.
/// Eigenvalues in [-tol_scale, 0) are clamped to zero; throws
/// std::domain_error when M is not PSD within tol.
std::vector<std::vector<double>> gram_vectors(const SymMatrix& m, double tol);

}  // namespace deltagame::linalg
