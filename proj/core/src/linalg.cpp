#include "deltagame/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace deltagame::linalg {

SymMatrix SymMatrix::identity(int d) {
    SymMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

bool SymMatrix::is_symmetric(double rel_tol) const {
    double max_abs = 0.0;
    for (double v : a) max_abs = std::max(max_abs, std::abs(v));
    const double thr = rel_tol * (1.0 + max_abs);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            if (std::abs((*this)(i, j) - (*this)(j, i)) > thr) return false;
        }
    }
    return true;
}

bool psd_check(const SymMatrix& m, double tol) {
    const int n = m.dim;
    SymMatrix work = m;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    double max_diag0 = 0.0;
    for (int i = 0; i < n; ++i) max_diag0 = std::max(max_diag0, work(i, i));
    const double thr = tol * (1.0 + std::max(0.0, max_diag0));

    auto swap_index = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < n; ++k) std::swap(work(i, k), work(j, k));
        for (int k = 0; k < n; ++k) std::swap(work(k, i), work(k, j));
        std::swap(perm[i], perm[j]);
    };

    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i) {
            if (work(i, i) > work(p, p)) p = i;
        }
        swap_index(k, p);
        const double d = work(k, k);
        if (d < -thr) return false;
        if (d <= thr) {
            // Remaining diagonal is essentially zero; a PSD matrix must
            // have a vanishing trailing block.
            for (int i = k; i < n; ++i) {
                if (work(i, i) < -thr) return false;
                for (int j = k; j < n; ++j) {
                    if (std::abs(work(i, j)) > 16.0 * thr + 1e-14) return false;
                }
            }
            return true;
        }
        for (int i = k + 1; i < n; ++i) {
            const double lik = work(i, k) / d;
            for (int j = k + 1; j <= i; ++j) {
                const double v = work(i, j) - lik * work(k, j);
                work(i, j) = v;
                work(j, i) = v;
            }
        }
    }
    return true;
}

EigenSystem eigen_sym(const SymMatrix& m) {
    const int n = m.dim;
    SymMatrix a = m;
    std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + i] = 1.0;

    double scale = 0.0;
    for (double v : a.a) scale = std::max(scale, std::abs(v));
    const double stop = 1e-14 * (1.0 + scale);

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(a(i, j)));
        if (off <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int qi = p + 1; qi < n; ++qi) {
                const double apq = a(p, qi);
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double app = a(p, p);
                const double aqq = a(qi, qi);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, qi);
                    a(k, p) = c * akp - s * akq;
                    a(k, qi) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(qi, k);
                    a(p, k) = c * apk - s * aqk;
                    a(qi, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double qkp = q[static_cast<std::size_t>(k) * n + p];
                    const double qkq = q[static_cast<std::size_t>(k) * n + qi];
                    q[static_cast<std::size_t>(k) * n + p] = c * qkp - s * qkq;
                    q[static_cast<std::size_t>(k) * n + qi] = s * qkp + c * qkq;
                }
            }
        }
    }
    if (sweep == max_sweeps) {
        throw std::runtime_error("eigen_sym: Jacobi sweeps did not converge");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i) < a(j, j); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) {
            es.vectors[static_cast<std::size_t>(i) * n + k] =
                q[static_cast<std::size_t>(i) * n + order[k]];
        }
    }
    return es;
}

std::vector<std::vector<double>> gram_vectors(const SymMatrix& m, double tol) {
    if (!psd_check(m, tol)) {
        throw std::domain_error("gram_vectors: matrix is not PSD within tolerance");
    }
    const int n = m.dim;
    const EigenSystem es = eigen_sym(m);
    std::vector<double> roots(n);
    for (int k = 0; k < n; ++k) roots[k] = std::sqrt(std::max(0.0, es.values[k]));

    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            rows[i][k] = es.vectors[static_cast<std::size_t>(i) * n + k] * roots[k];
        }
    }
    return rows;
}

}  // namespace deltagame::linalg
