#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "deltagame/linalg.hpp"
#include "deltagame/vect.hpp"

using namespace deltagame;
using linalg::SymMatrix;

namespace {

SymMatrix random_sym(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) m.set(i, j, u(rng));
    return m;
}

SymMatrix random_psd(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> b(static_cast<std::size_t>(dim) * dim);
    for (auto& v : b) v = u(rng);
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k)
                s += b[static_cast<std::size_t>(k) * dim + i] *
                     b[static_cast<std::size_t>(k) * dim + j];
            m.set(i, j, s);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("psd_check basics") {
    CHECK(linalg::psd_check(SymMatrix::identity(3), 0.0));

    SymMatrix d(2);
    d(0, 0) = 1.0;
    d(1, 1) = -1e-3;
    CHECK_FALSE(linalg::psd_check(d, 1e-9));

    CHECK(linalg::psd_check(vect::build_gram(0.5, 0.125), 1e-10));
    CHECK_FALSE(linalg::psd_check(vect::build_gram(0.5, 0.124), 1e-10));
}

TEST_CASE("eigen_sym small cases") {
    SymMatrix d(2);
    d(0, 0) = 2.0;
    d(1, 1) = 1.0;
    auto es = linalg::eigen_sym(d);
    CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(2.0).epsilon(1e-12));

    // circulant all-ones: spectrum {0, 0, 3}
    SymMatrix ones(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones(i, j) = 1.0;
    es = linalg::eigen_sym(ones);
    CHECK(es.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(es.values[2] == doctest::Approx(3.0).epsilon(1e-12));

    es = linalg::eigen_sym(vect::build_gram(0.5, 0.125));
    CHECK(std::abs(es.values[0]) < 1e-10);  // PSD boundary
}

TEST_CASE("eigen_sym residual and orthogonality") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 6);
        const SymMatrix m = random_sym(rng, dim);
        const auto es = linalg::eigen_sym(m);
        double norm = 0.0;
        for (double v : m.a) norm = std::max(norm, std::abs(v));
        for (int k = 0; k < dim; ++k) {
            for (int i = 0; i < dim; ++i) {
                double mq = 0.0;
                for (int j = 0; j < dim; ++j)
                    mq += m(i, j) * es.vectors[static_cast<std::size_t>(j) * dim + k];
                const double ql =
                    es.vectors[static_cast<std::size_t>(i) * dim + k] * es.values[k];
                CHECK(std::abs(mq - ql) <= 1e-10 * (1.0 + norm));
            }
        }
        for (int k = 0; k < dim; ++k) {
            for (int l = 0; l < dim; ++l) {
                double dot = 0.0;
                for (int i = 0; i < dim; ++i)
                    dot += es.vectors[static_cast<std::size_t>(i) * dim + k] *
                           es.vectors[static_cast<std::size_t>(i) * dim + l];
                CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("gram_vectors basics") {
    auto rows = linalg::gram_vectors(SymMatrix::identity(2), 1e-10);
    REQUIRE(rows.size() == 2);
    double d00 = 0.0, d01 = 0.0;
    for (int k = 0; k < 2; ++k) {
        d00 += rows[0][k] * rows[0][k];
        d01 += rows[0][k] * rows[1][k];
    }
    CHECK(d00 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d01 == doctest::Approx(0.0).epsilon(1e-12));

    SymMatrix ones(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones(i, j) = 1.0;
    rows = linalg::gram_vectors(ones, 1e-10);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += rows[i][k] * rows[j][k];
            CHECK(dot == doctest::Approx(1.0).epsilon(1e-10));
        }
    }

    SymMatrix indef(2);
    indef(0, 0) = 1.0;
    indef(1, 1) = -1.0;
    CHECK_THROWS_AS(linalg::gram_vectors(indef, 1e-10), std::domain_error);
}

TEST_CASE("gram round-trip on random PSD matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 6);
        const SymMatrix m = random_psd(rng, dim);
        const auto rows = linalg::gram_vectors(m, 1e-8);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                double dot = 0.0;
                for (int k = 0; k < dim; ++k) dot += rows[i][k] * rows[j][k];
                CHECK(std::abs(dot - m(i, j)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("gram round-trip on a feasible Gramian") {
    const auto m = vect::build_gram(0.4, 0.04);
    const auto rows = linalg::gram_vectors(m, 1e-10);
    REQUIRE(rows.size() == 7);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 7; ++k) dot += rows[i][k] * rows[j][k];
            CHECK(std::abs(dot - m(i, j)) <= 1e-8);
        }
    }
}

TEST_CASE("psd_check agrees with eigenvalue sign") {
    std::mt19937_64 rng(13);
    const double tol = 1e-9;
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 6);
        SymMatrix m = (trial % 3 == 0) ? random_psd(rng, dim) : random_sym(rng, dim);
        const double lmin = linalg::eigen_sym(m).values[0];
        if (std::abs(lmin) <= 2.0 * tol) continue;  // tol-band ambiguity
        CHECK(linalg::psd_check(m, tol) == (lmin > 0.0));
        ++checked;
    }
    CHECK(checked > 900);
}
