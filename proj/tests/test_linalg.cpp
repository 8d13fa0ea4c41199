#include "oscar/linalg.hpp"

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "test_util.hpp"

using namespace oscar;

namespace {

Mat random_matrix(TestRng& rng, Eigen::Index m, Eigen::Index n) {
    Mat A(m, n);
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            A(r, c) = rng.normal();
        }
    }
    return A;
}

}  // namespace

TEST_CASE("matvec and matvec_t basics") {
    Mat I = Mat::Identity(3, 3);
    Vec x(3);
    x << 1.0, -2.0, 0.5;
    CHECK(matvec(I, x) == x);
    CHECK(matvec_t(I, x) == x);

    Mat Z = Mat::Zero(2, 3);
    CHECK(matvec(Z, x) == Vec::Zero(2));

    Mat A(2, 2);
    A << 1.0, 2.0, 3.0, 4.0;
    Vec ones = Vec::Ones(2);
    const Vec prod = matvec(A, ones);
    CHECK(prod[0] == 3.0);
    CHECK(prod[1] == 7.0);
    Vec e0(2);
    e0 << 1.0, 0.0;
    const Vec tprod = matvec_t(A, e0);
    CHECK(tprod[0] == 1.0);
    CHECK(tprod[1] == 2.0);

    CHECK_THROWS_AS(matvec(A, Vec::Zero(3)), DimensionError);
    CHECK_THROWS_AS(matvec_t(A, Vec::Zero(3)), DimensionError);
}

TEST_CASE("adjoint identity") {
    TestRng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index m = rng.integer(1, 20);
        const Eigen::Index n = rng.integer(1, 20);
        const Mat A = random_matrix(rng, m, n);
        const Vec x = rng.normal_vector(n);
        const Vec r = rng.normal_vector(m);
        const double lhs = matvec(A, x).dot(r);
        const double rhs = x.dot(matvec_t(A, r));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("spectral_norm_sq known spectra") {
    CHECK(spectral_norm_sq(Mat::Identity(4, 4)) == doctest::Approx(1.0));
    Mat D = Mat::Zero(2, 2);
    D(0, 0) = 3.0;
    D(1, 1) = 1.0;
    CHECK(spectral_norm_sq(D) == doctest::Approx(9.0));
    CHECK(spectral_norm_sq(Mat::Zero(3, 5)) == 0.0);
}

TEST_CASE("spectral_norm_sq matches a dense eigensolver within 1%") {
    TestRng rng(5);
    const Mat A = random_matrix(rng, 50, 100);
    const Eigen::MatrixXd gram = Eigen::MatrixXd(A.transpose() * A);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    const double truth = eig.eigenvalues().maxCoeff();
    const double estimate = spectral_norm_sq(A);
    CHECK(estimate == doctest::Approx(truth).epsilon(0.01));
}

TEST_CASE("spectral_norm_sq is a near-upper bound after the safety factor") {
    TestRng rng(7);
    const Mat A = random_matrix(rng, 30, 40);
    const double bound = 1.02 * spectral_norm_sq(A);
    for (int trial = 0; trial < 200; ++trial) {
        Vec x = rng.normal_vector(40);
        x.normalize();
        CHECK(matvec(A, x).squaredNorm() <= bound);
    }
}

TEST_CASE("spectral_norm_sq is deterministic") {
    TestRng rng(9);
    const Mat A = random_matrix(rng, 15, 25);
    CHECK(spectral_norm_sq(A) == spectral_norm_sq(A));
}

TEST_CASE("GramSolver trivial systems") {
    const GramSolver zero_case(Mat::Zero(2, 2), 1.0);
    Vec rhs(2);
    rhs << 3.0, -1.0;
    CHECK(zero_case.solve(rhs) == rhs);

    const GramSolver identity_case(Mat::Identity(2, 2), 1.0);
    const Vec half = identity_case.solve(rhs);
    CHECK(half[0] == doctest::Approx(1.5));
    CHECK(half[1] == doctest::Approx(-0.5));

    CHECK_THROWS_AS(GramSolver(Mat::Identity(2, 2), 0.0), ParameterError);
    CHECK_THROWS_AS(GramSolver(Mat::Identity(2, 2), -1.0), ParameterError);
    CHECK_THROWS_AS(identity_case.solve(Vec::Zero(3)), DimensionError);
}

TEST_CASE("GramSolver residuals on both factorization paths") {
    TestRng rng(11);
    for (const bool wide : {true, false}) {
        const Eigen::Index m = wide ? 20 : 30;
        const Eigen::Index n = wide ? 30 : 20;
        const Mat A = random_matrix(rng, m, n);
        for (const double mu : {0.1, 1.0, 10.0}) {
            const GramSolver solver(A, mu);
            for (int trial = 0; trial < 20; ++trial) {
                const Vec rhs = rng.normal_vector(n);
                const Vec x = solver.solve(rhs);
                const double residual = (solver.apply(x) - rhs).norm() / rhs.norm();
                CHECK(residual <= 1e-8);
            }
        }
    }
}
