#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cstdint>

#include "oscar/errors.hpp"
#include "oscar/prox.hpp"

namespace oscar {

/// Dense row-major matrix, double precision.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Vec matvec(const Mat& A, const Vec& x);
Vec matvec_t(const Mat& A, const Vec& r);

inline constexpr std::uint64_t kPowerIterationSeed = 0x05CA21ull;

/// Estimate of ||A||_2^2 by power iteration on A^T A, started from a seeded
/// pseudo-random unit vector so the result is reproducible. Stops when the
/// Rayleigh quotient changes by less than `tol` relative, or at `max_iter`.
/// Returns 0 for a zero matrix. Callers using the result as a Lipschitz
/// constant should multiply by a small safety factor (1.02 throughout this
/// project).
double spectral_norm_sq(const Mat& A, double tol = 1e-6, int max_iter = 2000,
                        std::uint64_t seed = kPowerIterationSeed);

/// Factorization of (A^T A + mu I) for repeated solves. When m < n the n x n
/// system is solved through the m x m identity
/// (A^T A + mu I)^{-1} = (I - A^T (A A^T + mu I)^{-1} A) / mu,
/// which halves the factorization cost for the m = n/2 instances used here.
class GramSolver {
  public:
    GramSolver(const Mat& A, double mu);

    /// x with (A^T A + mu I) x = rhs.
    Vec solve(const Vec& rhs) const;

    /// (A^T A + mu I) x, for residual checks.
    Vec apply(const Vec& x) const;

    double mu() const { return mu_; }

  private:
    double mu_;
    bool dual_;  // true: factor A A^T + mu I (m < n)
    Mat A_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
};

}  // namespace oscar
