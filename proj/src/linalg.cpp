#include "oscar/linalg.hpp"

#include <cmath>
#include <string>

#include "oscar/rng.hpp"

namespace oscar {

Vec matvec(const Mat& A, const Vec& x) {
    if (x.size() != A.cols()) {
        throw DimensionError("matvec: matrix has " + std::to_string(A.cols()) +
                             " columns but vector has length " + std::to_string(x.size()));
    }
    return A * x;
}

Vec matvec_t(const Mat& A, const Vec& r) {
    if (r.size() != A.rows()) {
        throw DimensionError("matvec_t: matrix has " + std::to_string(A.rows()) +
                             " rows but vector has length " + std::to_string(r.size()));
    }
    return A.transpose() * r;
}

double spectral_norm_sq(const Mat& A, double tol, int max_iter, std::uint64_t seed) {
    if (A.rows() == 0 || A.cols() == 0) {
        return 0.0;
    }
    if (!(tol > 0.0) || max_iter < 1) {
        throw ParameterError("spectral_norm_sq requires tol > 0 and max_iter >= 1");
    }
    const Eigen::Index n = A.cols();
    rng::Generator gen(seed);
    Vec b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        b[i] = gen.uniform(-1.0, 1.0);
    }
    b.normalize();

    double lambda = 0.0;
    double lambda_prev = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vec z = A.transpose() * (A * b);  // (A^T A) b
        lambda = b.dot(z);                // Rayleigh quotient, b is unit
        const double nz = z.norm();
        if (nz == 0.0) {
            return 0.0;  // b in the null space; only happens for A = 0
        }
        b = z / nz;
        if (it > 0 && std::abs(lambda - lambda_prev) <= tol * std::max(std::abs(lambda), 1e-300)) {
            break;
        }
        lambda_prev = lambda;
    }
    return lambda;
}

GramSolver::GramSolver(const Mat& A, double mu) : mu_(mu), dual_(A.rows() < A.cols()), A_(A) {
    if (!(mu > 0.0)) {
        throw ParameterError("GramSolver requires mu > 0");
    }
    // symmetric rank update fills the lower triangle, which is all LLT reads
    Eigen::MatrixXd G;
    if (dual_) {
        G = Eigen::MatrixXd::Zero(A_.rows(), A_.rows());
        G.selfadjointView<Eigen::Lower>().rankUpdate(A_);  // A A^T
    } else {
        G = Eigen::MatrixXd::Zero(A_.cols(), A_.cols());
        G.selfadjointView<Eigen::Lower>().rankUpdate(A_.transpose());  // A^T A
    }
    G.diagonal().array() += mu_;
    llt_.compute(G);
    if (llt_.info() != Eigen::Success) {
        throw ParameterError("GramSolver: Cholesky factorization failed");
    }
}

Vec GramSolver::solve(const Vec& rhs) const {
    if (rhs.size() != A_.cols()) {
        throw DimensionError("GramSolver::solve: rhs has length " + std::to_string(rhs.size()) +
                             " but the system is " + std::to_string(A_.cols()) + "-dimensional");
    }
    if (dual_) {
        const Vec t = A_ * rhs;
        const Vec s = llt_.solve(t);
        return (rhs - A_.transpose() * s) / mu_;
    }
    return llt_.solve(rhs);
}

Vec GramSolver::apply(const Vec& x) const {
    if (x.size() != A_.cols()) {
        throw DimensionError("GramSolver::apply: dimension mismatch");
    }
    return A_.transpose() * (A_ * x) + mu_ * x;
}

}  // namespace oscar
