#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscar/linalg.hpp"
#include "oscar/prox.hpp"

namespace oscar {

/// Which proximity operator a solver applies: the exact grouping operator or
/// the sort-and-threshold approximation.
enum class ProxStepKind { GPO, APO };

enum class SolverKind { Fista, Twist, Sparsa, Admm, Sbm, Padmm };

const char* to_string(ProxStepKind kind);
const char* to_string(SolverKind kind);
std::optional<ProxStepKind> prox_kind_from_string(const std::string& name);
std::optional<SolverKind> solver_kind_from_string(const std::string& name);

struct FistaOptions {
    std::optional<double> lipschitz;  // default: 1.02 * spectral_norm_sq(A)
};

struct TwistOptions {
    // Defaults follow the usual two-step recommendation with the eigenvalues
    // of A^T A / L assumed in [assumed_eig_min, 1]:
    //   rho   = (1 - kappa) / (1 + kappa), kappa = eig_min / eig_max
    //   alpha = 2 / (1 + sqrt(1 - rho^2))
    //   beta  = 2 * alpha / (eig_max + eig_min)
    std::optional<double> alpha;
    std::optional<double> beta;
    double assumed_eig_min = 1e-4;
    std::optional<double> lipschitz;
};

struct SparsaOptions {
    double eta = 2.0;
    double alpha_min = 1e-30;
    double alpha_max = 1e30;
};

struct AdmmOptions {
    double mu = 1.0;
};

struct PadmmOptions {
    std::optional<double> mu;  // default: 1.02 * ||A||_2
};

struct SolverConfig {
    OscarParams params;
    ProxStepKind prox = ProxStepKind::GPO;
    double tol = 0.01;
    int max_iter = 500;
    FistaOptions fista;
    TwistOptions twist;
    SparsaOptions sparsa;
    AdmmOptions admm;   // shared by ADMM and SBM
    PadmmOptions padmm;
    // When set, per-iteration MAE/MSE traces against this vector are recorded.
    std::optional<Vec> ground_truth;

    void validate() const;
};

struct SolverRun {
    Vec x_final;
    int iterations = 0;
    double wall_time_s = 0.0;
    bool converged = false;
    // All traces have length iterations + 1 and include the starting point.
    std::vector<double> objective_trace;
    std::vector<double> trace_time_s;  // monotonic, seconds since solve start
    std::vector<double> mae_trace;     // empty unless ground_truth was given
    std::vector<double> mse_trace;
};

/// h(x) = 0.5 * ||y - A x||^2 + r_oscar(x).
double objective(const Vec& x, const Mat& A, const Vec& y, const OscarParams& params);

/// Relative-change stopping rule ||x_next - x_prev|| / ||x_next|| <= tol
/// (non-strict). A zero x_next converges only against a zero x_prev.
bool stop_check(const Vec& x_next, const Vec& x_prev, double tol);

/// prox of (f*/mu) for the data term f(z) = 0.5 * ||y - z||^2, in closed form
/// (mu q - y) / (mu + 1); obtained from Moreau's identity. Used by PADMM.
Vec quadratic_conjugate_prox(const Vec& q, const Vec& y, double mu);

SolverRun solve_fista(const Mat& A, const Vec& y, const SolverConfig& config);
SolverRun solve_twist(const Mat& A, const Vec& y, const SolverConfig& config);
SolverRun solve_sparsa(const Mat& A, const Vec& y, const SolverConfig& config);
SolverRun solve_admm(const Mat& A, const Vec& y, const SolverConfig& config);
SolverRun solve_sbm(const Mat& A, const Vec& y, const SolverConfig& config);
SolverRun solve_padmm(const Mat& A, const Vec& y, const SolverConfig& config);

SolverRun solve(SolverKind kind, const Mat& A, const Vec& y, const SolverConfig& config);

}  // namespace oscar
