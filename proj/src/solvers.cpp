#include "oscar/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

namespace oscar {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_problem(const Mat& A, const Vec& y) {
    if (y.size() != A.rows()) {
        throw DimensionError("solver: y has length " + std::to_string(y.size()) +
                             " but A has " + std::to_string(A.rows()) + " rows");
    }
}

Vec prox_step(const Vec& v, double l1, double l2, ProxStepKind kind) {
    const OscarParams p{l1, l2};
    return kind == ProxStepKind::GPO ? oscar_gpo(v, p) : oscar_apo(v, p);
}

void check_finite(const Vec& x, int iteration, const Vec& last_good) {
    if (!x.allFinite()) {
        throw DivergenceError("solver diverged: non-finite iterate at iteration " +
                                  std::to_string(iteration),
                              iteration, last_good);
    }
}

double auto_lipschitz(const Mat& A) {
    const double s = 1.02 * spectral_norm_sq(A);
    return s > 0.0 ? s : 1.0;  // zero matrix: any positive step is valid
}

// Collects the per-iteration traces shared by all solvers.
class RunRecorder {
  public:
    RunRecorder(const Mat& A, const Vec& y, const SolverConfig& config)
        : A_(A), y_(y), config_(config), start_(Clock::now()) {}

    double record(const Vec& x) {
        const double h = objective(x, A_, y_, config_.params);
        record_with_objective(x, h);
        return h;
    }

    void record_with_objective(const Vec& x, double h) {
        run_.objective_trace.push_back(h);
        run_.trace_time_s.push_back(seconds_since(start_));
        if (config_.ground_truth) {
            const Vec err = *config_.ground_truth - x;
            const double n = static_cast<double>(err.size());
            run_.mae_trace.push_back(err.lpNorm<1>() / n);
            run_.mse_trace.push_back(err.squaredNorm() / n);
        }
    }

    SolverRun finish(Vec x_final, bool converged) {
        run_.x_final = std::move(x_final);
        run_.converged = converged;
        run_.iterations = static_cast<int>(run_.objective_trace.size()) - 1;
        run_.wall_time_s = seconds_since(start_);
        return std::move(run_);
    }

  private:
    const Mat& A_;
    const Vec& y_;
    const SolverConfig& config_;
    Clock::time_point start_;
    SolverRun run_;
};

}  // namespace

const char* to_string(ProxStepKind kind) {
    return kind == ProxStepKind::GPO ? "gpo" : "apo";
}

const char* to_string(SolverKind kind) {
    switch (kind) {
        case SolverKind::Fista: return "fista";
        case SolverKind::Twist: return "twist";
        case SolverKind::Sparsa: return "sparsa";
        case SolverKind::Admm: return "admm";
        case SolverKind::Sbm: return "sbm";
        case SolverKind::Padmm: return "padmm";
    }
    return "?";
}

std::optional<ProxStepKind> prox_kind_from_string(const std::string& name) {
    if (name == "gpo") return ProxStepKind::GPO;
    if (name == "apo") return ProxStepKind::APO;
    return std::nullopt;
}

std::optional<SolverKind> solver_kind_from_string(const std::string& name) {
    if (name == "fista") return SolverKind::Fista;
    if (name == "twist") return SolverKind::Twist;
    if (name == "sparsa") return SolverKind::Sparsa;
    if (name == "admm") return SolverKind::Admm;
    if (name == "sbm") return SolverKind::Sbm;
    if (name == "padmm") return SolverKind::Padmm;
    return std::nullopt;
}

void SolverConfig::validate() const {
    if (!(params.lambda1 >= 0.0) || !(params.lambda2 >= 0.0)) {
        throw ParameterError("solver: OSCAR weights must be nonnegative");
    }
    if (!(tol > 0.0)) {
        throw ParameterError("solver: tol must be positive");
    }
    if (max_iter < 1) {
        throw ParameterError("solver: max_iter must be >= 1");
    }
    if (!(sparsa.eta > 1.0)) {
        throw ParameterError("solver: SpaRSA eta must be > 1");
    }
    if (!(sparsa.alpha_min > 0.0) || !(sparsa.alpha_min < sparsa.alpha_max)) {
        throw ParameterError("solver: SpaRSA needs 0 < alpha_min < alpha_max");
    }
    if (!(admm.mu > 0.0)) {
        throw ParameterError("solver: ADMM/SBM mu must be positive");
    }
    if (padmm.mu && !(*padmm.mu > 0.0)) {
        throw ParameterError("solver: PADMM mu must be positive");
    }
}

double objective(const Vec& x, const Mat& A, const Vec& y, const OscarParams& params) {
    check_problem(A, y);
    const Vec r = y - matvec(A, x);
    return 0.5 * r.squaredNorm() + oscar_value(x, params);
}

bool stop_check(const Vec& x_next, const Vec& x_prev, double tol) {
    if (x_next.size() != x_prev.size()) {
        throw DimensionError("stop_check: iterates differ in length");
    }
    const double scale = x_next.norm();
    if (scale == 0.0) {
        return x_prev.norm() == 0.0;
    }
    return (x_next - x_prev).norm() / scale <= tol;
}

Vec quadratic_conjugate_prox(const Vec& q, const Vec& y, double mu) {
    if (q.size() != y.size()) {
        throw DimensionError("quadratic_conjugate_prox: dimension mismatch");
    }
    if (!(mu > 0.0)) {
        throw ParameterError("quadratic_conjugate_prox requires mu > 0");
    }
    return (mu * q - y) / (mu + 1.0);
}

SolverRun solve_fista(const Mat& A, const Vec& y, const SolverConfig& config) {
    config.validate();
    check_problem(A, y);
    const double L = config.fista.lipschitz.value_or(auto_lipschitz(A));
    if (!(L > 0.0)) {
        throw ParameterError("FISTA: Lipschitz constant must be positive");
    }
    const Eigen::Index n = A.cols();
    RunRecorder rec(A, y, config);

    Vec x_prev = Vec::Zero(n);
    Vec u = Vec::Zero(n);
    double t = 1.0;
    rec.record(x_prev);
    bool converged = false;
    for (int k = 1; k <= config.max_iter; ++k) {
        const Vec v = u - matvec_t(A, matvec(A, u) - y) / L;
        Vec x = prox_step(v, config.params.lambda1 / L, config.params.lambda2 / L, config.prox);
        check_finite(x, k, x_prev);
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        u = x + ((t - 1.0) / t_next) * (x - x_prev);
        rec.record(x);
        converged = stop_check(x, x_prev, config.tol);
        x_prev = std::move(x);
        t = t_next;
        if (converged) {
            break;
        }
    }
    return rec.finish(std::move(x_prev), converged);
}

SolverRun solve_twist(const Mat& A, const Vec& y, const SolverConfig& config) {
    config.validate();
    check_problem(A, y);
    const double L = config.twist.lipschitz.value_or(auto_lipschitz(A));
    if (!(L > 0.0)) {
        throw ParameterError("TwIST: Lipschitz constant must be positive");
    }
    const double eig_min = config.twist.assumed_eig_min;
    const double eig_max = 1.0;
    if (!(eig_min > 0.0) || !(eig_min < eig_max)) {
        throw ParameterError("TwIST: assumed_eig_min must lie in (0, 1)");
    }
    const double kappa = eig_min / eig_max;
    const double rho = (1.0 - kappa) / (1.0 + kappa);
    const double alpha = config.twist.alpha.value_or(2.0 / (1.0 + std::sqrt(1.0 - rho * rho)));
    const double beta = config.twist.beta.value_or(2.0 * alpha / (eig_max + eig_min));
    const double l1 = config.params.lambda1 / L;
    const double l2 = config.params.lambda2 / L;

    const Eigen::Index n = A.cols();
    RunRecorder rec(A, y, config);

    Vec x_prev = Vec::Zero(n);
    rec.record(x_prev);
    // first step is a plain thresholded gradient step; the two-step recursion
    // needs a pair of past iterates
    Vec x = prox_step(x_prev - matvec_t(A, matvec(A, x_prev) - y) / L, l1, l2, config.prox);
    check_finite(x, 1, x_prev);
    double h_curr = rec.record(x);
    bool converged = stop_check(x, x_prev, config.tol);
    for (int k = 2; k <= config.max_iter && !converged; ++k) {
        Vec g = prox_step(x - matvec_t(A, matvec(A, x) - y) / L, l1, l2, config.prox);
        Vec x_next = (1.0 - alpha) * x_prev + (alpha - beta) * x + beta * g;
        check_finite(x_next, k, x);
        double h_next = objective(x_next, A, y, config.params);
        if (h_next > h_curr) {
            // monotone safeguard: the aggressive two-step combination can
            // cycle; the plain thresholded gradient step never increases h
            x_next = std::move(g);
            h_next = objective(x_next, A, y, config.params);
        }
        rec.record_with_objective(x_next, h_next);
        converged = stop_check(x_next, x, config.tol);
        x_prev = std::move(x);
        x = std::move(x_next);
        h_curr = h_next;
    }
    return rec.finish(std::move(x), converged);
}

SolverRun solve_sparsa(const Mat& A, const Vec& y, const SolverConfig& config) {
    config.validate();
    check_problem(A, y);
    const Eigen::Index n = A.cols();
    const SparsaOptions& opt = config.sparsa;
    RunRecorder rec(A, y, config);

    Vec x_prev = Vec::Zero(n);
    rec.record(x_prev);

    Vec g = matvec_t(A, matvec(A, x_prev) - y);
    // scale-aware first step; alpha_min itself would blow the iterate up
    const double g_inf = n > 0 ? g.cwiseAbs().maxCoeff() : 0.0;
    const double alpha0 = std::clamp(std::max(g_inf, 1.0), opt.alpha_min, opt.alpha_max);
    Vec x = prox_step(x_prev - g / alpha0, config.params.lambda1 / alpha0,
                      config.params.lambda2 / alpha0, config.prox);
    check_finite(x, 1, x_prev);
    double h_curr = rec.record(x);
    bool converged = stop_check(x, x_prev, config.tol);

    for (int k = 2; k <= config.max_iter && !converged; ++k) {
        const Vec s = x - x_prev;
        const double ss = s.squaredNorm();
        if (ss == 0.0) {
            converged = true;  // degenerate step; the stop check has already fired
            break;
        }
        const double bb = matvec(A, s).squaredNorm() / ss;  // s^T A^T A s / s^T s
        double alpha = std::clamp(bb, opt.alpha_min, opt.alpha_max);
        g = matvec_t(A, matvec(A, x) - y);

        Vec x_next;
        double h_next = 0.0;
        bool accepted = false;
        while (true) {
            x_next = prox_step(x - g / alpha, config.params.lambda1 / alpha,
                               config.params.lambda2 / alpha, config.prox);
            check_finite(x_next, k, x);
            h_next = objective(x_next, A, y, config.params);
            // a bit-identical iterate is a fixed point, not a failed step
            if (h_next < h_curr || (x_next.array() == x.array()).all()) {
                accepted = true;
                break;
            }
            if (alpha >= opt.alpha_max) {
                break;
            }
            alpha = std::min(alpha * opt.eta, opt.alpha_max);
        }
        if (!accepted) {
            throw StagnationError("SpaRSA: no objective decrease up to alpha_max at iteration " +
                                      std::to_string(k),
                                  k, x);
        }
        rec.record_with_objective(x_next, h_next);
        converged = stop_check(x_next, x, config.tol);
        x_prev = std::move(x);
        x = std::move(x_next);
        h_curr = h_next;
    }
    return rec.finish(std::move(x), converged);
}

SolverRun solve_admm(const Mat& A, const Vec& y, const SolverConfig& config) {
    config.validate();
    check_problem(A, y);
    const Eigen::Index n = A.cols();
    RunRecorder rec(A, y, config);  // wall time includes the factorization
    const double mu = config.admm.mu;
    const GramSolver gram(A, mu);
    const Vec aty = matvec_t(A, y);

    Vec z = Vec::Zero(n);
    Vec d = Vec::Zero(n);
    rec.record(z);
    bool converged = false;
    for (int k = 1; k <= config.max_iter; ++k) {
        const Vec x = gram.solve(aty + mu * (z - d));
        Vec z_next = prox_step(x + d, config.params.lambda1 / mu, config.params.lambda2 / mu,
                               config.prox);
        check_finite(z_next, k, z);
        d += x - z_next;
        rec.record(z_next);
        converged = stop_check(z_next, z, config.tol);
        z = std::move(z_next);
        if (converged) {
            break;
        }
    }
    return rec.finish(std::move(z), converged);
}

SolverRun solve_sbm(const Mat& A, const Vec& y, const SolverConfig& config) {
    config.validate();
    check_problem(A, y);
    const Eigen::Index n = A.cols();
    RunRecorder rec(A, y, config);  // wall time includes the factorization
    const double mu = config.admm.mu;
    const GramSolver gram(A, mu);
    const Vec aty = matvec_t(A, y);

    // split-Bregman arrangement of the x = z splitting; b accumulates the
    // Bregman residual and plays the role of the scaled dual variable
    Vec z = Vec::Zero(n);
    Vec b = Vec::Zero(n);
    rec.record(z);
    bool converged = false;
    for (int k = 1; k <= config.max_iter; ++k) {
        const Vec x = gram.solve(aty + mu * (z - b));
        Vec z_next = prox_step(x + b, config.params.lambda1 / mu, config.params.lambda2 / mu,
                               config.prox);
        check_finite(z_next, k, z);
        b += x - z_next;
        rec.record(z_next);
        converged = stop_check(z_next, z, config.tol);
        z = std::move(z_next);
        if (converged) {
            break;
        }
    }
    return rec.finish(std::move(z), converged);
}

SolverRun solve_padmm(const Mat& A, const Vec& y, const SolverConfig& config) {
    config.validate();
    check_problem(A, y);
    double mu = config.padmm.mu.value_or(1.02 * std::sqrt(spectral_norm_sq(A)));
    if (!(mu > 0.0)) {
        mu = 1.0;  // zero matrix
    }
    const Eigen::Index n = A.cols();
    RunRecorder rec(A, y, config);

    Vec x = Vec::Zero(n);
    Vec d = Vec::Zero(n);  // d_0 = x_0
    Vec v = Vec::Zero(A.rows());
    rec.record(x);
    bool converged = false;
    for (int k = 1; k <= config.max_iter; ++k) {
        v = quadratic_conjugate_prox(v + matvec(A, d) / mu, y, mu);
        Vec x_next = prox_step(x - matvec_t(A, v) / mu, config.params.lambda1 / mu,
                               config.params.lambda2 / mu, config.prox);
        check_finite(x_next, k, x);
        d = 2.0 * x_next - x;
        rec.record(x_next);
        converged = stop_check(x_next, x, config.tol);
        x = std::move(x_next);
        if (converged) {
            break;
        }
    }
    return rec.finish(std::move(x), converged);
}

SolverRun solve(SolverKind kind, const Mat& A, const Vec& y, const SolverConfig& config) {
    switch (kind) {
        case SolverKind::Fista: return solve_fista(A, y, config);
        case SolverKind::Twist: return solve_twist(A, y, config);
        case SolverKind::Sparsa: return solve_sparsa(A, y, config);
        case SolverKind::Admm: return solve_admm(A, y, config);
        case SolverKind::Sbm: return solve_sbm(A, y, config);
        case SolverKind::Padmm: return solve_padmm(A, y, config);
    }
    throw ParameterError("unknown solver kind");
}

}  // namespace oscar
