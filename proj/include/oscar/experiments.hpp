#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "oscar/linalg.hpp"
#include "oscar/solvers.hpp"

namespace oscar {

/// Generative model for one group-sparse recovery trial: a block-structured
/// signal of length n, an m x n standard-normal sensing matrix, and white
/// Gaussian observation noise. Defaults reproduce the canonical benchmark
/// instance (n = 1000, m = 500, sigma = 0.4, lambda1 = 0.1, lambda2 = 0.001).
struct ExperimentSpec {
    Eigen::Index n = 1000;
    Eigen::Index m = 500;
    double noise_sigma = 0.4;
    OscarParams params{0.1, 0.001};
    std::uint64_t seed = 1;
};

struct TrialMetrics {
    double time_s = 0.0;
    int iterations = 0;
    double mae = 0.0;  // ||x_true - x_est||_1 / n
    double mse = 0.0;  // ||x_true - x_est||_2^2 / n
};

/// Block-structured test signal. For n = 1000 the layout is
/// [100 at 7+eps | 200 zeros | 100 at 9+eps | 200 zeros | 100 at -8+eps | 300 zeros]
/// with eps ~ N(0, 1); other lengths scale the blocks proportionally
/// (10%/20%/10%/20%/10%, rounded, trailing zeros absorb the remainder).
Vec generate_signal(const ExperimentSpec& spec);

/// m x n sensing matrix with i.i.d. standard normal entries.
Mat generate_sensing(const ExperimentSpec& spec);

/// y = A x + sigma * g with g standard normal (exact when sigma = 0).
Vec observe(const Mat& A, const Vec& x, double sigma, std::uint64_t seed);

TrialMetrics compute_metrics(const Vec& x_true, const Vec& x_est, const SolverRun& run);

/// One fully generated trial (signal, sensing matrix, observations).
struct Instance {
    Vec x_true;
    Mat A;
    Vec y;
};

Instance make_instance(const ExperimentSpec& spec);

/// One row of the APO-vs-GPO micro-benchmark at n = 100 * 2^k.
struct ProxBenchRow {
    int k = 0;
    Eigen::Index n = 0;
    double apo_time_s = 0.0;  // median over repetitions
    double gpo_time_s = 0.0;
    double max_abs_diff = 0.0;
};

/// lambda1 = 0.1, lambda2 = 0.04 / 2^k; shrinking lambda2 keeps the weight
/// range essentially fixed as n grows.
OscarParams default_prox_bench_params(int k);

/// Time both operators on uniform [-5, 5] inputs of length 100 * 2^k for each
/// k in `ks` (each k must lie in 1..12). Per-call times are medians over
/// `repetitions` runs.
std::vector<ProxBenchRow> prox_speed_bench(
    const std::vector<int>& ks,
    const std::function<OscarParams(int)>& params_rule = default_prox_bench_params,
    int repetitions = 5, std::uint64_t seed = 1);

}  // namespace oscar
