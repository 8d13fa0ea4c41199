#include "oscar/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "oscar/rng.hpp"

namespace oscar {

namespace {

using Clock = std::chrono::steady_clock;

double median_of(std::vector<double> values) {
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    double upper = values[mid];
    if (values.size() % 2 == 0) {
        const double lower =
            *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
        return 0.5 * (lower + upper);
    }
    return upper;
}

}  // namespace

Vec generate_signal(const ExperimentSpec& spec) {
    if (spec.n < 10) {
        throw SizeError("generate_signal requires n >= 10");
    }
    rng::Generator gen(rng::derive_seed(spec.seed, rng::Stream::Signal));
    const Eigen::Index n = spec.n;
    auto scaled = [n](double fraction) {
        return static_cast<Eigen::Index>(std::llround(fraction * static_cast<double>(n)));
    };
    const Eigen::Index active = scaled(0.10);  // each nonzero block
    const Eigen::Index gap = scaled(0.20);     // each interior zero block
    const double means[3] = {7.0, 9.0, -8.0};

    Vec x = Vec::Zero(n);
    Eigen::Index pos = 0;
    for (int block = 0; block < 3; ++block) {
        for (Eigen::Index i = 0; i < active; ++i) {
            x[pos + i] = means[block] + gen.normal();
        }
        pos += active;
        if (block < 2) {
            pos += gap;
        }
    }
    // trailing zeros absorb any rounding remainder
    return x;
}

Mat generate_sensing(const ExperimentSpec& spec) {
    if (spec.m < 1 || spec.n < 1) {
        throw SizeError("generate_sensing requires m >= 1 and n >= 1");
    }
    rng::Generator gen(rng::derive_seed(spec.seed, rng::Stream::Matrix));
    Mat A(spec.m, spec.n);
    for (Eigen::Index r = 0; r < spec.m; ++r) {
        for (Eigen::Index c = 0; c < spec.n; ++c) {
            A(r, c) = gen.normal();
        }
    }
    return A;
}

Vec observe(const Mat& A, const Vec& x, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0)) {
        throw ParameterError("observe requires sigma >= 0");
    }
    Vec y = matvec(A, x);
    if (sigma > 0.0) {
        rng::Generator gen(rng::derive_seed(seed, rng::Stream::Noise));
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            y[i] += sigma * gen.normal();
        }
    }
    return y;
}

TrialMetrics compute_metrics(const Vec& x_true, const Vec& x_est, const SolverRun& run) {
    if (x_true.size() != x_est.size()) {
        throw DimensionError("compute_metrics: vectors differ in length");
    }
    const double n = static_cast<double>(x_true.size());
    const Vec err = x_true - x_est;
    TrialMetrics metrics;
    metrics.time_s = run.wall_time_s;
    metrics.iterations = run.iterations;
    metrics.mae = err.lpNorm<1>() / n;
    metrics.mse = err.squaredNorm() / n;
    return metrics;
}

Instance make_instance(const ExperimentSpec& spec) {
    Instance inst;
    inst.x_true = generate_signal(spec);
    inst.A = generate_sensing(spec);
    inst.y = observe(inst.A, inst.x_true, spec.noise_sigma, spec.seed);
    return inst;
}

OscarParams default_prox_bench_params(int k) {
    return OscarParams{0.1, 0.04 / static_cast<double>(std::uint64_t{1} << k)};
}

std::vector<ProxBenchRow> prox_speed_bench(const std::vector<int>& ks,
                                           const std::function<OscarParams(int)>& params_rule,
                                           int repetitions, std::uint64_t seed) {
    if (repetitions < 1) {
        throw ParameterError("prox_speed_bench requires at least one repetition");
    }
    for (int k : ks) {
        if (k < 1 || k > 12) {
            throw ParameterError("prox_speed_bench: k must lie in 1..12, got " +
                                 std::to_string(k));
        }
    }

    auto timed = [](const auto& fn, Vec& out) {
        const auto start = Clock::now();
        out = fn();
        return std::chrono::duration<double>(Clock::now() - start).count();
    };

    std::vector<ProxBenchRow> rows;
    rows.reserve(ks.size());
    for (int k : ks) {
        const Eigen::Index n = Eigen::Index{100} << k;
        const OscarParams params = params_rule(k);
        rng::Generator gen(rng::derive_seed(seed, rng::Stream::Trial, static_cast<std::uint64_t>(k)));
        Vec v(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            v[i] = gen.uniform(-5.0, 5.0);
        }

        std::vector<double> apo_times;
        std::vector<double> gpo_times;
        Vec apo_out;
        Vec gpo_out;
        for (int rep = 0; rep < repetitions; ++rep) {
            apo_times.push_back(timed([&] { return oscar_apo(v, params); }, apo_out));
            gpo_times.push_back(timed([&] { return oscar_gpo(v, params); }, gpo_out));
        }
        ProxBenchRow row;
        row.k = k;
        row.n = n;
        row.apo_time_s = median_of(apo_times);
        row.gpo_time_s = median_of(gpo_times);
        row.max_abs_diff = (apo_out - gpo_out).cwiseAbs().maxCoeff();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace oscar
