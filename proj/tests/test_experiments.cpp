#include "oscar/experiments.hpp"

#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

using namespace oscar;

TEST_CASE("canonical signal layout") {
    ExperimentSpec spec;
    spec.seed = 42;
    const Vec x = generate_signal(spec);
    REQUIRE(x.size() == 1000);

    // three active blocks of 100 with signs (+, +, -), all else exactly zero
    CHECK((x.array() != 0.0).count() == 300);
    for (Eigen::Index i = 100; i < 300; ++i) {
        CHECK(x[i] == 0.0);
    }
    for (Eigen::Index i = 400; i < 600; ++i) {
        CHECK(x[i] == 0.0);
    }
    for (Eigen::Index i = 700; i < 1000; ++i) {
        CHECK(x[i] == 0.0);
    }

    const double mean1 = x.segment(0, 100).mean();
    const double mean2 = x.segment(300, 100).mean();
    const double mean3 = x.segment(600, 100).mean();
    CHECK(std::abs(mean1 - 7.0) <= 0.3);  // 3 / sqrt(100)
    CHECK(std::abs(mean2 - 9.0) <= 0.3);
    CHECK(std::abs(mean3 + 8.0) <= 0.3);
    CHECK((x.segment(0, 100).array() > 0.0).all());
    CHECK((x.segment(600, 100).array() < 0.0).all());
}

TEST_CASE("signal generation is deterministic and scales with n") {
    ExperimentSpec spec;
    spec.seed = 7;
    CHECK(generate_signal(spec) == generate_signal(spec));

    spec.n = 250;
    const Vec x = generate_signal(spec);
    REQUIRE(x.size() == 250);
    CHECK((x.array() != 0.0).count() == 75);  // 3 blocks of 25

    spec.n = 9;
    CHECK_THROWS_AS(generate_signal(spec), SizeError);
}

TEST_CASE("sensing matrix statistics") {
    ExperimentSpec spec;
    spec.m = 500;
    spec.n = 1000;
    spec.seed = 3;
    const Mat A = generate_sensing(spec);
    REQUIRE(A.rows() == 500);
    REQUIRE(A.cols() == 1000);

    const double count = static_cast<double>(A.size());
    const double mean = A.sum() / count;
    CHECK(std::abs(mean) <= 4.0 / std::sqrt(count));
    const double var = (A.array() - mean).square().sum() / count;
    CHECK(std::abs(var - 1.0) <= 0.05);

    CHECK(generate_sensing(spec) == A);
}

TEST_CASE("observe adds calibrated noise") {
    ExperimentSpec spec;
    spec.m = 500;
    spec.n = 1000;
    spec.seed = 5;
    const Vec x = generate_signal(spec);
    const Mat A = generate_sensing(spec);

    CHECK(observe(A, x, 0.0, spec.seed) == matvec(A, x));

    const double sigma = 0.4;
    const Vec y = observe(A, x, sigma, spec.seed);
    const double noise_var = (y - matvec(A, x)).squaredNorm() / static_cast<double>(y.size());
    CHECK(std::abs(noise_var - sigma * sigma) <= 0.15 * sigma * sigma);

    CHECK(observe(A, x, sigma, spec.seed) == y);
    CHECK_THROWS_AS(observe(A, Vec::Zero(3), sigma, 1), DimensionError);
}

TEST_CASE("metrics worked examples") {
    SolverRun run;
    run.wall_time_s = 1.5;
    run.iterations = 4;

    Vec x(4);
    x << 1.0, 2.0, 3.0, 4.0;
    const TrialMetrics exact = compute_metrics(x, x, run);
    CHECK(exact.mae == 0.0);
    CHECK(exact.mse == 0.0);
    CHECK(exact.time_s == 1.5);
    CHECK(exact.iterations == 4);

    const TrialMetrics ones = compute_metrics(x, x + Vec::Ones(4), run);
    CHECK(ones.mae == doctest::Approx(1.0));
    CHECK(ones.mse == doctest::Approx(1.0));

    Vec shifted = x;
    shifted[0] += 2.0;
    const TrialMetrics single = compute_metrics(x, shifted, run);
    CHECK(single.mae == doctest::Approx(0.5));
    CHECK(single.mse == doctest::Approx(1.0));
}

TEST_CASE("mae^2 <= mse on random errors") {
    TestRng rng(81);
    SolverRun run;
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index n = rng.integer(1, 50);
        const Vec a = rng.uniform_vector(n, -5.0, 5.0);
        const Vec b = rng.uniform_vector(n, -5.0, 5.0);
        const TrialMetrics m = compute_metrics(a, b, run);
        CHECK(m.mae * m.mae <= m.mse + 1e-15);
    }
}

TEST_CASE("full pipeline is reproducible bit for bit") {
    ExperimentSpec spec;
    spec.n = 120;
    spec.m = 60;
    spec.seed = 99;
    const Instance first = make_instance(spec);
    const Instance second = make_instance(spec);
    CHECK(first.x_true == second.x_true);
    CHECK(first.A == second.A);
    CHECK(first.y == second.y);

    SolverConfig config;
    config.params = spec.params;
    const SolverRun a = solve_fista(first.A, first.y, config);
    const SolverRun b = solve_fista(second.A, second.y, config);
    CHECK(a.x_final == b.x_final);
}

TEST_CASE("prox bench weight range under the lambda2 halving rule") {
    // w_n = lambda1 = 0.1 exactly; w_1 = 0.1 + 4 - 0.04/2^k stays under 4.1
    for (int k = 1; k <= 12; ++k) {
        const OscarParams params = default_prox_bench_params(k);
        const Eigen::Index n = Eigen::Index{100} << k;
        const WeightVector w = weight_vector(n, params);
        CHECK(w.values[n - 1] == 0.1);
        CHECK(w.values[0] <= 4.1);
        CHECK(w.values[0] >= 4.0);
    }
}

TEST_CASE("prox bench rows") {
    const auto rows = prox_speed_bench({1, 2, 3}, default_prox_bench_params, 3, 11);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == (Eigen::Index{100} << (i + 1)));
        CHECK(rows[i].apo_time_s > 0.0);
        CHECK(rows[i].gpo_time_s > 0.0);
        CHECK(rows[i].max_abs_diff >= 0.0);
    }

    CHECK_THROWS_AS(prox_speed_bench({0}, default_prox_bench_params, 3, 1), ParameterError);
    CHECK_THROWS_AS(prox_speed_bench({13}, default_prox_bench_params, 3, 1), ParameterError);

    // with lambda2 = 0 the operators agree exactly
    const auto same = prox_speed_bench({2}, [](int) { return OscarParams{0.25, 0.0}; }, 2, 5);
    CHECK(same[0].max_abs_diff == 0.0);
}
