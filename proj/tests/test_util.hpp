#pragma once

#include <Eigen/Core>
#include <random>

// Seeded draws for randomized tests. Distinct from the library's portable
// generator on purpose: test inputs only need to be deterministic per build.
struct TestRng {
    explicit TestRng(std::uint64_t seed) : engine(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }

    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine); }

    int integer(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }

    Eigen::VectorXd uniform_vector(Eigen::Index n, double lo, double hi) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            v[i] = uniform(lo, hi);
        }
        return v;
    }

    Eigen::VectorXd normal_vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            v[i] = normal();
        }
        return v;
    }

    std::mt19937_64 engine;
};
