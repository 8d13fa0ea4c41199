#include "oscar/prox.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

namespace oscar {

namespace {

double sign_of(double v) { return v >= 0.0 ? 1.0 : -1.0; }

void check_params(const OscarParams& p) {
    if (!(p.lambda1 >= 0.0) || !(p.lambda2 >= 0.0)) {
        throw ParameterError("OSCAR weights must be nonnegative "
                             "(lambda1 = " + std::to_string(p.lambda1) +
                             ", lambda2 = " + std::to_string(p.lambda2) + ")");
    }
}

// Mean weight of the group [begin, end) from the arithmetic-series closed
// form; (s + t)/2 in 1-based bounds is (begin + end + 1)/2 here. For a
// singleton this reproduces w[begin] bit for bit.
double closed_form_mean_weight(Eigen::Index n, double lambda1, double lambda2,
                               Eigen::Index begin, Eigen::Index end) {
    const double mid = 0.5 * static_cast<double>(begin + end + 1);
    return lambda1 + lambda2 * (static_cast<double>(n) - mid);
}

}  // namespace

WeightVector weight_vector(Eigen::Index n, const OscarParams& params) {
    check_params(params);
    if (n < 1) {
        throw ParameterError("weight_vector requires n >= 1");
    }
    Vec w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        w[i] = params.lambda1 + params.lambda2 * static_cast<double>(n - 1 - i);
    }
    return WeightVector{std::move(w), params.lambda1, params.lambda2};
}

SortedDecomposition sort_by_magnitude(const Vec& v) {
    const Eigen::Index n = v.size();
    SortedDecomposition sd;
    sd.order.resize(static_cast<std::size_t>(n));
    std::iota(sd.order.begin(), sd.order.end(), Eigen::Index{0});
    // stable: equal magnitudes keep input order
    std::stable_sort(sd.order.begin(), sd.order.end(), [&v](Eigen::Index a, Eigen::Index b) {
        return std::abs(v[a]) > std::abs(v[b]);
    });
    sd.magnitudes.resize(n);
    sd.signs.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        sd.magnitudes[k] = std::abs(v[sd.order[static_cast<std::size_t>(k)]]);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        sd.signs[i] = sign_of(v[i]);
    }
    return sd;
}

Vec SortedDecomposition::restore(const Vec& sorted_values) const {
    const Eigen::Index n = magnitudes.size();
    if (sorted_values.size() != n) {
        throw DimensionError("restore: expected length " + std::to_string(n) +
                             ", got " + std::to_string(sorted_values.size()));
    }
    Vec out(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index i = order[static_cast<std::size_t>(k)];
        out[i] = signs[i] * sorted_values[k];
    }
    return out;
}

Vec soft_threshold(const Vec& v, double tau) {
    if (!(tau >= 0.0)) {
        throw ParameterError("soft_threshold requires tau >= 0");
    }
    Vec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out[i] = sign_of(v[i]) * std::max(std::abs(v[i]) - tau, 0.0);
    }
    return out;
}

Vec soft_threshold(const Vec& v, const Vec& tau) {
    if (tau.size() != v.size()) {
        throw DimensionError("soft_threshold: v has length " + std::to_string(v.size()) +
                             " but tau has length " + std::to_string(tau.size()));
    }
    Vec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!(tau[i] >= 0.0)) {
            throw ParameterError("soft_threshold requires tau >= 0 element-wise");
        }
        out[i] = sign_of(v[i]) * std::max(std::abs(v[i]) - tau[i], 0.0);
    }
    return out;
}

GroupPartition group_and_average(const Vec& sorted_magnitudes, const WeightVector& w) {
    const Eigen::Index n = sorted_magnitudes.size();
    if (w.values.size() != n) {
        throw DimensionError("group_and_average: magnitudes and weights differ in length");
    }
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (sorted_magnitudes[i] < sorted_magnitudes[i + 1]) {
            throw PreconditionError("group_and_average: magnitudes must be non-increasing");
        }
    }
    if (n > 0 && sorted_magnitudes[n - 1] < 0.0) {
        throw PreconditionError("group_and_average: magnitudes must be nonnegative");
    }

    struct Block {
        Eigen::Index begin;
        Eigen::Index end;
        double sum_v;  // running sum; means computed on demand
    };
    std::vector<Block> stack;
    stack.reserve(static_cast<std::size_t>(n));

    auto mean_gap = [&](const Block& b) {
        const double count = static_cast<double>(b.end - b.begin);
        return b.sum_v / count -
               closed_form_mean_weight(n, w.lambda1, w.lambda2, b.begin, b.end);
    };

    for (Eigen::Index i = 0; i < n; ++i) {
        stack.push_back(Block{i, i + 1, sorted_magnitudes[i]});
        // merge on ties too, so emitted gaps are strictly decreasing
        while (stack.size() >= 2 && mean_gap(stack.back()) >= mean_gap(stack[stack.size() - 2])) {
            Block top = stack.back();
            stack.pop_back();
            stack.back().sum_v += top.sum_v;
            stack.back().end = top.end;
        }
    }

    GroupPartition part;
    part.groups.reserve(stack.size());
    for (const Block& b : stack) {
        const double count = static_cast<double>(b.end - b.begin);
        part.groups.push_back(Group{b.begin, b.end, b.sum_v / count,
                                    closed_form_mean_weight(n, w.lambda1, w.lambda2,
                                                            b.begin, b.end)});
    }

#ifndef NDEBUG
    // closed-form mean weight must agree with the plain average
    for (const Group& g : part.groups) {
        double avg = 0.0;
        for (Eigen::Index i = g.begin; i < g.end; ++i) {
            avg += w.values[i];
        }
        avg /= static_cast<double>(g.size());
        assert(std::abs(avg - g.mean_weight) <= 1e-10 * std::max(1.0, std::abs(avg)));
    }
#endif
    return part;
}

Vec oscar_gpo(const Vec& v, const OscarParams& params) {
    check_params(params);
    const Eigen::Index n = v.size();
    if (n == 0) {
        return v;
    }
    const SortedDecomposition sd = sort_by_magnitude(v);
    const WeightVector w = weight_vector(n, params);
    const GroupPartition part = group_and_average(sd.magnitudes, w);
    Vec pooled(n);
    for (const Group& g : part.groups) {
        const double b = std::max(g.mean_magnitude - g.mean_weight, 0.0);
        for (Eigen::Index k = g.begin; k < g.end; ++k) {
            pooled[k] = b;
        }
    }
    return sd.restore(pooled);
}

Vec oscar_apo(const Vec& v, const OscarParams& params) {
    check_params(params);
    const Eigen::Index n = v.size();
    if (n == 0) {
        return v;
    }
    const SortedDecomposition sd = sort_by_magnitude(v);
    const WeightVector w = weight_vector(n, params);
    Vec u(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        u[k] = std::max(sd.magnitudes[k] - w.values[k], 0.0);
    }
    return sd.restore(u);
}

bool apo_condition_holds(const Vec& v, const OscarParams& params) {
    check_params(params);
    const Eigen::Index n = v.size();
    if (n <= 1) {
        return true;
    }
    const SortedDecomposition sd = sort_by_magnitude(v);
    // adjacent weight gaps are constant: w_i - w_{i+1} = lambda2
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (sd.magnitudes[k] - sd.magnitudes[k + 1] < params.lambda2) {
            return false;
        }
    }
    return true;
}

double oscar_value(const Vec& x, const OscarParams& params) {
    check_params(params);
    const Eigen::Index n = x.size();
    if (n == 0) {
        return 0.0;
    }
    const SortedDecomposition sd = sort_by_magnitude(x);
    const WeightVector w = weight_vector(n, params);
    double total = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        total += w.values[k] * sd.magnitudes[k];
    }
    return total;
}

double oscar_value_pairwise(const Vec& x, const OscarParams& params) {
    check_params(params);
    const Eigen::Index n = x.size();
    double l1 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        l1 += std::abs(x[i]);
    }
    double pairwise = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            pairwise += std::max(std::abs(x[i]), std::abs(x[j]));
        }
    }
    return params.lambda1 * l1 + params.lambda2 * pairwise;
}

Vec brute_force_prox_oracle(const Vec& v, const OscarParams& params) {
    check_params(params);
    const Eigen::Index n = v.size();
    if (n > 12) {
        throw SizeError("brute_force_prox_oracle supports length <= 12, got " +
                        std::to_string(n));
    }
    if (n == 0) {
        return v;
    }
    const SortedDecomposition sd = sort_by_magnitude(v);
    const WeightVector w = weight_vector(n, params);

    const std::uint64_t partitions = std::uint64_t{1} << (n - 1);
    Vec b(n);
    Vec best;
    double best_objective = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < partitions; ++mask) {
        // bit i set = cut between sorted positions i and i+1
        Eigen::Index start = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i + 1 == n || ((mask >> i) & 1u)) {
                double mean_v = 0.0;
                double mean_w = 0.0;
                for (Eigen::Index k = start; k <= i; ++k) {
                    mean_v += sd.magnitudes[k];
                    mean_w += w.values[k];
                }
                const double count = static_cast<double>(i - start + 1);
                const double value = std::max(mean_v / count - mean_w / count, 0.0);
                for (Eigen::Index k = start; k <= i; ++k) {
                    b[k] = value;
                }
                start = i + 1;
            }
        }
        const Vec candidate = sd.restore(b);
        const double objective =
            oscar_value_pairwise(candidate, params) + 0.5 * (candidate - v).squaredNorm();
        if (objective < best_objective) {
            best_objective = objective;
            best = candidate;
        }
    }
    return best;
}

}  // namespace oscar
