#pragma once

#include <Eigen/Core>
#include <vector>

#include "oscar/errors.hpp"

namespace oscar {

using Vec = Eigen::VectorXd;

/// The OSCAR regularizer lambda1 * ||x||_1 + lambda2 * sum_{i<j} max{|x_i|, |x_j|}.
/// Both weights must be nonnegative; both zero makes the prox the identity.
struct OscarParams {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Non-increasing weights w_i = lambda1 + lambda2 * (n - i), i = 1..n, under
/// which OSCAR equals the weighted sorted l1 norm ||w .* sorted(|x|)||_1.
/// Keeps the generating parameters so downstream code can use the closed-form
/// group means without re-deriving them from the values.
struct WeightVector {
    Vec values;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

WeightVector weight_vector(Eigen::Index n, const OscarParams& params);

/// A vector split into sorted nonnegative magnitudes plus the bookkeeping
/// needed to undo the reduction: `order[k]` is the original index of the k-th
/// largest magnitude (ties keep input order, so the map is deterministic), and
/// `signs` holds the sign of each original entry with sign(0) = +1.
struct SortedDecomposition {
    Vec magnitudes;                    // non-increasing, >= 0
    std::vector<Eigen::Index> order;   // order[k] = original index of rank k
    Vec signs;                         // indexed by original position

    /// Undo the reduction: out[order[k]] = signs[order[k]] * sorted_values[k].
    Vec restore(const Vec& sorted_values) const;
};

SortedDecomposition sort_by_magnitude(const Vec& v);

/// One maximal run of equal prox values over sorted magnitudes; [begin, end)
/// is 0-based half-open. `mean_weight` comes from the closed form
/// lambda1 + lambda2 * (n - (s + t)/2) with s, t the 1-based group bounds,
/// which agrees with the plain average of the weights to machine precision.
struct Group {
    Eigen::Index begin = 0;
    Eigen::Index end = 0;
    double mean_magnitude = 0.0;
    double mean_weight = 0.0;

    Eigen::Index size() const { return end - begin; }
};

/// Coherent consecutive groups of the sorted magnitudes. The pooled gaps
/// mean_magnitude - mean_weight are strictly decreasing across groups.
struct GroupPartition {
    std::vector<Group> groups;
};

/// Pool-adjacent-violators on the gap sequence |v~_i| - w_i: scan left to
/// right, merging a group into its predecessor while its mean gap is >= the
/// predecessor's (ties merge too). Linear time after sorting; the emitted
/// groups satisfy the no-split coherence property.
GroupPartition group_and_average(const Vec& sorted_magnitudes, const WeightVector& w);

Vec soft_threshold(const Vec& v, double tau);
Vec soft_threshold(const Vec& v, const Vec& tau);

/// Exact proximity operator of the OSCAR regularizer: sort by magnitude,
/// group and average, clamp pooled gaps at zero, then restore signs and order.
Vec oscar_gpo(const Vec& v, const OscarParams& params);

/// Approximate proximity operator: sort by magnitude, soft-threshold the
/// sorted magnitudes by the weight vector, restore signs and order. Equals
/// the exact operator whenever the sorted gaps dominate lambda2 (see
/// apo_condition_holds); otherwise the two can differ.
Vec oscar_apo(const Vec& v, const OscarParams& params);

/// True iff |v~_i| - |v~_{i+1}| >= lambda2 for all adjacent sorted
/// magnitudes, the sufficient condition under which the approximate and
/// exact operators coincide.
bool apo_condition_holds(const Vec& v, const OscarParams& params);

/// Regularizer value via the weighted sorted l1 form, O(n log n).
double oscar_value(const Vec& x, const OscarParams& params);

/// Regularizer value via the pairwise definition, O(n^2). Kept as a test
/// oracle for the sorted form.
double oscar_value_pairwise(const Vec& x, const OscarParams& params);

/// Exhaustive prox: enumerate all 2^(n-1) contiguous partitions of the sorted
/// magnitudes, build each candidate by per-group averaging, and return the
/// one minimizing the full prox objective (evaluated through the pairwise
/// regularizer form). Exact for n <= 12; the true prox is always among the
/// candidates.
Vec brute_force_prox_oracle(const Vec& v, const OscarParams& params);

}  // namespace oscar
