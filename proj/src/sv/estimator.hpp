#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "sampling/permutation.hpp"
#include "sv/report.hpp"

namespace svpkg {

/// Subset value function g(U | w^(q)) evaluated along permutation walks.
/// Implementations must be pure given (subset, q, d): internal Monte Carlo
/// draws are addressed by substreams keyed on (seed, q, d, ...), never by
/// mutable state, so walks may run on any number of threads.
class ValueFunction {
  public:
    virtual ~ValueFunction() = default;

    virtual int input_count() const = 0;
    virtual const std::vector<std::string>& input_labels() const = 0;
    virtual const std::vector<std::string>& output_labels() const = 0;

    /// Value of the subset U for posterior sample q and permutation slot d.
    /// in_subset[i] != 0 marks input i as a member of U.
    virtual Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                                     int d) const = 0;
};

struct EstimatorOptions {
    int q_count = 1;
    int threads = 1;
    std::uint64_t seed = 0;
    std::string method_tag;
};

/// Permutation-sampling Shapley estimator: for every (q, d) pair, walks the
/// permutation accumulating incremental marginal contributions for all
/// outputs in a single pass. Results are reduced in a fixed (q, d) order, so
/// reports are identical for any thread count.
SVReport shapley_estimate(const ValueFunction& value_fn, const PermutationBatch& perms,
                          const EstimatorOptions& options);

/// Exact Shapley values by the weighted-subset sum (every U subset of
/// O \ {o}). Exponential cost; guarded to small input counts. Evaluates the
/// value function at (q, d) = (0, 0) per subset, averaged over q_count
/// members when q_count > 1.
Eigen::MatrixXd shapley_weighted_subsets(const ValueFunction& value_fn, int q_count = 1);

} // namespace svpkg
