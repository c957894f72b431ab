#pragma once

#include <vector>

#include <Eigen/Core>

#include "lg/pathway.hpp"
#include "model/linear_gaussian.hpp"

namespace svpkg {

/// All state covariances Cov(s_a, s_b), 1 <= a, b <= H, plus the cumulative
/// reward variance under a linear reward.
struct CovarianceTable {
    int n = 0;
    int horizon = 0;
    std::vector<Eigen::MatrixXd> blocks; // full H x H grid of n x n blocks
    double cumulative_reward_variance = 0.0;

    const Eigen::MatrixXd& cov(int a, int b) const {
        return blocks[static_cast<std::size_t>((a - 1) * horizon + (b - 1))];
    }
    Eigen::VectorXd state_variance(int t) const { return cov(t, t).diagonal(); }
};

/// Running-accumulator covariance propagation: every Cov(s_{t1+1}, s_{t2+1})
/// and Var(sum r) in O(H^2) block recurrences.
CovarianceTable covariance_engine(const LinearGaussianModel& model, const PolicySpec& policy,
                                  const RewardSpec& reward);

/// Direct double-sum evaluation of one covariance block from a shared
/// pathway table (correctness oracle for the engine).
Eigen::MatrixXd covariance_direct(const LinearGaussianModel& model,
                                  const PathwayCoefficients& paths, int t1, int t2);

/// Literal no-reuse evaluation of Var(sum r): pathway products are
/// recomputed inside every term of every covariance block. This is the
/// brute-force costing kernel for the benchmark harness.
double cumulative_reward_variance_noreuse(const LinearGaussianModel& model,
                                          const PolicySpec& policy,
                                          const RewardSpec& reward);

/// Var(sum r) from direct block sums over a shared pathway table.
double cumulative_reward_variance_direct(const LinearGaussianModel& model,
                                         const PolicySpec& policy,
                                         const RewardSpec& reward);

} // namespace svpkg
