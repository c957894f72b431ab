#pragma once

#include <vector>

#include <Eigen/Core>

#include "model/linear_gaussian.hpp"

namespace svpkg {

/// Pathway coefficient table for a linear Gaussian model under a linear
/// (unclamped) policy. R(i, t) propagates the period-i residual to s_{t+1}:
///   R_{i,t} = B_t B_{t-1} ... B_i with B_j = beta_s[j]^T + beta_a[j]^T theta_j^T,
///   R_{i,i-1} = I and R_{i,t} = 0 for t < i-1.
class PathwayCoefficients {
  public:
    PathwayCoefficients(const LinearGaussianModel& model, const PolicySpec& policy);

    int state_dim() const { return n_; }
    int horizon() const { return horizon_; }

    /// R_{i,t} for 1 <= i <= horizon, 0 <= t <= horizon-1.
    const Eigen::MatrixXd& block(int i, int t) const;

    /// Closed-loop gain B_t, 1 <= t <= horizon-1.
    const Eigen::MatrixXd& closed_loop(int t) const {
        return closed_loop_[static_cast<std::size_t>(t - 1)];
    }

  private:
    int n_ = 0;
    int horizon_ = 0;
    Eigen::MatrixXd identity_;
    Eigen::MatrixXd zero_;
    std::vector<Eigen::MatrixXd> closed_loop_;
    std::vector<Eigen::MatrixXd> table_; // R(i,t) for t >= i, flattened
    long index(int i, int t) const;
};

/// Literal product evaluation of R_{i,t} (no table, no reuse); the
/// cross-check for the recursive table and the kernel of the brute-force
/// variants.
Eigen::MatrixXd pathway_product_direct(const LinearGaussianModel& model,
                                       const PolicySpec& policy, int i, int t);

/// Reward projection rows alpha_t = b_t^T theta_t^T + c_t^T (alpha_H = c_H^T,
/// the terminal period carries no action) and the per-period offsets
/// M_t = m_t + b_t . mu_a[t] + c_t . mu_s[t].
struct RewardProjection {
    std::vector<Eigen::RowVectorXd> alpha; // H entries, alpha[t-1] is alpha_t
    std::vector<double> offset;            // H entries

    const Eigen::RowVectorXd& row(int t) const { return alpha[static_cast<std::size_t>(t - 1)]; }
};

RewardProjection reward_projection(const LinearGaussianModel& model, const PolicySpec& policy,
                                   const RewardSpec& reward);

} // namespace svpkg
