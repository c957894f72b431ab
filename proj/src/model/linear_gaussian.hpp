#pragma once

#include <vector>

#include <Eigen/Core>

#include "model/noise.hpp"

namespace svpkg {

/// Per-period linear policy a_t = mu_a[t] + theta_t^T (s_t - mu_s[t]),
/// optionally clamped at zero componentwise. Periods are 1-based; actions
/// exist for t = 1..H-1.
struct PolicySpec {
    std::vector<Eigen::MatrixXd> theta; // H-1 entries, n x m
    std::vector<Eigen::VectorXd> mu_a;  // H-1 entries, m
    std::vector<Eigen::VectorXd> mu_s;  // H-1 entries, n
    bool clamp_nonnegative = false;

    int periods() const { return static_cast<int>(theta.size()); }

    Eigen::VectorXd action(const Eigen::VectorXd& state, int t) const;

    /// Copy with every theta entry zeroed (baseline policy).
    PolicySpec zeroed() const;

    void validate(int n, int m) const;
};

/// Reward at period t. The linear form is m_t + b_t . a_t + c_t . s_t with
/// the action term dropped at the terminal period t = H (there is no action
/// node at the harvest step). The terminal-citrate form is the fed-batch
/// setup: a feed cost per period and revenue on the final citrate level.
struct RewardSpec {
    enum class Form { Linear, TerminalCitrate };

    Form form = Form::Linear;

    // linear form, entries for t = 1..H
    std::vector<double> offset;                // m_t
    std::vector<Eigen::VectorXd> action_coeff; // b_t, length m
    std::vector<Eigen::VectorXd> state_coeff;  // c_t, length n

    // terminal-citrate form
    double terminal_offset = -15.0;
    double terminal_citrate_coeff = 1.29;
    double action_cost_coeff = -534.52;
    int citrate_index = 1; // 0-based position of C in the state vector

    static RewardSpec zero(int n, int m, int horizon);

    double evaluate(const Eigen::VectorXd& state, const Eigen::VectorXd& action,
                    int t, int horizon) const;
    double evaluate_terminal(const Eigen::VectorXd& state, int horizon) const;

    void validate(int n, int m, int horizon) const;
};

/// Linear Gaussian transition model
///   s_{t+1} = mu_s[t+1] + beta_s[t]^T (s_t - mu_s[t])
///             + beta_a[t]^T (a_t - mu_a[t]) + e_{t+1},
/// with s_1 = s0 + e_1 and zero-mean Gaussian residuals described by `noise`
/// (either i.i.d. per-period scales or one covariance over all H*n
/// residuals).
struct LinearGaussianModel {
    int n = 0;
    int m = 0;
    int horizon = 0;

    std::vector<Eigen::MatrixXd> beta_s; // H-1 entries, n x n
    std::vector<Eigen::MatrixXd> beta_a; // H-1 entries, m x n
    std::vector<Eigen::VectorXd> mu_s;   // H entries
    std::vector<Eigen::VectorXd> mu_a;   // H-1 entries
    Eigen::VectorXd s0;
    NoiseSpec noise;

    void validate() const;

    /// Full (H*n) x (H*n) residual covariance (materializes the diagonal
    /// from `scales` when no explicit covariance is present).
    Eigen::MatrixXd residual_covariance() const;

    /// Policy over this model's own anchors.
    PolicySpec policy_from_theta(const std::vector<Eigen::MatrixXd>& theta,
                                 bool clamp = false) const;

    Eigen::VectorXd step(const Eigen::VectorXd& state, const Eigen::VectorXd& action,
                         int t) const; // conditional mean of s_{t+1}, 1 <= t <= H-1
};

/// One simulated batch: states s_1..s_H (rows), actions a_1..a_{H-1},
/// realized residuals e_1..e_H, per-period rewards r_1..r_H.
struct Trajectory {
    Eigen::MatrixXd states;    // H x n
    Eigen::MatrixXd actions;   // (H-1) x m
    Eigen::MatrixXd residuals; // H x n
    Eigen::VectorXd rewards;   // H
    Eigen::VectorXd lipid;     // H, kinetic diagnostic channel (empty for LG)

    double cumulative_reward() const { return rewards.sum(); }
};

/// Rolls out the linear Gaussian model under `policy` with the given
/// realized residuals (H x n; row t-1 holds e_t).
Trajectory simulate_linear_gaussian(const LinearGaussianModel& model,
                                    const PolicySpec& policy,
                                    const RewardSpec& reward,
                                    const Eigen::MatrixXd& residuals);

} // namespace svpkg
