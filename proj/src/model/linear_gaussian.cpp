#include "model/linear_gaussian.hpp"

#include <cmath>

#include "common/error.hpp"

namespace svpkg {

void NoiseSpec::validate(int n, int horizon) const {
    require(scales.size() == 0 || scales.size() == n, ErrorCode::ConfigError,
            "noise scales must have one entry per state");
    for (int k = 0; k < scales.size(); ++k)
        require(scales[k] >= 0.0, ErrorCode::ConfigError, "noise scales must be nonnegative");
    if (has_covariance()) {
        const long dim = static_cast<long>(horizon) * n;
        require(covariance.rows() == dim && covariance.cols() == dim,
                ErrorCode::ConfigError, "residual covariance must be (H*n) x (H*n)");
        require(covariance.isApprox(covariance.transpose(), 1e-10),
                ErrorCode::ConfigError, "residual covariance must be symmetric");
    }
    require(dt > 0.0, ErrorCode::ConfigError, "dt must be positive");
}

Eigen::VectorXd PolicySpec::action(const Eigen::VectorXd& state, int t) const {
    require(t >= 1 && t <= periods(), ErrorCode::InvalidArgument,
            "policy period out of range: " + std::to_string(t));
    const auto& th = theta[static_cast<std::size_t>(t - 1)];
    Eigen::VectorXd a = mu_a[static_cast<std::size_t>(t - 1)] +
                        th.transpose() * (state - mu_s[static_cast<std::size_t>(t - 1)]);
    if (clamp_nonnegative) a = a.cwiseMax(0.0);
    return a;
}

PolicySpec PolicySpec::zeroed() const {
    PolicySpec out = *this;
    for (auto& th : out.theta) th.setZero();
    return out;
}

void PolicySpec::validate(int n, int m) const {
    require(theta.size() == mu_a.size() && theta.size() == mu_s.size(),
            ErrorCode::ConfigError, "policy period counts disagree");
    for (std::size_t t = 0; t < theta.size(); ++t) {
        require(theta[t].rows() == n && theta[t].cols() == m, ErrorCode::ConfigError,
                "theta must be n x m");
        require(theta[t].allFinite(), ErrorCode::ConfigError, "theta entries must be finite");
        require(mu_a[t].size() == m && mu_s[t].size() == n, ErrorCode::ConfigError,
                "policy anchors have wrong dimensions");
    }
}

RewardSpec RewardSpec::zero(int n, int m, int horizon) {
    RewardSpec spec;
    spec.form = Form::Linear;
    spec.offset.assign(static_cast<std::size_t>(horizon), 0.0);
    spec.action_coeff.assign(static_cast<std::size_t>(horizon), Eigen::VectorXd::Zero(m));
    spec.state_coeff.assign(static_cast<std::size_t>(horizon), Eigen::VectorXd::Zero(n));
    return spec;
}

double RewardSpec::evaluate(const Eigen::VectorXd& state, const Eigen::VectorXd& action,
                            int t, int horizon) const {
    if (form == Form::TerminalCitrate) {
        if (t == horizon) return terminal_offset + terminal_citrate_coeff * state[citrate_index];
        return action_cost_coeff * action.sum();
    }
    const std::size_t i = static_cast<std::size_t>(t - 1);
    double r = offset[i] + state_coeff[i].dot(state);
    if (t < horizon) r += action_coeff[i].dot(action);
    return r;
}

double RewardSpec::evaluate_terminal(const Eigen::VectorXd& state, int horizon) const {
    return evaluate(state, Eigen::VectorXd(), horizon, horizon);
}

void RewardSpec::validate(int n, int m, int horizon) const {
    if (form == Form::TerminalCitrate) {
        require(citrate_index >= 0 && citrate_index < n, ErrorCode::ConfigError,
                "citrate index out of range");
        return;
    }
    require(static_cast<int>(offset.size()) == horizon &&
                static_cast<int>(action_coeff.size()) == horizon &&
                static_cast<int>(state_coeff.size()) == horizon,
            ErrorCode::ConfigError, "reward coefficient lists must have H entries");
    for (int t = 0; t < horizon; ++t) {
        require(action_coeff[static_cast<std::size_t>(t)].size() == m &&
                    state_coeff[static_cast<std::size_t>(t)].size() == n,
                ErrorCode::ConfigError, "reward coefficient dimensions disagree");
    }
}

void LinearGaussianModel::validate() const {
    require(n >= 1 && m >= 1 && horizon >= 1, ErrorCode::ConfigError,
            "model dimensions must be positive");
    require(static_cast<int>(beta_s.size()) == horizon - 1 &&
                static_cast<int>(beta_a.size()) == horizon - 1,
            ErrorCode::ConfigError, "beta lists must have H-1 entries");
    require(static_cast<int>(mu_s.size()) == horizon, ErrorCode::ConfigError,
            "mu_s must have H entries");
    require(static_cast<int>(mu_a.size()) == horizon - 1, ErrorCode::ConfigError,
            "mu_a must have H-1 entries");
    require(s0.size() == n, ErrorCode::ConfigError, "s0 must have n entries");
    for (int t = 0; t < horizon - 1; ++t) {
        require(beta_s[static_cast<std::size_t>(t)].rows() == n &&
                    beta_s[static_cast<std::size_t>(t)].cols() == n,
                ErrorCode::ConfigError, "beta_s must be n x n");
        require(beta_a[static_cast<std::size_t>(t)].rows() == m &&
                    beta_a[static_cast<std::size_t>(t)].cols() == n,
                ErrorCode::ConfigError, "beta_a must be m x n");
        require(mu_a[static_cast<std::size_t>(t)].size() == m, ErrorCode::ConfigError,
                "mu_a entries must have m components");
    }
    for (int t = 0; t < horizon; ++t)
        require(mu_s[static_cast<std::size_t>(t)].size() == n, ErrorCode::ConfigError,
                "mu_s entries must have n components");
    noise.validate(n, horizon);
}

Eigen::MatrixXd LinearGaussianModel::residual_covariance() const {
    if (noise.has_covariance()) return noise.covariance;
    const long dim = static_cast<long>(horizon) * n;
    Eigen::VectorXd diag(dim);
    for (int t = 0; t < horizon; ++t)
        for (int k = 0; k < n; ++k) {
            double sigma = noise.scales.size() ? noise.scales[k] : 0.0;
            diag[static_cast<long>(t) * n + k] = sigma * sigma;
        }
    return diag.asDiagonal();
}

PolicySpec LinearGaussianModel::policy_from_theta(const std::vector<Eigen::MatrixXd>& theta,
                                                  bool clamp) const {
    PolicySpec policy;
    policy.theta = theta;
    policy.mu_a = mu_a;
    policy.mu_s.assign(mu_s.begin(), mu_s.end() - 1);
    policy.clamp_nonnegative = clamp;
    policy.validate(n, m);
    return policy;
}

Eigen::VectorXd LinearGaussianModel::step(const Eigen::VectorXd& state,
                                          const Eigen::VectorXd& action, int t) const {
    const std::size_t i = static_cast<std::size_t>(t - 1);
    return mu_s[i + 1] + beta_s[i].transpose() * (state - mu_s[i]) +
           beta_a[i].transpose() * (action - mu_a[i]);
}

Trajectory simulate_linear_gaussian(const LinearGaussianModel& model,
                                    const PolicySpec& policy,
                                    const RewardSpec& reward,
                                    const Eigen::MatrixXd& residuals) {
    const int H = model.horizon;
    const int n = model.n;
    require(residuals.rows() == H && residuals.cols() == n, ErrorCode::InvalidArgument,
            "residual matrix must be H x n");
    Trajectory traj;
    traj.states.resize(H, n);
    traj.actions.resize(H - 1, model.m);
    traj.residuals = residuals;
    traj.rewards.resize(H);

    Eigen::VectorXd state = model.s0 + residuals.row(0).transpose();
    traj.states.row(0) = state;
    for (int t = 1; t <= H - 1; ++t) {
        Eigen::VectorXd action = policy.action(state, t);
        traj.actions.row(t - 1) = action;
        traj.rewards[t - 1] = reward.evaluate(state, action, t, H);
        state = model.step(state, action, t) + residuals.row(t).transpose();
        traj.states.row(t) = state;
    }
    traj.rewards[H - 1] = reward.evaluate_terminal(state, H);
    require(traj.rewards.allFinite(), ErrorCode::NonFiniteState,
            "non-finite reward encountered");
    return traj;
}

} // namespace svpkg
