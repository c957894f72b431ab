#pragma once

#include <cstdint>

#include "common/rng.hpp"
#include "sv/instance.hpp"

namespace svpkg::testing {

/// Randomized linear Gaussian instance with stable dynamics, a linear
/// reward, and an unclamped linear policy. `correlated` switches the
/// residual law from i.i.d. per-period scales to a random full covariance.
inline ProcessInstance random_lg_instance(int horizon, int n, int m, std::uint64_t seed,
                                          bool correlated = false) {
    Rng rng(mix64(seed, 0x696e7374ull));
    ProcessInstance inst;
    inst.family = ProcessInstance::Family::LinearGaussian;
    LinearGaussianModel& model = inst.lg;
    model.n = n;
    model.m = m;
    model.horizon = horizon;
    const double scale = 0.4 / std::sqrt(static_cast<double>(n));
    for (int t = 0; t < horizon - 1; ++t) {
        Eigen::MatrixXd bs(n, n), ba(m, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) bs(i, j) = scale * rng.normal();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) ba(i, j) = scale * rng.normal();
        model.beta_s.push_back(bs);
        model.beta_a.push_back(ba);
        Eigen::VectorXd mu_a(m);
        for (int i = 0; i < m; ++i) mu_a[i] = 0.3 * rng.normal();
        model.mu_a.push_back(mu_a);
    }
    for (int t = 0; t < horizon; ++t) {
        Eigen::VectorXd mu(n);
        for (int i = 0; i < n; ++i) mu[i] = 0.5 * rng.normal();
        model.mu_s.push_back(mu);
    }
    model.s0 = model.mu_s.front();
    for (int i = 0; i < n; ++i) model.s0[i] += 0.3 * rng.normal();
    model.noise.kind = NoiseSpec::Kind::AdditiveGaussian;
    model.noise.scales = Eigen::VectorXd::Constant(n, 0.7);
    if (correlated) {
        const long dim = static_cast<long>(horizon) * n;
        Eigen::MatrixXd a(dim, dim);
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j) a(i, j) = rng.normal();
        model.noise.covariance = a * a.transpose() / static_cast<double>(dim);
    }
    inst.horizon = horizon;
    std::vector<Eigen::MatrixXd> theta;
    for (int t = 0; t < horizon - 1; ++t) {
        Eigen::MatrixXd th(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) th(i, j) = 0.3 * rng.normal();
        theta.push_back(th);
    }
    inst.policy = model.policy_from_theta(theta);
    RewardSpec reward = RewardSpec::zero(n, m, horizon);
    for (int t = 0; t < horizon; ++t) {
        for (int k = 0; k < n; ++k)
            reward.state_coeff[static_cast<std::size_t>(t)][k] = rng.normal();
        for (int k = 0; k < m; ++k)
            reward.action_coeff[static_cast<std::size_t>(t)][k] = rng.normal();
        reward.offset[static_cast<std::size_t>(t)] = rng.normal();
    }
    inst.reward = reward;
    inst.posterior = ProcessInstance::degenerate_posterior(model);
    inst.state_names = default_state_names(n);
    inst.action_names = default_action_names(m);
    inst.validate();
    return inst;
}

/// Fed-batch kinetic instance with the documented default parameters and a
/// plausible starting point.
inline ProcessInstance default_kinetic_instance(int horizon, double sigma = 0.02) {
    ProcessInstance inst;
    inst.family = ProcessInstance::Family::Kinetic;
    inst.kinetic = KineticModel{};
    inst.kinetic.noise.kind = NoiseSpec::Kind::MultiplicativeStateProportional;
    inst.kinetic.noise.scales = Eigen::VectorXd::Constant(5, sigma);
    inst.horizon = horizon;
    inst.kinetic_s0 = Eigen::VectorXd(5);
    inst.kinetic_s0 << 0.5, 0.0, 30.0, 1.5, 0.75;
    PolicySpec policy;
    for (int t = 0; t < horizon - 1; ++t) {
        policy.theta.push_back(Eigen::MatrixXd::Zero(5, 1));
        policy.mu_a.push_back(Eigen::VectorXd::Constant(1, 0.01));
        policy.mu_s.push_back(inst.kinetic_s0);
    }
    policy.clamp_nonnegative = true;
    inst.policy = policy;
    RewardSpec reward;
    reward.form = RewardSpec::Form::TerminalCitrate;
    inst.reward = reward;
    inst.posterior = ProcessInstance::degenerate_posterior(inst.kinetic);
    inst.state_names = default_state_names(5);
    inst.action_names = default_action_names(1);
    inst.validate();
    return inst;
}

} // namespace svpkg::testing
