#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "model/kinetic.hpp"
#include "model/linear_gaussian.hpp"

namespace svpkg {

/// One draw of the linear Gaussian transition coefficients.
struct LgParameterSample {
    std::vector<Eigen::MatrixXd> beta_s; // H-1 entries, n x n
    std::vector<Eigen::MatrixXd> beta_a; // H-1 entries, m x n
};

/// One draw of the kinetic model's uncertain parameter set.
struct KineticParameterSample {
    double m_s;
    double r_L;
    double beta_LCmax;
    double mu_max;
};

struct PosteriorEnsemble {
    enum class Kind { LinearGaussian, Kinetic };
    enum class Provenance { Conjugate, Metropolis, File };

    Kind kind = Kind::LinearGaussian;
    Provenance provenance = Provenance::File;
    std::uint64_t seed = 0;

    std::vector<LgParameterSample> lg_samples;
    std::vector<KineticParameterSample> kinetic_samples;

    /// Pooled empirical cross-equation residual covariance (n x n), linear
    /// Gaussian fits only; empty when not estimated.
    Eigen::MatrixXd residual_covariance;

    int size() const {
        return kind == Kind::LinearGaussian ? static_cast<int>(lg_samples.size())
                                            : static_cast<int>(kinetic_samples.size());
    }

    void validate() const;
};

LinearGaussianModel apply_sample(const LinearGaussianModel& base, const LgParameterSample& w);
KineticModel apply_sample(const KineticModel& base, const KineticParameterSample& w);

/// Ensemble means, used as default pinned values in model-parameter analyses.
LgParameterSample lg_ensemble_mean(const PosteriorEnsemble& ensemble);
KineticParameterSample kinetic_ensemble_mean(const PosteriorEnsemble& ensemble);

/// Conjugate Bayesian linear regression prior for the transition
/// coefficients: beta | sigma^2 ~ N(0, sigma^2 / precision * I) with either a
/// fixed noise variance or an inverse-gamma prior on it. precision = 0 is the
/// improper flat prior (requires a full-rank design).
struct LinearRegressionPrior {
    double precision = 1.0;
    bool known_noise_variance = false;
    double noise_variance = 1.0; // used when known_noise_variance
    double ig_shape = 2.0;       // a0 of InvGamma(a0, b0)
    double ig_scale = 1.0;       // b0
};

/// Per-period, per-state-component conjugate regression of
/// s_{t+1}^k - mu_s[t+1][k] on the centered (s_t, a_t). Returns Q joint
/// posterior draws plus the pooled empirical residual covariance. With an
/// empty dataset the draws come from the prior.
PosteriorEnsemble fit_linear_posterior(const std::vector<Trajectory>& dataset,
                                       const LinearGaussianModel& model_template,
                                       const LinearRegressionPrior& prior, int q_count,
                                       std::uint64_t seed);

/// Gaussian priors for the kinetic uncertain parameters.
struct KineticPrior {
    KineticParameterSample mean{0.01, 0.5, 0.15, 0.30};
    KineticParameterSample sd{0.005, 0.15, 0.05, 0.08};
};

struct McmcConfig {
    int sample_count = 100;
    int burn_in = 500;
    int thin = 10;
    KineticParameterSample step{0.002, 0.05, 0.02, 0.03};
    double data_weight = 1.0; // 0 disables the likelihood (prior-only chain)
    int divergence_window = 1000;
    std::uint64_t seed = 0;
};

/// Random-walk Metropolis targeting the Gaussian-residual likelihood of
/// one-step transitions under the kinetic model. Proposals are reflected
/// into the valid domain (r_L into [0,1], rates at 0); the proposal scale
/// adapts toward a workable acceptance rate during burn-in and is frozen
/// for the sampling phase. Throws ChainDiverged if nothing is accepted over
/// `divergence_window` consecutive proposals.
PosteriorEnsemble sample_nonlinear_posterior(const std::vector<Trajectory>& dataset,
                                             const KineticModel& model_template,
                                             const KineticPrior& prior,
                                             const McmcConfig& config);

/// Log-likelihood of the observed one-step transitions for the given
/// parameters (the Metropolis target without the prior). Exposed for tests.
double kinetic_transition_log_likelihood(const std::vector<Trajectory>& dataset,
                                         const KineticModel& model);

} // namespace svpkg
