#pragma once

#include <cstdint>

#include "lg/covariance_engine.hpp"
#include "model/posterior.hpp"
#include "sv/report.hpp"

namespace svpkg {

/// Exact predictive Shapley values of all random factors for every state
/// output and the cumulative reward, averaged over the posterior ensemble.
/// Each factor e[t,k] is pinned at lambda times its marginal standard
/// deviation; the marginal contribution of a pinned factor is its propagated
/// pathway impact and is independent of the prefix, so the permutation
/// average collapses to the closed form.
SVReport sv_random_predictive_exact(const LinearGaussianModel& model,
                                    const PolicySpec& policy, const RewardSpec& reward,
                                    const PosteriorEnsemble& posterior, double lambda,
                                    std::uint64_t seed);

/// Exact variance-based Shapley values of all random factors. The value
/// function is the variance carried by the conditioned subset (conditioned
/// coordinates frozen, the rest at their joint marginal law), under which
/// the subset game is quadratic and the Shapley value of the l-th stacked
/// residual against output coefficients rho is rho_l * (V rho)_l.
SVReport sv_random_variance_exact(const LinearGaussianModel& model, const PolicySpec& policy,
                                  const RewardSpec& reward,
                                  const PosteriorEnsemble& posterior, std::uint64_t seed);

/// Mean outputs under a masked policy: E[s_t] for every period and E[J],
/// computed by the pathway recursion (cost O(H) matrix products).
Eigen::VectorXd lg_expected_outputs(const LinearGaussianModel& model,
                                    const PolicySpec& policy, const RewardSpec& reward);

/// Same values with every pathway product rebuilt from scratch per period
/// (cost O(H^2)); the brute-force benchmark kernel.
Eigen::VectorXd lg_expected_outputs_noreuse(const LinearGaussianModel& model,
                                            const PolicySpec& policy,
                                            const RewardSpec& reward);

/// Variance outputs (Var of each state component per period, Var(J) last)
/// from the covariance engine.
Eigen::VectorXd lg_variance_outputs(const LinearGaussianModel& model,
                                    const PolicySpec& policy, const RewardSpec& reward);

/// Variance outputs with no calculation reuse whatsoever (pathway products
/// recomputed inside every covariance term).
Eigen::VectorXd lg_variance_outputs_noreuse(const LinearGaussianModel& model,
                                            const PolicySpec& policy,
                                            const RewardSpec& reward);

} // namespace svpkg
