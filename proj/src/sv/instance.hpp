#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "model/kinetic.hpp"
#include "model/linear_gaussian.hpp"
#include "model/posterior.hpp"

namespace svpkg {

/// A fully specified analysis target: transition model family, policy,
/// reward, and the parameter posterior. The posterior always has at least
/// one member (a degenerate ensemble holds the base parameters).
struct ProcessInstance {
    enum class Family { LinearGaussian, Kinetic };

    Family family = Family::LinearGaussian;
    LinearGaussianModel lg;
    KineticModel kinetic;
    Eigen::VectorXd kinetic_s0;
    int horizon = 0;
    PolicySpec policy;
    RewardSpec reward;
    PosteriorEnsemble posterior;

    std::vector<std::string> state_names;
    std::vector<std::string> action_names;

    int state_dim() const {
        return family == Family::LinearGaussian ? lg.n : KineticModel::state_dim;
    }
    int action_dim() const {
        return family == Family::LinearGaussian ? lg.m : KineticModel::action_dim;
    }

    const Eigen::VectorXd& initial_state() const {
        return family == Family::LinearGaussian ? lg.s0 : kinetic_s0;
    }

    void validate() const;

    /// Degenerate single-member posterior holding the base parameters.
    static PosteriorEnsemble degenerate_posterior(const LinearGaussianModel& model);
    static PosteriorEnsemble degenerate_posterior(const KineticModel& model);
};

std::vector<std::string> default_state_names(int n);
std::vector<std::string> default_action_names(int m);

/// Output labels: every state component at every period, then the cumulative
/// reward "J".
std::vector<std::string> state_output_labels(int horizon,
                                             const std::vector<std::string>& state_names);

std::vector<std::string> random_factor_labels(int horizon,
                                              const std::vector<std::string>& state_names);

std::vector<std::string> policy_parameter_labels(int horizon,
                                                 const std::vector<std::string>& state_names,
                                                 const std::vector<std::string>& action_names);

} // namespace svpkg
