#include "sv/instance.hpp"

#include "common/error.hpp"

namespace svpkg {

void ProcessInstance::validate() const {
    require(horizon >= 1, ErrorCode::ConfigError, "horizon must be >= 1");
    if (family == Family::LinearGaussian) {
        lg.validate();
        require(lg.horizon == horizon, ErrorCode::ConfigError,
                "instance horizon disagrees with the model");
        require(posterior.kind == PosteriorEnsemble::Kind::LinearGaussian,
                ErrorCode::ConfigError, "posterior family mismatch");
    } else {
        kinetic.validate();
        require(kinetic_s0.size() == KineticModel::state_dim, ErrorCode::ConfigError,
                "kinetic initial state must have 5 components");
        require(posterior.kind == PosteriorEnsemble::Kind::Kinetic, ErrorCode::ConfigError,
                "posterior family mismatch");
    }
    policy.validate(state_dim(), action_dim());
    require(policy.periods() == horizon - 1, ErrorCode::ConfigError,
            "policy must cover periods 1..H-1");
    reward.validate(state_dim(), action_dim(), horizon);
    posterior.validate();
    require(static_cast<int>(state_names.size()) == state_dim() &&
                static_cast<int>(action_names.size()) == action_dim(),
            ErrorCode::ConfigError, "name lists disagree with dimensions");
}

PosteriorEnsemble ProcessInstance::degenerate_posterior(const LinearGaussianModel& model) {
    PosteriorEnsemble ensemble;
    ensemble.kind = PosteriorEnsemble::Kind::LinearGaussian;
    ensemble.provenance = PosteriorEnsemble::Provenance::File;
    LgParameterSample w;
    w.beta_s = model.beta_s;
    w.beta_a = model.beta_a;
    ensemble.lg_samples.push_back(std::move(w));
    return ensemble;
}

PosteriorEnsemble ProcessInstance::degenerate_posterior(const KineticModel& model) {
    PosteriorEnsemble ensemble;
    ensemble.kind = PosteriorEnsemble::Kind::Kinetic;
    ensemble.provenance = PosteriorEnsemble::Provenance::File;
    ensemble.kinetic_samples.push_back(
        KineticParameterSample{model.m_s, model.r_L, model.beta_LCmax, model.mu_max});
    return ensemble;
}

std::vector<std::string> default_state_names(int n) {
    if (n == KineticModel::state_dim) return {"X_f", "C", "S", "N", "V"};
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) names.push_back("s" + std::to_string(k));
    return names;
}

std::vector<std::string> default_action_names(int m) {
    if (m == 1) return {"F_S"};
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) names.push_back("a" + std::to_string(j));
    return names;
}

std::vector<std::string> state_output_labels(int horizon,
                                             const std::vector<std::string>& state_names) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(horizon) * state_names.size() + 1);
    for (int t = 1; t <= horizon; ++t)
        for (const auto& name : state_names)
            labels.push_back("s[t=" + std::to_string(t) + ",k=" + name + "]");
    labels.push_back("J");
    return labels;
}

std::vector<std::string> random_factor_labels(int horizon,
                                              const std::vector<std::string>& state_names) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(horizon) * state_names.size());
    for (int t = 1; t <= horizon; ++t)
        for (const auto& name : state_names)
            labels.push_back("e[t=" + std::to_string(t) + ",k=" + name + "]");
    return labels;
}

std::vector<std::string> policy_parameter_labels(int horizon,
                                                 const std::vector<std::string>& state_names,
                                                 const std::vector<std::string>& action_names) {
    std::vector<std::string> labels;
    for (int t = 1; t <= horizon - 1; ++t)
        for (const auto& i : state_names)
            for (const auto& j : action_names)
                labels.push_back("theta[t=" + std::to_string(t) + ",i=" + i + ",j=" + j + "]");
    return labels;
}

} // namespace svpkg
