#pragma once

#include <string>

#include <json.hpp>

#include "model/posterior.hpp"
#include "sv/instance.hpp"

namespace svpkg {

/// Model / policy / reward configuration parsing. All matrices are row-major
/// JSON arrays with explicit dimensions; see README for the schema.

LinearGaussianModel linear_gaussian_from_json(const nlohmann::json& doc);
KineticModel kinetic_from_json(const nlohmann::json& doc);
PolicySpec policy_from_json(const nlohmann::json& doc, const nlohmann::json& model_doc);
RewardSpec reward_from_json(const nlohmann::json& doc, int n, int m, int horizon);

/// Builds the full analysis instance from a config document (model, policy,
/// reward sections; posterior loaded from `posterior.file` when present,
/// degenerate otherwise).
ProcessInstance instance_from_config(const nlohmann::json& config);

nlohmann::json posterior_to_json(const PosteriorEnsemble& ensemble);
PosteriorEnsemble posterior_from_json(const nlohmann::json& doc);
void write_posterior(const PosteriorEnsemble& ensemble, const std::string& path);
PosteriorEnsemble load_posterior(const std::string& path);

nlohmann::json load_json_file(const std::string& path);

} // namespace svpkg
