#include "run/config.hpp"

#include "common/error.hpp"

namespace svpkg {

std::uint64_t seed_field(const nlohmann::json& doc, const std::string& key,
                         const std::string& where) {
    auto it = doc.find(key);
    require(it != doc.end(), ErrorCode::ConfigError,
            where + ": missing mandatory field '" + key + "' (no wall-clock seeding)");
    require(it->is_number_unsigned() || it->is_number_integer(), ErrorCode::ConfigError,
            where + ": '" + key + "' must be an unsigned integer");
    return it->get<std::uint64_t>();
}

AnalysisConfig AnalysisConfig::from_json(const nlohmann::json& doc) {
    AnalysisConfig cfg;
    cfg.inputs = input_kind_from_string(
        doc.value("inputs", std::string("random-factors")));
    cfg.mode = value_mode_from_string(doc.value("mode", std::string("expectation")));
    cfg.engine = doc.value("engine", std::string("simulation"));
    require(cfg.engine == "simulation" || cfg.engine == "analytic", ErrorCode::ConfigError,
            "analysis.engine must be 'simulation' or 'analytic'");
    cfg.exact = doc.value("exact", false);
    cfg.method =
        permutation_method_from_string(doc.value("method", std::string("tfww-vrt")));
    cfg.lambda = doc.value("lambda", 1.0);
    cfg.trajectories = doc.value("L", 64);
    cfg.outer = doc.value("outer", doc.value("L_outer", 64));
    cfg.inner = doc.value("inner", doc.value("L_inner", 64));
    cfg.exhaustive_ensemble = doc.value("exhaustive", false);
    cfg.q_count = doc.value("Q", 1);
    cfg.d_count = doc.value("D", 64);
    cfg.threads = doc.value("threads", 1);
    cfg.seed = seed_field(doc, "seed", "analysis");
    require(cfg.q_count >= 1 && cfg.d_count >= 1 && cfg.trajectories >= 1,
            ErrorCode::ConfigError, "analysis counts must be positive");
    require(cfg.threads >= 1, ErrorCode::ConfigError, "analysis.threads must be >= 1");
    return cfg;
}

} // namespace svpkg
