#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sampling/permutation.hpp"
#include "sv/report.hpp"

namespace svpkg {

/// Analysis section of a run configuration. Seeds are mandatory: there is no
/// wall-clock fallback anywhere.
struct AnalysisConfig {
    InputKind inputs = InputKind::RandomFactors;
    ValueMode mode = ValueMode::Expectation;
    std::string engine = "simulation"; // simulation | analytic
    bool exact = false;                // full permutation enumeration
    PermutationMethod method = PermutationMethod::Uniform;
    double lambda = 1.0;
    int trajectories = 64; // L
    int outer = 64;        // L_outer / ensemble outer draws
    int inner = 64;        // L_inner / ensemble inner draws
    bool exhaustive_ensemble = false;
    int q_count = 1; // Q
    int d_count = 64; // D
    int threads = 1;
    std::uint64_t seed = 0;

    static AnalysisConfig from_json(const nlohmann::json& doc);
};

std::uint64_t seed_field(const nlohmann::json& doc, const std::string& key,
                         const std::string& where);

} // namespace svpkg
