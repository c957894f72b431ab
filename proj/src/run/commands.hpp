#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sv/report.hpp"

namespace svpkg {

/// Command implementations behind the CLI. Every command is deterministic
/// under (config, seed): reruns produce byte-identical artifacts.

/// Simulates `simulate.batches` trajectories and writes them in the batch
/// dataset CSV format.
void cmd_simulate(const nlohmann::json& config, const std::string& out_csv);

/// Fits the posterior named in the `fit` section from a batch dataset CSV
/// and writes the ensemble JSON.
void cmd_fit(const nlohmann::json& config, const std::string& data_csv,
             const std::string& out_json);

/// Runs the Shapley analysis described by the `analysis` section; writes the
/// long-form CSV and the JSON diagnostics, and returns the report.
SVReport cmd_sv(const nlohmann::json& config, const std::string& out_csv,
                const std::string& out_json);

struct PermStudyParams {
    std::vector<int> dims;
    std::vector<int> counts;
    std::vector<std::string> methods;
    int replications = 36;
    std::uint64_t seed = 0;
    bool sobol_cube = true; // low-discrepancy inputs for every method
};

/// Permutation sampling study: per (dim, count, method), the mean/std of the
/// discrepancy score and the mean cube-generation and transformation times
/// over the replications.
void cmd_perm_study(const PermStudyParams& params, const std::string& out_csv);

struct BenchParams {
    std::vector<std::string> tasks; // lg-policy-predictive | lg-policy-variance |
                                    // nonlinear-predictive
    std::vector<int> horizons;
    std::uint64_t seed = 0;
    double min_seconds = 0.05; // repetition floor per timing
};

/// Paired reuse vs brute-force benchmark. Refuses to emit a row pair whose
/// output checksums disagree.
void cmd_bench(const BenchParams& params, const std::string& out_csv);

} // namespace svpkg
