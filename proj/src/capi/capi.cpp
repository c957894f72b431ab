#include "svpkg/svpkg.h"

#include <new>
#include <string>

#include <json.hpp>

#include "common/error.hpp"
#include "run/commands.hpp"
#include "sampling/permutation.hpp"
#include "sv/sample_size.hpp"

namespace {

thread_local std::string g_last_error;

svpkg_status to_status(svpkg::ErrorCode code) { return static_cast<svpkg_status>(code); }

template <typename F>
svpkg_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return SVPKG_OK;
    } catch (const svpkg::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return SVPKG_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SVPKG_ERR_UNKNOWN;
    }
}

nlohmann::json parse_config(const char* config_json) {
    svpkg::require(config_json != nullptr, svpkg::ErrorCode::InvalidArgument,
                   "config JSON must not be null");
    return nlohmann::json::parse(config_json);
}

std::string required_path(const char* path, const char* what) {
    svpkg::require(path != nullptr && *path != '\0', svpkg::ErrorCode::InvalidArgument,
                   std::string(what) + " path must not be empty");
    return path;
}

} // namespace

extern "C" {

struct svpkg_permutations {
    svpkg::PermutationBatch batch;
};

const char* svpkg_version(void) { return "0.1.0"; }

const char* svpkg_last_error(void) { return g_last_error.c_str(); }

svpkg_status svpkg_run_simulate(const char* config_json, const char* out_csv) {
    return guarded([&] {
        svpkg::cmd_simulate(parse_config(config_json), required_path(out_csv, "output CSV"));
    });
}

svpkg_status svpkg_run_fit(const char* config_json, const char* data_csv,
                           const char* out_posterior_json) {
    return guarded([&] {
        svpkg::cmd_fit(parse_config(config_json), required_path(data_csv, "data CSV"),
                       required_path(out_posterior_json, "posterior JSON"));
    });
}

svpkg_status svpkg_run_sv(const char* config_json, const char* out_csv,
                          const char* out_json) {
    return guarded([&] {
        svpkg::cmd_sv(parse_config(config_json), out_csv ? out_csv : "",
                      out_json ? out_json : "");
    });
}

svpkg_status svpkg_run_perm_study(const char* params_json, const char* out_csv) {
    return guarded([&] {
        nlohmann::json doc = parse_config(params_json);
        svpkg::PermStudyParams params;
        for (const auto& v : doc.at("dims")) params.dims.push_back(v.get<int>());
        for (const auto& v : doc.at("counts")) params.counts.push_back(v.get<int>());
        for (const auto& v : doc.at("methods"))
            params.methods.push_back(v.get<std::string>());
        params.replications = doc.value("replications", 36);
        params.seed = doc.at("seed").get<std::uint64_t>();
        params.sobol_cube = doc.value("sobol_cube", true);
        svpkg::cmd_perm_study(params, required_path(out_csv, "output CSV"));
    });
}

svpkg_status svpkg_run_bench(const char* params_json, const char* out_csv) {
    return guarded([&] {
        nlohmann::json doc = parse_config(params_json);
        svpkg::BenchParams params;
        for (const auto& v : doc.at("tasks")) params.tasks.push_back(v.get<std::string>());
        for (const auto& v : doc.at("horizons")) params.horizons.push_back(v.get<int>());
        params.seed = doc.at("seed").get<std::uint64_t>();
        params.min_seconds = doc.value("min_seconds", 0.05);
        svpkg::cmd_bench(params, required_path(out_csv, "output CSV"));
    });
}

svpkg_status svpkg_permutations_sample(int32_t s, int32_t count, const char* method,
                                       uint64_t seed, svpkg_permutations** out) {
    return guarded([&] {
        svpkg::require(out != nullptr && method != nullptr,
                       svpkg::ErrorCode::InvalidArgument, "null argument");
        auto batch = svpkg::sample_permutations(
            s, count, svpkg::permutation_method_from_string(method), seed);
        *out = new svpkg_permutations{std::move(batch)};
    });
}

int32_t svpkg_permutations_count(const svpkg_permutations* batch) {
    return batch ? batch->batch.count() : 0;
}

int32_t svpkg_permutations_size(const svpkg_permutations* batch) {
    return batch ? batch->batch.s : 0;
}

svpkg_status svpkg_permutations_row(const svpkg_permutations* batch, int32_t index,
                                    int32_t* out, int32_t capacity) {
    return guarded([&] {
        svpkg::require(batch != nullptr && out != nullptr,
                       svpkg::ErrorCode::InvalidArgument, "null argument");
        svpkg::require(index >= 0 && index < batch->batch.count(),
                       svpkg::ErrorCode::InvalidArgument, "row index out of range");
        svpkg::require(capacity >= batch->batch.s, svpkg::ErrorCode::InvalidArgument,
                       "output buffer too small");
        const auto& perm = batch->batch.perms[static_cast<std::size_t>(index)];
        for (int i = 0; i < batch->batch.s; ++i) out[i] = perm[static_cast<std::size_t>(i)];
    });
}

svpkg_status svpkg_permutations_discrepancy(const svpkg_permutations* batch, double* out) {
    return guarded([&] {
        svpkg::require(batch != nullptr && out != nullptr,
                       svpkg::ErrorCode::InvalidArgument, "null argument");
        *out = svpkg::discrepancy_score(batch->batch);
    });
}

svpkg_status svpkg_permutations_write_csv(const svpkg_permutations* batch,
                                          const char* path) {
    return guarded([&] {
        svpkg::require(batch != nullptr, svpkg::ErrorCode::InvalidArgument, "null handle");
        svpkg::write_permutations_csv(batch->batch, required_path(path, "output CSV"));
    });
}

void svpkg_permutations_free(svpkg_permutations* batch) { delete batch; }

svpkg_status svpkg_sample_size_variance(double sigma2, double delta, double eps,
                                        int64_t* out) {
    return guarded([&] {
        svpkg::require(out != nullptr, svpkg::ErrorCode::InvalidArgument, "null output");
        *out = svpkg::required_sample_size_variance(sigma2, delta, eps);
    });
}

svpkg_status svpkg_sample_size_range(double range, double delta, double eps, int64_t* out) {
    return guarded([&] {
        svpkg::require(out != nullptr, svpkg::ErrorCode::InvalidArgument, "null output");
        *out = svpkg::required_sample_size_range(range, delta, eps);
    });
}

} // extern "C"
