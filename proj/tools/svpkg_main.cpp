// svpkg command-line front end. All heavy lifting happens behind the shared
// library's C API; this binary only parses arguments, assembles config JSON
// and reports status.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "svpkg/svpkg.h"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
        std::exit(2);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json load_config(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        std::fprintf(stderr, "error: %s: %s\n", path.c_str(), e.what());
        std::exit(2);
    }
}

int check(svpkg_status status, const char* what) {
    if (status == SVPKG_OK) return 0;
    std::fprintf(stderr, "error: %s failed (status %d): %s\n", what,
                 static_cast<int>(status), svpkg_last_error());
    return 1;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shapley-value sensitivity analysis for policy-augmented "
                 "knowledge-graph process models"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(svpkg_version()));

    // simulate
    std::string sim_config, sim_out;
    auto* simulate = app.add_subcommand("simulate", "simulate trajectory batches to CSV");
    simulate->add_option("--config", sim_config, "config JSON path")->required();
    simulate->add_option("--out", sim_out, "output CSV path")->required();

    // fit
    std::string fit_config, fit_data, fit_out;
    auto* fit = app.add_subcommand("fit", "fit the model parameter posterior");
    fit->add_option("--config", fit_config, "config JSON path")->required();
    fit->add_option("--data", fit_data, "trajectory CSV path")->required();
    fit->add_option("--out", fit_out, "output posterior JSON path")->required();

    // sv
    std::string sv_config, sv_out_csv, sv_out_json, sv_engine;
    bool sv_exact = false;
    int sv_threads = 0;
    std::uint64_t sv_seed = 0;
    bool sv_seed_set = false;
    auto* sv = app.add_subcommand("sv", "run a Shapley-value analysis");
    sv->add_option("--config", sv_config, "config JSON path")->required();
    sv->add_option("--out-csv", sv_out_csv, "long-form CSV output path")->required();
    sv->add_option("--out-json", sv_out_json, "JSON diagnostics output path")->required();
    sv->add_option("--engine", sv_engine, "simulation | analytic");
    sv->add_flag("--exact", sv_exact, "full permutation enumeration (small instances)");
    sv->add_option("--threads", sv_threads, "worker threads inside the engine");
    auto* seed_opt = sv->add_option("--seed", sv_seed, "override analysis.seed");

    // perm-study
    std::string ps_dims = "5,10,20", ps_counts = "100", ps_methods = "bmt,sct,tfww";
    std::string ps_out;
    int ps_reps = 36;
    std::uint64_t ps_seed = 0;
    bool ps_pseudo = false;
    auto* perm_study =
        app.add_subcommand("perm-study", "permutation sampler uniformity and timing study");
    perm_study->add_option("--dims", ps_dims, "permutation dimensions, comma separated");
    perm_study->add_option("--counts", ps_counts, "sample counts, comma separated");
    perm_study->add_option("--methods", ps_methods, "methods, comma separated");
    perm_study->add_option("--replications", ps_reps, "macro replications");
    perm_study->add_option("--seed", ps_seed, "study seed")->required();
    perm_study->add_option("--out", ps_out, "output CSV path")->required();
    perm_study->add_flag("--pseudo-random", ps_pseudo,
                         "feed pseudo-random cube points instead of Sobol");

    // bench
    std::string bench_tasks = "lg-policy-predictive,lg-policy-variance";
    std::string bench_horizons = "4,8,16", bench_out;
    std::uint64_t bench_seed = 0;
    double bench_min_seconds = 0.05;
    auto* bench =
        app.add_subcommand("bench", "paired reuse vs brute-force timing harness");
    bench->add_option("--tasks", bench_tasks,
                      "tasks: lg-policy-predictive, lg-policy-variance, "
                      "nonlinear-predictive (comma separated; empty for none)");
    bench->add_option("--horizons", bench_horizons, "time horizons, comma separated");
    bench->add_option("--seed", bench_seed, "bench seed")->required();
    bench->add_option("--min-seconds", bench_min_seconds, "repetition floor per timing");
    bench->add_option("--out", bench_out, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);
    sv_seed_set = seed_opt->count() > 0;

    if (simulate->parsed()) {
        json config = load_config(sim_config);
        return check(svpkg_run_simulate(config.dump().c_str(), sim_out.c_str()),
                     "simulate");
    }
    if (fit->parsed()) {
        json config = load_config(fit_config);
        return check(
            svpkg_run_fit(config.dump().c_str(), fit_data.c_str(), fit_out.c_str()),
            "fit");
    }
    if (sv->parsed()) {
        json config = load_config(sv_config);
        if (!config.contains("analysis")) config["analysis"] = json::object();
        if (!sv_engine.empty()) config["analysis"]["engine"] = sv_engine;
        if (sv_exact) config["analysis"]["exact"] = true;
        if (sv_threads > 0) config["analysis"]["threads"] = sv_threads;
        if (sv_seed_set) config["analysis"]["seed"] = sv_seed;
        return check(svpkg_run_sv(config.dump().c_str(), sv_out_csv.c_str(),
                                  sv_out_json.c_str()),
                     "sv");
    }
    if (perm_study->parsed()) {
        json params;
        params["dims"] = parse_int_list(ps_dims);
        params["counts"] = parse_int_list(ps_counts);
        params["methods"] = parse_string_list(ps_methods);
        params["replications"] = ps_reps;
        params["seed"] = ps_seed;
        params["sobol_cube"] = !ps_pseudo;
        return check(svpkg_run_perm_study(params.dump().c_str(), ps_out.c_str()),
                     "perm-study");
    }
    if (bench->parsed()) {
        json params;
        params["tasks"] = bench_tasks.empty() ? std::vector<std::string>{}
                                              : parse_string_list(bench_tasks);
        params["horizons"] = parse_int_list(bench_horizons);
        params["seed"] = bench_seed;
        params["min_seconds"] = bench_min_seconds;
        return check(svpkg_run_bench(params.dump().c_str(), bench_out.c_str()), "bench");
    }
    return 0;
}
