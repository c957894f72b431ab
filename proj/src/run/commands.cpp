#include "run/commands.hpp"

#include <memory>

#include <Eigen/Dense>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "lg/closed_form.hpp"
#include "lg/lg_values.hpp"
#include "model/model_json.hpp"
#include "model/trajectory_io.hpp"
#include "run/config.hpp"
#include "sv/value_functions.hpp"

namespace svpkg {

namespace {

constexpr std::uint64_t kTagSimulate = 0x73696d75ull;

Eigen::MatrixXd draw_standardized(int horizon, int n, std::uint64_t seed,
                                  std::uint64_t batch) {
    Rng rng = Rng::substream(seed, kTagSimulate, batch);
    Eigen::MatrixXd z(horizon, n);
    for (int t = 0; t < horizon; ++t)
        for (int k = 0; k < n; ++k) z(t, k) = rng.normal();
    return z;
}

} // namespace

void cmd_simulate(const nlohmann::json& config, const std::string& out_csv) {
    ProcessInstance inst = instance_from_config(config);
    const nlohmann::json& sim = config.contains("simulate") ? config["simulate"]
                                                            : nlohmann::json::object();
    const int batches = sim.value("batches", 1);
    require(batches >= 0, ErrorCode::ConfigError, "simulate.batches must be >= 0");
    const bool with_noise = sim.value("with_noise", true);
    const std::uint64_t seed = seed_field(sim, "seed", "simulate");

    std::vector<Trajectory> trajectories;
    for (int b = 0; b < batches; ++b) {
        Eigen::MatrixXd z = draw_standardized(inst.horizon, inst.state_dim(), seed,
                                              static_cast<std::uint64_t>(b));
        if (!with_noise) z.setZero();
        if (inst.family == ProcessInstance::Family::Kinetic) {
            trajectories.push_back(simulate_kinetic(inst.kinetic, inst.kinetic_s0,
                                                    inst.policy, inst.reward, inst.horizon,
                                                    z));
        } else {
            // correlate the standardized draws through the residual law
            Eigen::MatrixXd cov = inst.lg.residual_covariance();
            Eigen::VectorXd flat(static_cast<long>(inst.horizon) * inst.lg.n);
            for (int t = 0; t < inst.horizon; ++t)
                for (int k = 0; k < inst.lg.n; ++k)
                    flat[static_cast<long>(t) * inst.lg.n + k] = z(t, k);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
            Eigen::VectorXd e =
                eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                flat;
            Eigen::MatrixXd residuals(inst.horizon, inst.lg.n);
            for (int t = 0; t < inst.horizon; ++t)
                for (int k = 0; k < inst.lg.n; ++k)
                    residuals(t, k) = e[static_cast<long>(t) * inst.lg.n + k];
            trajectories.push_back(
                simulate_linear_gaussian(inst.lg, inst.policy, inst.reward, residuals));
        }
    }
    require(inst.state_dim() == 5, ErrorCode::ConfigError,
            "the batch dataset CSV format carries the 5-state layout");
    write_trajectories(out_csv, trajectories);
}

void cmd_fit(const nlohmann::json& config, const std::string& data_csv,
             const std::string& out_json) {
    require(config.contains("fit"), ErrorCode::ConfigError, "config has no fit section");
    const nlohmann::json& fit = config["fit"];
    const std::string kind = fit.value("kind", std::string("linear"));
    const std::uint64_t seed = seed_field(fit, "seed", "fit");
    LoadedDataset dataset = load_trajectories(data_csv);

    if (kind == "linear") {
        ProcessInstance inst = instance_from_config(config);
        require(inst.family == ProcessInstance::Family::LinearGaussian,
                ErrorCode::ConfigError, "linear fit needs a linear-gaussian model section");
        LinearRegressionPrior prior;
        if (fit.contains("prior")) {
            const auto& p = fit["prior"];
            prior.precision = p.value("precision", prior.precision);
            prior.known_noise_variance =
                p.value("known_noise_variance", prior.known_noise_variance);
            prior.noise_variance = p.value("noise_variance", prior.noise_variance);
            prior.ig_shape = p.value("ig_shape", prior.ig_shape);
            prior.ig_scale = p.value("ig_scale", prior.ig_scale);
        }
        const int q_count = fit.value("Q", 100);
        PosteriorEnsemble ensemble =
            fit_linear_posterior(dataset.trajectories, inst.lg, prior, q_count, seed);
        write_posterior(ensemble, out_json);
        return;
    }
    if (kind == "kinetic-mcmc") {
        ProcessInstance inst = instance_from_config(config);
        require(inst.family == ProcessInstance::Family::Kinetic, ErrorCode::ConfigError,
                "kinetic-mcmc fit needs a kinetic model section");
        KineticPrior prior;
        if (fit.contains("prior")) {
            const auto& p = fit["prior"];
            auto read = [&](const char* key, KineticParameterSample& into) {
                if (!p.contains(key)) return;
                const auto& v = p[key];
                into.m_s = v.value("m_s", into.m_s);
                into.r_L = v.value("r_L", into.r_L);
                into.beta_LCmax = v.value("beta_LCmax", into.beta_LCmax);
                into.mu_max = v.value("mu_max", into.mu_max);
            };
            read("mean", prior.mean);
            read("sd", prior.sd);
        }
        McmcConfig mcmc;
        mcmc.seed = seed;
        if (fit.contains("mcmc")) {
            const auto& m = fit["mcmc"];
            mcmc.sample_count = m.value("samples", mcmc.sample_count);
            mcmc.burn_in = m.value("burn_in", mcmc.burn_in);
            mcmc.thin = m.value("thin", mcmc.thin);
            mcmc.data_weight = m.value("data_weight", mcmc.data_weight);
            mcmc.divergence_window = m.value("divergence_window", mcmc.divergence_window);
            if (m.contains("step")) {
                const auto& s = m["step"];
                mcmc.step.m_s = s.value("m_s", mcmc.step.m_s);
                mcmc.step.r_L = s.value("r_L", mcmc.step.r_L);
                mcmc.step.beta_LCmax = s.value("beta_LCmax", mcmc.step.beta_LCmax);
                mcmc.step.mu_max = s.value("mu_max", mcmc.step.mu_max);
            }
        }
        PosteriorEnsemble ensemble =
            sample_nonlinear_posterior(dataset.trajectories, inst.kinetic, prior, mcmc);
        write_posterior(ensemble, out_json);
        return;
    }
    fail(ErrorCode::ConfigError, "unknown fit kind '" + kind + "'");
}

namespace {

std::unique_ptr<ValueFunction> make_value_function(const ProcessInstance& inst,
                                                   const AnalysisConfig& cfg) {
    if (cfg.engine == "analytic") {
        require(inst.family == ProcessInstance::Family::LinearGaussian,
                ErrorCode::ConfigError, "the analytic engine needs a linear Gaussian model");
        switch (cfg.inputs) {
            case InputKind::RandomFactors: {
                LgRandomFactorOptions opts;
                opts.mode = cfg.mode;
                opts.lambda = cfg.lambda;
                return std::make_unique<LgRandomFactorsValue>(inst, opts);
            }
            case InputKind::PolicyParameters: {
                LgValueOptions opts;
                opts.mode = cfg.mode;
                return std::make_unique<LgPolicyValue>(inst, opts);
            }
            case InputKind::ModelParameters: {
                LgModelValueOptions opts;
                opts.mode = cfg.mode;
                opts.outer = cfg.outer;
                opts.inner = cfg.inner;
                opts.exhaustive = cfg.exhaustive_ensemble;
                opts.seed = cfg.seed;
                return std::make_unique<LgModelValue>(inst, opts);
            }
        }
    }
    switch (cfg.inputs) {
        case InputKind::RandomFactors: {
            SimulationValueConfig opts;
            opts.mode = cfg.mode;
            opts.lambda = cfg.lambda;
            opts.trajectories = cfg.trajectories;
            opts.outer = cfg.outer;
            opts.inner = cfg.inner;
            opts.seed = cfg.seed;
            return std::make_unique<RandomFactorsSimValue>(inst, opts);
        }
        case InputKind::PolicyParameters: {
            SimulationValueConfig opts;
            opts.mode = cfg.mode;
            opts.trajectories = cfg.trajectories;
            opts.seed = cfg.seed;
            return std::make_unique<PolicySimValue>(inst, opts);
        }
        case InputKind::ModelParameters: {
            ModelValueConfig opts;
            opts.mode = cfg.mode;
            opts.trajectories = cfg.trajectories;
            opts.outer = cfg.outer;
            opts.inner = cfg.inner;
            opts.exhaustive = cfg.exhaustive_ensemble;
            opts.seed = cfg.seed;
            return std::make_unique<ModelParamsSimValue>(inst, opts);
        }
    }
    fail(ErrorCode::ConfigError, "unhandled analysis input kind");
}

} // namespace

SVReport cmd_sv(const nlohmann::json& config, const std::string& out_csv,
                const std::string& out_json) {
    ProcessInstance inst = instance_from_config(config);
    require(config.contains("analysis"), ErrorCode::ConfigError,
            "config has no analysis section");
    AnalysisConfig cfg = AnalysisConfig::from_json(config["analysis"]);

    SVReport report;
    if (cfg.engine == "analytic" && cfg.inputs == InputKind::RandomFactors) {
        // Exact closed forms; no permutation sampling involved.
        report = cfg.mode == ValueMode::Expectation
                     ? sv_random_predictive_exact(inst.lg, inst.policy, inst.reward,
                                                  inst.posterior, cfg.lambda, cfg.seed)
                     : sv_random_variance_exact(inst.lg, inst.policy, inst.reward,
                                                inst.posterior, cfg.seed);
    } else {
        std::unique_ptr<ValueFunction> value = make_value_function(inst, cfg);
        const int s = value->input_count();
        PermutationBatch perms;
        std::string method_tag;
        if (cfg.exact) {
            require(s <= 8, ErrorCode::InstanceTooLarge,
                    "--exact enumerates all permutations and is limited to 8 inputs (got " +
                        std::to_string(s) + ")");
            perms = enumerate_permutations(s);
            method_tag = "exact-enumeration";
        } else {
            perms = sample_permutations(s, cfg.d_count, cfg.method, cfg.seed);
            method_tag = to_string(cfg.method);
        }
        EstimatorOptions eopts;
        // model-parameter analyses draw the ensemble inside the value
        // function; the outer posterior loop collapses to one pass
        eopts.q_count = cfg.inputs == InputKind::ModelParameters ? 1 : cfg.q_count;
        eopts.threads = cfg.threads;
        eopts.seed = cfg.seed;
        eopts.method_tag = method_tag;
        report = shapley_estimate(*value, perms, eopts);
        report.inner_samples = cfg.trajectories;
    }
    // optional output filter: keep only the listed output labels
    if (config["analysis"].contains("outputs")) {
        std::vector<int> keep;
        for (const auto& label : config["analysis"]["outputs"])
            keep.push_back(report.output_index(label.get<std::string>()));
        SVReport filtered = report;
        filtered.output_labels.clear();
        filtered.sv.resize(report.input_count(), static_cast<long>(keep.size()));
        filtered.mc_variance.resize(report.input_count(), static_cast<long>(keep.size()));
        filtered.value_full.resize(static_cast<long>(keep.size()));
        filtered.value_empty.resize(static_cast<long>(keep.size()));
        filtered.efficiency_residual.resize(static_cast<long>(keep.size()));
        for (std::size_t j = 0; j < keep.size(); ++j) {
            const int col = keep[j];
            filtered.output_labels.push_back(report.output_labels[static_cast<std::size_t>(col)]);
            filtered.sv.col(static_cast<long>(j)) = report.sv.col(col);
            filtered.mc_variance.col(static_cast<long>(j)) = report.mc_variance.col(col);
            filtered.value_full[static_cast<long>(j)] = report.value_full[col];
            filtered.value_empty[static_cast<long>(j)] = report.value_empty[col];
            filtered.efficiency_residual[static_cast<long>(j)] =
                report.efficiency_residual[col];
        }
        report = std::move(filtered);
    }
    if (!out_csv.empty()) report.write_long_csv(out_csv);
    if (!out_json.empty()) report.write_json(out_json);
    return report;
}

} // namespace svpkg
