#include "model/model_json.hpp"

#include <fstream>

#include "common/error.hpp"

namespace svpkg {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
    fail(ErrorCode::ConfigError, where + ": " + what);
}

const json& member(const json& doc, const std::string& key, const std::string& where) {
    auto it = doc.find(key);
    if (it == doc.end()) config_fail(where, "missing field '" + key + "'");
    return *it;
}

double number(const json& doc, const std::string& key, const std::string& where) {
    const json& v = member(doc, key, where);
    if (!v.is_number()) config_fail(where, "field '" + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& doc, const std::string& key, double fallback) {
    auto it = doc.find(key);
    return it == doc.end() ? fallback : it->get<double>();
}

int integer(const json& doc, const std::string& key, const std::string& where) {
    const json& v = member(doc, key, where);
    if (!v.is_number_integer()) config_fail(where, "field '" + key + "' must be an integer");
    return v.get<int>();
}

Eigen::VectorXd vector_field(const json& v, long size, const std::string& where) {
    if (!v.is_array() || static_cast<long>(v.size()) != size)
        config_fail(where, "expected an array of length " + std::to_string(size));
    Eigen::VectorXd out(size);
    for (long i = 0; i < size; ++i) out[i] = v[static_cast<std::size_t>(i)].get<double>();
    return out;
}

Eigen::MatrixXd matrix_field(const json& v, long rows, long cols, const std::string& where) {
    if (!v.is_array() || static_cast<long>(v.size()) != rows * cols)
        config_fail(where, "expected a row-major array of length " +
                               std::to_string(rows * cols));
    Eigen::MatrixXd out(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            out(i, j) = v[static_cast<std::size_t>(i * cols + j)].get<double>();
    return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

std::vector<double> to_std(const Eigen::MatrixXd& m) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m.size()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

NoiseSpec noise_from_json(const json& doc, int n, int horizon, const std::string& where) {
    NoiseSpec noise;
    std::string kind = doc.value("kind", std::string("additive-gaussian"));
    if (kind == "additive-gaussian")
        noise.kind = NoiseSpec::Kind::AdditiveGaussian;
    else if (kind == "multiplicative-state-proportional")
        noise.kind = NoiseSpec::Kind::MultiplicativeStateProportional;
    else
        config_fail(where, "unknown noise kind '" + kind + "'");
    noise.scales = vector_field(member(doc, "scales", where), n, where + ".scales");
    noise.dt = number_or(doc, "dt", 1.0);
    if (doc.contains("covariance")) {
        const long dim = static_cast<long>(horizon) * n;
        noise.covariance =
            matrix_field(doc["covariance"], dim, dim, where + ".covariance");
    }
    noise.validate(n, horizon);
    return noise;
}

} // namespace

LinearGaussianModel linear_gaussian_from_json(const json& doc) {
    const std::string where = "model";
    LinearGaussianModel model;
    model.n = integer(doc, "n", where);
    model.m = integer(doc, "m", where);
    model.horizon = integer(doc, "H", where);
    require(model.n >= 1 && model.m >= 1 && model.horizon >= 1, ErrorCode::ConfigError,
            "model dimensions must be positive");
    const json& beta_s = member(doc, "beta_s", where);
    const json& beta_a = member(doc, "beta_a", where);
    if (static_cast<int>(beta_s.size()) != model.horizon - 1 ||
        static_cast<int>(beta_a.size()) != model.horizon - 1)
        config_fail(where, "beta_s/beta_a must list H-1 matrices");
    for (int t = 0; t < model.horizon - 1; ++t) {
        model.beta_s.push_back(matrix_field(beta_s[static_cast<std::size_t>(t)], model.n,
                                            model.n, where + ".beta_s"));
        model.beta_a.push_back(matrix_field(beta_a[static_cast<std::size_t>(t)], model.m,
                                            model.n, where + ".beta_a"));
    }
    const json& mu_s = member(doc, "mu_s", where);
    if (static_cast<int>(mu_s.size()) != model.horizon)
        config_fail(where, "mu_s must list H vectors");
    for (int t = 0; t < model.horizon; ++t)
        model.mu_s.push_back(
            vector_field(mu_s[static_cast<std::size_t>(t)], model.n, where + ".mu_s"));
    const json& mu_a = member(doc, "mu_a", where);
    if (static_cast<int>(mu_a.size()) != model.horizon - 1)
        config_fail(where, "mu_a must list H-1 vectors");
    for (int t = 0; t < model.horizon - 1; ++t)
        model.mu_a.push_back(
            vector_field(mu_a[static_cast<std::size_t>(t)], model.m, where + ".mu_a"));
    model.s0 = vector_field(member(doc, "s0", where), model.n, where + ".s0");
    model.noise =
        noise_from_json(member(doc, "noise", where), model.n, model.horizon, where + ".noise");
    model.validate();
    return model;
}

KineticModel kinetic_from_json(const json& doc) {
    const std::string where = "model";
    KineticModel model;
    if (doc.contains("params")) {
        const json& p = doc["params"];
        model.alpha_L = number_or(p, "alpha_L", model.alpha_L);
        model.C_max = number_or(p, "C_max", model.C_max);
        model.K_iN = number_or(p, "K_iN", model.K_iN);
        model.K_iS = number_or(p, "K_iS", model.K_iS);
        model.K_iX = number_or(p, "K_iX", model.K_iX);
        model.K_N = number_or(p, "K_N", model.K_N);
        model.K_O = number_or(p, "K_O", model.K_O);
        model.K_S = number_or(p, "K_S", model.K_S);
        model.K_SL = number_or(p, "K_SL", model.K_SL);
        model.V_evap = number_or(p, "V_evap", model.V_evap);
        model.Y_cs = number_or(p, "Y_cs", model.Y_cs);
        model.Y_ls = number_or(p, "Y_ls", model.Y_ls);
        model.Y_xn = number_or(p, "Y_xn", model.Y_xn);
        model.Y_xs = number_or(p, "Y_xs", model.Y_xs);
        model.S_F = number_or(p, "S_F", model.S_F);
    }
    if (doc.contains("uncertain")) {
        const json& u = doc["uncertain"];
        model.m_s = number(u, "m_s", where + ".uncertain");
        model.r_L = number(u, "r_L", where + ".uncertain");
        model.beta_LCmax = number(u, "beta_LCmax", where + ".uncertain");
        model.mu_max = number(u, "mu_max", where + ".uncertain");
    }
    model.oxygen = number_or(doc, "oxygen", model.oxygen);
    model.dt = number_or(doc, "dt", model.dt);
    model.lipid_init = number_or(doc, "lipid_init", model.lipid_init);
    model.noise = noise_from_json(member(doc, "noise", where), KineticModel::state_dim, 1,
                                  where + ".noise");
    model.noise.dt = model.dt;
    model.validate();
    return model;
}

PolicySpec policy_from_json(const json& doc, const json& model_doc) {
    const std::string where = "policy";
    const std::string type = model_doc.value("type", std::string("linear-gaussian"));
    int n, m, horizon;
    if (type == "kinetic") {
        n = KineticModel::state_dim;
        m = KineticModel::action_dim;
        horizon = integer(model_doc, "H", "model");
    } else {
        n = integer(model_doc, "n", "model");
        m = integer(model_doc, "m", "model");
        horizon = integer(model_doc, "H", "model");
    }
    PolicySpec policy;
    const json& theta = member(doc, "theta", where);
    if (static_cast<int>(theta.size()) != horizon - 1)
        config_fail(where, "theta must list H-1 matrices");
    for (int t = 0; t < horizon - 1; ++t)
        policy.theta.push_back(
            matrix_field(theta[static_cast<std::size_t>(t)], n, m, where + ".theta"));
    policy.clamp_nonnegative = doc.value("clamp_nonnegative", false);
    // anchors: explicit in the policy section for kinetic models, shared
    // with the model otherwise
    if (type == "kinetic") {
        const json& mu_a = member(doc, "mu_a", where);
        const json& mu_s = member(doc, "mu_s", where);
        if (static_cast<int>(mu_a.size()) != horizon - 1 ||
            static_cast<int>(mu_s.size()) != horizon - 1)
            config_fail(where, "policy anchors must list H-1 vectors");
        for (int t = 0; t < horizon - 1; ++t) {
            policy.mu_a.push_back(
                vector_field(mu_a[static_cast<std::size_t>(t)], m, where + ".mu_a"));
            policy.mu_s.push_back(
                vector_field(mu_s[static_cast<std::size_t>(t)], n, where + ".mu_s"));
        }
    } else {
        const json& mu_a = member(model_doc, "mu_a", "model");
        const json& mu_s = member(model_doc, "mu_s", "model");
        for (int t = 0; t < horizon - 1; ++t) {
            policy.mu_a.push_back(
                vector_field(mu_a[static_cast<std::size_t>(t)], m, "model.mu_a"));
            policy.mu_s.push_back(
                vector_field(mu_s[static_cast<std::size_t>(t)], n, "model.mu_s"));
        }
    }
    policy.validate(n, m);
    return policy;
}

RewardSpec reward_from_json(const json& doc, int n, int m, int horizon) {
    const std::string where = "reward";
    RewardSpec reward;
    const std::string form = doc.value("form", std::string("linear"));
    if (form == "terminal-citrate") {
        reward.form = RewardSpec::Form::TerminalCitrate;
        reward.terminal_offset = number_or(doc, "terminal_offset", reward.terminal_offset);
        reward.terminal_citrate_coeff =
            number_or(doc, "terminal_citrate_coeff", reward.terminal_citrate_coeff);
        reward.action_cost_coeff =
            number_or(doc, "action_cost_coeff", reward.action_cost_coeff);
        reward.citrate_index = doc.value("citrate_index", 1);
    } else if (form == "linear") {
        reward.form = RewardSpec::Form::Linear;
        const json& offset = member(doc, "offset", where);
        const json& action_coeff = member(doc, "action_coeff", where);
        const json& state_coeff = member(doc, "state_coeff", where);
        if (static_cast<int>(offset.size()) != horizon ||
            static_cast<int>(action_coeff.size()) != horizon ||
            static_cast<int>(state_coeff.size()) != horizon)
            config_fail(where, "linear reward sections must list H entries");
        for (int t = 0; t < horizon; ++t) {
            reward.offset.push_back(offset[static_cast<std::size_t>(t)].get<double>());
            reward.action_coeff.push_back(vector_field(
                action_coeff[static_cast<std::size_t>(t)], m, where + ".action_coeff"));
            reward.state_coeff.push_back(vector_field(
                state_coeff[static_cast<std::size_t>(t)], n, where + ".state_coeff"));
        }
    } else {
        config_fail(where, "unknown reward form '" + form + "'");
    }
    reward.validate(n, m, horizon);
    return reward;
}

ProcessInstance instance_from_config(const json& config) {
    const json& model_doc = member(config, "model", "config");
    const std::string type = model_doc.value("type", std::string("linear-gaussian"));
    ProcessInstance inst;
    if (type == "kinetic") {
        inst.family = ProcessInstance::Family::Kinetic;
        inst.kinetic = kinetic_from_json(model_doc);
        inst.horizon = integer(model_doc, "H", "model");
        inst.kinetic_s0 = vector_field(member(model_doc, "s0", "model"),
                                       KineticModel::state_dim, "model.s0");
    } else if (type == "linear-gaussian") {
        inst.family = ProcessInstance::Family::LinearGaussian;
        inst.lg = linear_gaussian_from_json(model_doc);
        inst.horizon = inst.lg.horizon;
    } else {
        config_fail("model", "unknown model type '" + type + "'");
    }
    inst.policy = policy_from_json(member(config, "policy", "config"), model_doc);
    inst.reward = reward_from_json(member(config, "reward", "config"), inst.state_dim(),
                                   inst.action_dim(), inst.horizon);
    if (config.contains("posterior") && config["posterior"].contains("file")) {
        inst.posterior = load_posterior(config["posterior"]["file"].get<std::string>());
    } else if (inst.family == ProcessInstance::Family::Kinetic) {
        inst.posterior = ProcessInstance::degenerate_posterior(inst.kinetic);
    } else {
        inst.posterior = ProcessInstance::degenerate_posterior(inst.lg);
    }
    if (model_doc.contains("state_names")) {
        for (const auto& v : model_doc["state_names"])
            inst.state_names.push_back(v.get<std::string>());
    } else {
        inst.state_names = default_state_names(inst.state_dim());
    }
    if (model_doc.contains("action_names")) {
        for (const auto& v : model_doc["action_names"])
            inst.action_names.push_back(v.get<std::string>());
    } else {
        inst.action_names = default_action_names(inst.action_dim());
    }
    inst.validate();
    return inst;
}

json posterior_to_json(const PosteriorEnsemble& ensemble) {
    json doc;
    doc["kind"] = ensemble.kind == PosteriorEnsemble::Kind::LinearGaussian
                      ? "linear-gaussian"
                      : "kinetic";
    switch (ensemble.provenance) {
        case PosteriorEnsemble::Provenance::Conjugate: doc["provenance"] = "conjugate"; break;
        case PosteriorEnsemble::Provenance::Metropolis:
            doc["provenance"] = "metropolis";
            break;
        case PosteriorEnsemble::Provenance::File: doc["provenance"] = "file"; break;
    }
    doc["seed"] = ensemble.seed;
    json samples = json::array();
    if (ensemble.kind == PosteriorEnsemble::Kind::Kinetic) {
        for (const auto& w : ensemble.kinetic_samples)
            samples.push_back({{"m_s", w.m_s},
                               {"r_L", w.r_L},
                               {"beta_LCmax", w.beta_LCmax},
                               {"mu_max", w.mu_max}});
    } else {
        for (const auto& w : ensemble.lg_samples) {
            json beta_s = json::array();
            json beta_a = json::array();
            for (const auto& b : w.beta_s) beta_s.push_back(to_std(b));
            for (const auto& b : w.beta_a) beta_a.push_back(to_std(b));
            samples.push_back({{"beta_s", beta_s}, {"beta_a", beta_a}});
        }
    }
    doc["samples"] = samples;
    if (ensemble.residual_covariance.size() > 0)
        doc["residual_covariance"] = to_std(ensemble.residual_covariance);
    return doc;
}

PosteriorEnsemble posterior_from_json(const json& doc) {
    PosteriorEnsemble ensemble;
    const std::string kind = member(doc, "kind", "posterior").get<std::string>();
    const std::string provenance = doc.value("provenance", std::string("file"));
    if (provenance == "conjugate")
        ensemble.provenance = PosteriorEnsemble::Provenance::Conjugate;
    else if (provenance == "metropolis")
        ensemble.provenance = PosteriorEnsemble::Provenance::Metropolis;
    else
        ensemble.provenance = PosteriorEnsemble::Provenance::File;
    ensemble.seed = doc.value("seed", 0ull);
    const json& samples = member(doc, "samples", "posterior");
    if (kind == "kinetic") {
        ensemble.kind = PosteriorEnsemble::Kind::Kinetic;
        for (const auto& s : samples)
            ensemble.kinetic_samples.push_back(
                KineticParameterSample{number(s, "m_s", "posterior.samples"),
                                       number(s, "r_L", "posterior.samples"),
                                       number(s, "beta_LCmax", "posterior.samples"),
                                       number(s, "mu_max", "posterior.samples")});
    } else if (kind == "linear-gaussian") {
        ensemble.kind = PosteriorEnsemble::Kind::LinearGaussian;
        for (const auto& s : samples) {
            LgParameterSample w;
            const json& beta_s = member(s, "beta_s", "posterior.samples");
            const json& beta_a = member(s, "beta_a", "posterior.samples");
            require(beta_s.size() == beta_a.size(), ErrorCode::ConfigError,
                    "posterior sample period counts disagree");
            for (std::size_t t = 0; t < beta_s.size(); ++t) {
                // dimensions are recovered from the square beta_s blocks
                const long nn = static_cast<long>(beta_s[t].size());
                const long n = static_cast<long>(std::llround(std::sqrt(double(nn))));
                require(n * n == nn, ErrorCode::ConfigError,
                        "posterior beta_s entries must be square matrices");
                const long mn = static_cast<long>(beta_a[t].size());
                require(n >= 1 && mn % n == 0, ErrorCode::ConfigError,
                        "posterior beta_a entries disagree with beta_s");
                w.beta_s.push_back(matrix_field(beta_s[t], n, n, "posterior.beta_s"));
                w.beta_a.push_back(matrix_field(beta_a[t], mn / n, n, "posterior.beta_a"));
            }
            ensemble.lg_samples.push_back(std::move(w));
        }
    } else {
        config_fail("posterior", "unknown kind '" + kind + "'");
    }
    if (doc.contains("residual_covariance")) {
        const long sz = static_cast<long>(doc["residual_covariance"].size());
        const long n = static_cast<long>(std::llround(std::sqrt(double(sz))));
        require(n * n == sz, ErrorCode::ConfigError,
                "residual_covariance must be a square matrix");
        ensemble.residual_covariance =
            matrix_field(doc["residual_covariance"], n, n, "posterior.residual_covariance");
    }
    ensemble.validate();
    return ensemble;
}

void write_posterior(const PosteriorEnsemble& ensemble, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::IoError, "cannot open " + path + " for writing");
    out << posterior_to_json(ensemble).dump(2) << "\n";
    require(out.good(), ErrorCode::IoError, "write failed for " + path);
}

PosteriorEnsemble load_posterior(const std::string& path) {
    return posterior_from_json(load_json_file(path));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::IoError, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, path + ": " + e.what());
    }
    return doc;
}

} // namespace svpkg
