#include "sv/value_functions.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace svpkg {

namespace {

constexpr std::uint64_t kTagRandomFactor = 0x72616e64ull;
constexpr std::uint64_t kTagVarOuter = 0x766f7574ull;
constexpr std::uint64_t kTagVarInner = 0x76696e6eull;
constexpr std::uint64_t kTagPolicy = 0x706f6c69ull;
constexpr std::uint64_t kTagModelNoise = 0x6d6e6f69ull;
constexpr std::uint64_t kTagModelOuter = 0x6d6f7574ull;
constexpr std::uint64_t kTagModelInner = 0x6d696e6eull;

std::uint64_t pack(std::uint64_t hi, std::uint64_t lo) { return (hi << 32) | lo; }

/// T with T T^t = V for a symmetric PSD matrix (eigendecomposition with
/// negative eigenvalues clamped).
Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& v) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(v);
    require(eig.info() == Eigen::Success, ErrorCode::ConfigError,
            "residual covariance eigendecomposition failed");
    Eigen::VectorXd clamped = eig.eigenvalues().cwiseMax(0.0);
    return eig.eigenvectors() * clamped.cwiseSqrt().asDiagonal();
}

/// Shared simulation state: posterior-applied model copies, the residual
/// transform, and output extraction.
struct SimulationContext {
    const ProcessInstance* inst = nullptr;
    int horizon = 0;
    int n = 0;
    std::vector<LinearGaussianModel> lg_members;
    std::vector<KineticModel> kinetic_members;
    Eigen::MatrixXd residual_transform; // LG: maps N(0, I) to the residual law
    Eigen::VectorXd residual_std;       // LG: marginal residual stds (H*n)
    std::vector<std::string> outputs;

    explicit SimulationContext(const ProcessInstance& instance) : inst(&instance) {
        horizon = instance.horizon;
        n = instance.state_dim();
        outputs = state_output_labels(horizon, instance.state_names);
        if (instance.family == ProcessInstance::Family::LinearGaussian) {
            for (const auto& w : instance.posterior.lg_samples)
                lg_members.push_back(apply_sample(instance.lg, w));
            Eigen::MatrixXd cov = instance.lg.residual_covariance();
            residual_transform = psd_factor(cov);
            residual_std = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
        } else {
            for (const auto& w : instance.posterior.kinetic_samples)
                kinetic_members.push_back(apply_sample(instance.kinetic, w));
        }
    }

    int member_count() const {
        return inst->family == ProcessInstance::Family::LinearGaussian
                   ? static_cast<int>(lg_members.size())
                   : static_cast<int>(kinetic_members.size());
    }

    /// Standardized draw matrix (H x n) from one substream.
    Eigen::MatrixXd draw_z(Rng& rng) const {
        Eigen::MatrixXd z(horizon, n);
        for (int t = 0; t < horizon; ++t)
            for (int k = 0; k < n; ++k) z(t, k) = rng.normal();
        return z;
    }

    /// LG residual matrix from standardized draws.
    Eigen::MatrixXd lg_residuals(const Eigen::MatrixXd& z) const {
        Eigen::VectorXd flat(static_cast<long>(horizon) * n);
        for (int t = 0; t < horizon; ++t)
            for (int k = 0; k < n; ++k) flat[static_cast<long>(t) * n + k] = z(t, k);
        Eigen::VectorXd e = residual_transform * flat;
        Eigen::MatrixXd out(horizon, n);
        for (int t = 0; t < horizon; ++t)
            for (int k = 0; k < n; ++k) out(t, k) = e[static_cast<long>(t) * n + k];
        return out;
    }

    Trajectory simulate(int member, const Eigen::MatrixXd& noise) const {
        if (inst->family == ProcessInstance::Family::LinearGaussian)
            return simulate_linear_gaussian(lg_members[static_cast<std::size_t>(member)],
                                            inst->policy, inst->reward, noise);
        return simulate_kinetic(kinetic_members[static_cast<std::size_t>(member)],
                                inst->kinetic_s0, inst->policy, inst->reward, horizon, noise);
    }

    Eigen::VectorXd outputs_of(const Trajectory& traj) const {
        Eigen::VectorXd out(static_cast<long>(horizon) * n + 1);
        for (int t = 0; t < horizon; ++t)
            for (int k = 0; k < n; ++k) out[static_cast<long>(t) * n + k] = traj.states(t, k);
        // sequential accumulation, kept in step with single_output()
        double cumulative = 0.0;
        for (int t = 0; t < horizon; ++t) cumulative += traj.rewards[t];
        out[static_cast<long>(horizon) * n] = cumulative;
        return out;
    }

    /// One output of one rollout, simulating only as far as that output's
    /// period (full horizon for J). The per-step arithmetic mirrors the full
    /// simulators exactly, so values are bit-identical to outputs_of().
    double single_output(int member, const Eigen::MatrixXd& noise, int output_index) const {
        const bool want_reward = output_index == horizon * n;
        const int t_limit = want_reward ? horizon : output_index / n + 1;
        const int k_want = want_reward ? 0 : output_index % n;
        if (inst->family == ProcessInstance::Family::LinearGaussian) {
            const auto& model = lg_members[static_cast<std::size_t>(member)];
            double reward_sum = 0.0;
            Eigen::VectorXd state = model.s0 + noise.row(0).transpose();
            for (int t = 1; t <= t_limit - 1; ++t) {
                Eigen::VectorXd action = inst->policy.action(state, t);
                if (want_reward)
                    reward_sum += inst->reward.evaluate(state, action, t, horizon);
                state = model.step(state, action, t) + noise.row(t).transpose();
            }
            if (want_reward)
                return reward_sum + inst->reward.evaluate_terminal(state, horizon);
            return state[k_want];
        }
        const auto& model = kinetic_members[static_cast<std::size_t>(member)];
        const double sqrt_dt = std::sqrt(model.dt);
        Eigen::VectorXd e1(n);
        for (int k = 0; k < n; ++k)
            e1[k] = model.noise.scale_at(k, inst->kinetic_s0[k]) * sqrt_dt * noise(0, k);
        Eigen::VectorXd state = inst->kinetic_s0 + e1;
        for (int k = 0; k < 4; ++k) state[k] = std::max(0.0, state[k]);
        double lipid = model.lipid_init;
        double reward_sum = 0.0;
        for (int t = 1; t <= t_limit - 1; ++t) {
            Eigen::VectorXd action = inst->policy.action(state, t);
            if (want_reward) reward_sum += inst->reward.evaluate(state, action, t, horizon);
            state = model.step(state, lipid, action, noise.row(t).transpose());
        }
        if (want_reward) return reward_sum + inst->reward.evaluate_terminal(state, horizon);
        return state[k_want];
    }
};

/// Streaming mean/variance accumulators per output.
struct MeanVar {
    Eigen::VectorXd sum;
    Eigen::VectorXd sumsq;
    long count = 0;
    explicit MeanVar(long size) {
        sum = Eigen::VectorXd::Zero(size);
        sumsq = Eigen::VectorXd::Zero(size);
    }
    void add(const Eigen::VectorXd& x) {
        sum += x;
        sumsq += x.cwiseProduct(x);
        ++count;
    }
    Eigen::VectorXd mean() const { return sum / static_cast<double>(count); }
    Eigen::VectorXd variance() const {
        // unbiased
        Eigen::VectorXd centered =
            sumsq - sum.cwiseProduct(sum) / static_cast<double>(count);
        return (centered / static_cast<double>(count - 1)).cwiseMax(0.0);
    }
};

} // namespace

// ---------------------------------------------------------------------------
// RandomFactorsSimValue

struct RandomFactorsSimValue::Impl {
    SimulationContext ctx;
    SimulationValueConfig cfg;
    std::vector<std::string> inputs;

    Impl(const ProcessInstance& instance, SimulationValueConfig config)
        : ctx(instance), cfg(config),
          inputs(random_factor_labels(instance.horizon, instance.state_names)) {}

    int member_of(int q) const { return q % ctx.member_count(); }

    /// Expectation mode: draw-then-replace keeps the streams aligned across
    /// subsets (common random numbers). Pinned LG residuals sit at
    /// lambda * marginal std; pinned kinetic draws at standardized lambda.
    Eigen::MatrixXd pinned_noise(const std::vector<std::uint8_t>& in_subset,
                                 const Eigen::MatrixXd& z) const {
        const int H = ctx.horizon;
        const int n = ctx.n;
        if (ctx.inst->family == ProcessInstance::Family::LinearGaussian) {
            Eigen::MatrixXd e = ctx.lg_residuals(z);
            for (int t = 0; t < H; ++t)
                for (int k = 0; k < n; ++k) {
                    const long l = static_cast<long>(t) * n + k;
                    if (in_subset[static_cast<std::size_t>(l)])
                        e(t, k) = cfg.lambda * ctx.residual_std[l];
                }
            return e;
        }
        Eigen::MatrixXd out = z;
        for (int t = 0; t < H; ++t)
            for (int k = 0; k < n; ++k)
                if (in_subset[static_cast<std::size_t>(static_cast<long>(t) * n + k)])
                    out(t, k) = cfg.lambda;
        return out;
    }

    /// Variance mode: coordinates in U come from the inner draw, the
    /// complement is frozen at the outer draw.
    Eigen::MatrixXd composed_noise(const std::vector<std::uint8_t>& in_subset,
                                   const Eigen::MatrixXd& z_outer,
                                   const Eigen::MatrixXd& z_inner) const {
        const int H = ctx.horizon;
        const int n = ctx.n;
        auto compose_z = [&](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
            Eigen::MatrixXd out = a;
            for (int t = 0; t < H; ++t)
                for (int k = 0; k < n; ++k)
                    if (in_subset[static_cast<std::size_t>(static_cast<long>(t) * n + k)])
                        out(t, k) = b(t, k);
            return out;
        };
        if (ctx.inst->family == ProcessInstance::Family::LinearGaussian) {
            // Compose realized residuals, not standardized draws, so the
            // conditioned coordinates stay exactly frozen under correlation.
            return compose_z(ctx.lg_residuals(z_outer), ctx.lg_residuals(z_inner));
        }
        return compose_z(z_outer, z_inner);
    }

    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q, int d) const {
        const int member = member_of(q);
        const long n_out = static_cast<long>(ctx.outputs.size());
        if (cfg.mode == ValueMode::Expectation) {
            Eigen::VectorXd acc = Eigen::VectorXd::Zero(n_out);
            for (int l = 0; l < cfg.trajectories; ++l) {
                Rng rng = Rng::substream(cfg.seed, kTagRandomFactor,
                                         static_cast<std::uint64_t>(q),
                                         static_cast<std::uint64_t>(d),
                                         static_cast<std::uint64_t>(l));
                Eigen::MatrixXd z = ctx.draw_z(rng);
                acc += ctx.outputs_of(ctx.simulate(member, pinned_noise(in_subset, z)));
            }
            return acc / static_cast<double>(cfg.trajectories);
        }
        require(cfg.inner >= 2, ErrorCode::ConfigError,
                "variance mode needs at least two inner draws");
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(n_out);
        for (int lo = 0; lo < cfg.outer; ++lo) {
            Rng outer_rng = Rng::substream(cfg.seed, kTagVarOuter,
                                           static_cast<std::uint64_t>(q),
                                           static_cast<std::uint64_t>(d),
                                           static_cast<std::uint64_t>(lo));
            Eigen::MatrixXd z_outer = ctx.draw_z(outer_rng);
            MeanVar stats(n_out);
            for (int li = 0; li < cfg.inner; ++li) {
                Rng inner_rng = Rng::substream(cfg.seed, kTagVarInner,
                                               static_cast<std::uint64_t>(q),
                                               static_cast<std::uint64_t>(d),
                                               pack(static_cast<std::uint64_t>(lo),
                                                    static_cast<std::uint64_t>(li)));
                Eigen::MatrixXd z_inner = ctx.draw_z(inner_rng);
                stats.add(ctx.outputs_of(
                    ctx.simulate(member, composed_noise(in_subset, z_outer, z_inner))));
            }
            acc += stats.variance();
        }
        return acc / static_cast<double>(cfg.outer);
    }

    Eigen::VectorXd evaluate_single(const std::vector<std::uint8_t>& in_subset, int q, int d,
                                    int output_index) const {
        require(cfg.mode == ValueMode::Expectation, ErrorCode::InvalidArgument,
                "single-output walks are defined for expectation mode");
        const int member = member_of(q);
        double acc = 0.0;
        for (int l = 0; l < cfg.trajectories; ++l) {
            Rng rng = Rng::substream(cfg.seed, kTagRandomFactor,
                                     static_cast<std::uint64_t>(q),
                                     static_cast<std::uint64_t>(d),
                                     static_cast<std::uint64_t>(l));
            Eigen::MatrixXd z = ctx.draw_z(rng);
            acc += ctx.single_output(member, pinned_noise(in_subset, z), output_index);
        }
        Eigen::VectorXd out(1);
        out[0] = acc / static_cast<double>(cfg.trajectories);
        return out;
    }
};

RandomFactorsSimValue::RandomFactorsSimValue(const ProcessInstance& instance,
                                             SimulationValueConfig config)
    : impl_(std::make_unique<Impl>(instance, config)) {}
RandomFactorsSimValue::~RandomFactorsSimValue() = default;

int RandomFactorsSimValue::input_count() const {
    return static_cast<int>(impl_->inputs.size());
}
const std::vector<std::string>& RandomFactorsSimValue::input_labels() const {
    return impl_->inputs;
}
const std::vector<std::string>& RandomFactorsSimValue::output_labels() const {
    return impl_->ctx.outputs;
}
Eigen::VectorXd RandomFactorsSimValue::evaluate(const std::vector<std::uint8_t>& in_subset,
                                                int q, int d) const {
    return impl_->evaluate(in_subset, q, d);
}
Eigen::VectorXd RandomFactorsSimValue::evaluate_single_output(
    const std::vector<std::uint8_t>& in_subset, int q, int d, int output_index) const {
    return impl_->evaluate_single(in_subset, q, d, output_index);
}

// ---------------------------------------------------------------------------
// PolicySimValue

struct PolicySimValue::Impl {
    SimulationContext ctx;
    SimulationValueConfig cfg;
    std::vector<std::string> inputs;
    PolicySpec theta_star;

    Impl(const ProcessInstance& instance, SimulationValueConfig config)
        : ctx(instance), cfg(config),
          inputs(policy_parameter_labels(instance.horizon, instance.state_names,
                                         instance.action_names)),
          theta_star(instance.policy) {}

    PolicySpec masked_policy(const std::vector<std::uint8_t>& in_subset) const {
        PolicySpec masked = theta_star.zeroed();
        const int n = ctx.n;
        const int m = ctx.inst->action_dim();
        long idx = 0;
        for (int t = 0; t < ctx.horizon - 1; ++t)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j, ++idx)
                    if (in_subset[static_cast<std::size_t>(idx)])
                        masked.theta[static_cast<std::size_t>(t)](i, j) =
                            theta_star.theta[static_cast<std::size_t>(t)](i, j);
        return masked;
    }

    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q, int d) const {
        const int member = q % ctx.member_count();
        PolicySpec masked = masked_policy(in_subset);
        const long n_out = static_cast<long>(ctx.outputs.size());
        MeanVar stats(n_out);
        for (int l = 0; l < cfg.trajectories; ++l) {
            Rng rng = Rng::substream(cfg.seed, kTagPolicy, static_cast<std::uint64_t>(q),
                                     static_cast<std::uint64_t>(d),
                                     static_cast<std::uint64_t>(l));
            Eigen::MatrixXd z = ctx.draw_z(rng);
            Eigen::MatrixXd noise =
                ctx.inst->family == ProcessInstance::Family::LinearGaussian
                    ? ctx.lg_residuals(z)
                    : z;
            Trajectory traj =
                ctx.inst->family == ProcessInstance::Family::LinearGaussian
                    ? simulate_linear_gaussian(ctx.lg_members[static_cast<std::size_t>(member)],
                                               masked, ctx.inst->reward, noise)
                    : simulate_kinetic(ctx.kinetic_members[static_cast<std::size_t>(member)],
                                       ctx.inst->kinetic_s0, masked, ctx.inst->reward,
                                       ctx.horizon, noise);
            stats.add(ctx.outputs_of(traj));
        }
        if (cfg.mode == ValueMode::Expectation) return stats.mean();
        require(cfg.trajectories >= 2, ErrorCode::ConfigError,
                "variance mode needs at least two trajectories");
        return stats.variance();
    }
};

PolicySimValue::PolicySimValue(const ProcessInstance& instance, SimulationValueConfig config)
    : impl_(std::make_unique<Impl>(instance, config)) {}
PolicySimValue::~PolicySimValue() = default;

int PolicySimValue::input_count() const { return static_cast<int>(impl_->inputs.size()); }
const std::vector<std::string>& PolicySimValue::input_labels() const {
    return impl_->inputs;
}
const std::vector<std::string>& PolicySimValue::output_labels() const {
    return impl_->ctx.outputs;
}
Eigen::VectorXd PolicySimValue::evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                                         int d) const {
    return impl_->evaluate(in_subset, q, d);
}

// ---------------------------------------------------------------------------
// ModelParamsSimValue

std::vector<std::string> model_parameter_labels(const ProcessInstance& instance) {
    if (instance.family == ProcessInstance::Family::Kinetic)
        return {"w[m_s]", "w[r_L]", "w[beta_LCmax]", "w[mu_max]"};
    std::vector<std::string> labels;
    const int n = instance.lg.n;
    const int m = instance.lg.m;
    for (int t = 1; t <= instance.horizon - 1; ++t) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                labels.push_back("w[t=" + std::to_string(t) + ",bs(" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")]");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                labels.push_back("w[t=" + std::to_string(t) + ",ba(" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")]");
    }
    return labels;
}

namespace {

Eigen::VectorXd kinetic_sample_vector(const KineticParameterSample& w) {
    Eigen::VectorXd v(4);
    v << w.m_s, w.r_L, w.beta_LCmax, w.mu_max;
    return v;
}

KineticParameterSample kinetic_sample_from_vector(const Eigen::VectorXd& v) {
    return KineticParameterSample{v[0], v[1], v[2], v[3]};
}

Eigen::VectorXd lg_sample_vector(const LgParameterSample& w) {
    long count = 0;
    for (const auto& b : w.beta_s) count += b.size();
    for (const auto& b : w.beta_a) count += b.size();
    Eigen::VectorXd v(count);
    long pos = 0;
    for (std::size_t t = 0; t < w.beta_s.size(); ++t) {
        const auto& bs = w.beta_s[t];
        for (long i = 0; i < bs.rows(); ++i)
            for (long j = 0; j < bs.cols(); ++j) v[pos++] = bs(i, j);
        const auto& ba = w.beta_a[t];
        for (long i = 0; i < ba.rows(); ++i)
            for (long j = 0; j < ba.cols(); ++j) v[pos++] = ba(i, j);
    }
    return v;
}

LgParameterSample lg_sample_from_vector(const LgParameterSample& shape,
                                        const Eigen::VectorXd& v) {
    LgParameterSample w = shape;
    long pos = 0;
    for (std::size_t t = 0; t < w.beta_s.size(); ++t) {
        for (long i = 0; i < w.beta_s[t].rows(); ++i)
            for (long j = 0; j < w.beta_s[t].cols(); ++j) w.beta_s[t](i, j) = v[pos++];
        for (long i = 0; i < w.beta_a[t].rows(); ++i)
            for (long j = 0; j < w.beta_a[t].cols(); ++j) w.beta_a[t](i, j) = v[pos++];
    }
    return w;
}

} // namespace

struct ModelParamsSimValue::Impl {
    SimulationContext ctx;
    ModelValueConfig cfg;
    std::vector<std::string> inputs;
    std::vector<Eigen::VectorXd> member_vectors;
    Eigen::VectorXd pinned_values; // posterior means
    int ensemble_size = 0;

    Impl(const ProcessInstance& instance, ModelValueConfig config)
        : ctx(instance), cfg(config), inputs(model_parameter_labels(instance)) {
        ensemble_size = instance.posterior.size();
        if (instance.family == ProcessInstance::Family::Kinetic) {
            for (const auto& w : instance.posterior.kinetic_samples)
                member_vectors.push_back(kinetic_sample_vector(w));
            pinned_values = kinetic_sample_vector(kinetic_ensemble_mean(instance.posterior));
        } else {
            for (const auto& w : instance.posterior.lg_samples)
                member_vectors.push_back(lg_sample_vector(w));
            pinned_values = lg_sample_vector(lg_ensemble_mean(instance.posterior));
        }
        require(static_cast<long>(inputs.size()) == pinned_values.size(),
                ErrorCode::InvalidArgument, "parameter label count mismatch");
        if (cfg.exhaustive) {
            cfg.outer = ensemble_size;
            cfg.inner = ensemble_size;
        }
        require(cfg.with_replacement || cfg.exhaustive || cfg.outer <= ensemble_size,
                ErrorCode::EnsembleTooSmall,
                "requested outer draws exceed the ensemble size without replacement");
    }

    int pick_member(std::uint64_t tag, int d, int slot, int stage) const {
        if (cfg.exhaustive) return slot;
        Rng rng = Rng::substream(cfg.seed, tag, static_cast<std::uint64_t>(d),
                                 static_cast<std::uint64_t>(slot),
                                 static_cast<std::uint64_t>(stage));
        return static_cast<int>(rng.below(static_cast<std::uint64_t>(ensemble_size)));
    }

    Eigen::VectorXd compose(const std::vector<std::uint8_t>& in_subset,
                            const Eigen::VectorXd& conditioned,
                            const Eigen::VectorXd& complement) const {
        Eigen::VectorXd v = complement;
        for (long i = 0; i < v.size(); ++i)
            if (in_subset[static_cast<std::size_t>(i)]) v[i] = conditioned[i];
        return v;
    }

    /// Noise-average of the outputs at one parameter assignment; also fills
    /// the per-output variance when requested.
    void simulate_stats(const Eigen::VectorXd& w_vec, int d, std::uint64_t stream_hi,
                        Eigen::VectorXd* mean, Eigen::VectorXd* variance) const {
        const long n_out = static_cast<long>(ctx.outputs.size());
        MeanVar stats(n_out);
        // instantiate the model for this assignment
        LinearGaussianModel lg_model;
        KineticModel kin_model;
        if (ctx.inst->family == ProcessInstance::Family::LinearGaussian)
            lg_model = apply_sample(
                ctx.inst->lg,
                lg_sample_from_vector(ctx.inst->posterior.lg_samples.front(), w_vec));
        else
            kin_model = apply_sample(ctx.inst->kinetic, kinetic_sample_from_vector(w_vec));
        for (int l = 0; l < cfg.trajectories; ++l) {
            Rng rng = Rng::substream(cfg.seed, kTagModelNoise, static_cast<std::uint64_t>(d),
                                     stream_hi, static_cast<std::uint64_t>(l));
            Eigen::MatrixXd z = ctx.draw_z(rng);
            Trajectory traj;
            if (ctx.inst->family == ProcessInstance::Family::LinearGaussian)
                traj = simulate_linear_gaussian(lg_model, ctx.inst->policy, ctx.inst->reward,
                                                ctx.lg_residuals(z));
            else
                traj = simulate_kinetic(kin_model, ctx.inst->kinetic_s0, ctx.inst->policy,
                                        ctx.inst->reward, ctx.horizon, z);
            stats.add(ctx.outputs_of(traj));
        }
        if (mean) *mean = stats.mean();
        if (variance) {
            require(cfg.trajectories >= 2, ErrorCode::ConfigError,
                    "variance estimation needs at least two noise draws");
            *variance = stats.variance();
        }
    }

    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int, int d) const {
        const long n_out = static_cast<long>(ctx.outputs.size());
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(n_out);
        if (cfg.mode == ValueMode::Expectation) {
            for (int o = 0; o < cfg.outer; ++o) {
                const int member = pick_member(kTagModelOuter, d, o, 0);
                Eigen::VectorXd w = compose(in_subset, pinned_values,
                                            member_vectors[static_cast<std::size_t>(member)]);
                Eigen::VectorXd mean;
                simulate_stats(w, d, pack(static_cast<std::uint64_t>(o), 0), &mean, nullptr);
                acc += mean;
            }
            return acc / static_cast<double>(cfg.outer);
        }
        // Variance mode: E over the complement of
        //   E_cond[Var(Y | w)] + Var_cond(E[Y | w]).
        require(cfg.inner >= 2 || ensemble_size == 1, ErrorCode::ConfigError,
                "variance mode needs at least two conditioned draws");
        for (int o = 0; o < cfg.outer; ++o) {
            const int outer_member = pick_member(kTagModelOuter, d, o, 0);
            MeanVar mean_stats(n_out);
            Eigen::VectorXd var_acc = Eigen::VectorXd::Zero(n_out);
            const int inner_count = cfg.exhaustive ? ensemble_size : cfg.inner;
            for (int i = 0; i < inner_count; ++i) {
                const int inner_member =
                    cfg.exhaustive ? i : pick_member(kTagModelInner, d, o, i + 1);
                Eigen::VectorXd w =
                    compose(in_subset, member_vectors[static_cast<std::size_t>(inner_member)],
                            member_vectors[static_cast<std::size_t>(outer_member)]);
                Eigen::VectorXd mean, variance;
                simulate_stats(w, d,
                               pack(static_cast<std::uint64_t>(o),
                                    static_cast<std::uint64_t>(i + 1)),
                               &mean, &variance);
                mean_stats.add(mean);
                var_acc += variance;
            }
            acc += var_acc / static_cast<double>(inner_count);
            if (inner_count >= 2) acc += mean_stats.variance();
        }
        return acc / static_cast<double>(cfg.outer);
    }
};

ModelParamsSimValue::ModelParamsSimValue(const ProcessInstance& instance,
                                         ModelValueConfig config)
    : impl_(std::make_unique<Impl>(instance, config)) {}
ModelParamsSimValue::~ModelParamsSimValue() = default;

int ModelParamsSimValue::input_count() const {
    return static_cast<int>(impl_->inputs.size());
}
const std::vector<std::string>& ModelParamsSimValue::input_labels() const {
    return impl_->inputs;
}
const std::vector<std::string>& ModelParamsSimValue::output_labels() const {
    return impl_->ctx.outputs;
}
Eigen::VectorXd ModelParamsSimValue::evaluate(const std::vector<std::uint8_t>& in_subset,
                                              int q, int d) const {
    return impl_->evaluate(in_subset, q, d);
}

} // namespace svpkg
