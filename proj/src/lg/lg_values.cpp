#include "lg/lg_values.hpp"

#include "common/error.hpp"
#include "common/rng.hpp"
#include "lg/closed_form.hpp"
#include "lg/covariance_engine.hpp"
#include "lg/pathway.hpp"

namespace svpkg {

namespace {

constexpr std::uint64_t kTagLgModelOuter = 0x6c676d6full;
constexpr std::uint64_t kTagLgModelInner = 0x6c676d69ull;

void check_lg_analytic(const ProcessInstance& instance) {
    require(instance.family == ProcessInstance::Family::LinearGaussian,
            ErrorCode::InvalidArgument, "analytic value functions need a linear Gaussian model");
    require(instance.reward.form == RewardSpec::Form::Linear, ErrorCode::InvalidArgument,
            "analytic value functions need the linear reward form");
    require(!instance.policy.clamp_nonnegative, ErrorCode::InvalidArgument,
            "analytic value functions need an unclamped policy");
}

} // namespace

// ---------------------------------------------------------------------------
// LgPolicyValue

struct LgPolicyValue::Impl {
    const ProcessInstance* inst;
    LgValueOptions opts;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<LinearGaussianModel> members;

    Impl(const ProcessInstance& instance, LgValueOptions options)
        : inst(&instance), opts(options),
          inputs(policy_parameter_labels(instance.horizon, instance.state_names,
                                         instance.action_names)),
          outputs(state_output_labels(instance.horizon, instance.state_names)) {
        check_lg_analytic(instance);
        for (const auto& w : instance.posterior.lg_samples)
            members.push_back(apply_sample(instance.lg, w));
    }

    PolicySpec masked_policy(const std::vector<std::uint8_t>& in_subset) const {
        PolicySpec masked = inst->policy.zeroed();
        const int n = inst->lg.n;
        const int m = inst->lg.m;
        long idx = 0;
        for (int t = 0; t < inst->horizon - 1; ++t)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j, ++idx)
                    if (in_subset[static_cast<std::size_t>(idx)])
                        masked.theta[static_cast<std::size_t>(t)](i, j) =
                            inst->policy.theta[static_cast<std::size_t>(t)](i, j);
        return masked;
    }

    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q) const {
        const auto& model = members[static_cast<std::size_t>(q) % members.size()];
        PolicySpec masked = masked_policy(in_subset);
        if (opts.mode == ValueMode::Expectation)
            return opts.reuse ? lg_expected_outputs(model, masked, inst->reward)
                              : lg_expected_outputs_noreuse(model, masked, inst->reward);
        return opts.reuse ? lg_variance_outputs(model, masked, inst->reward)
                          : lg_variance_outputs_noreuse(model, masked, inst->reward);
    }
};

LgPolicyValue::LgPolicyValue(const ProcessInstance& instance, LgValueOptions options)
    : impl_(std::make_unique<Impl>(instance, options)) {}
LgPolicyValue::~LgPolicyValue() = default;
int LgPolicyValue::input_count() const { return static_cast<int>(impl_->inputs.size()); }
const std::vector<std::string>& LgPolicyValue::input_labels() const { return impl_->inputs; }
const std::vector<std::string>& LgPolicyValue::output_labels() const {
    return impl_->outputs;
}
Eigen::VectorXd LgPolicyValue::evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                                        int) const {
    return impl_->evaluate(in_subset, q);
}

// ---------------------------------------------------------------------------
// LgModelValue

struct LgModelValue::Impl {
    const ProcessInstance* inst;
    LgModelValueOptions opts;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    int ensemble_size;
    std::vector<Eigen::VectorXd> member_vectors;
    Eigen::VectorXd pinned_values;

    static Eigen::VectorXd flatten(const LgParameterSample& w) {
        long count = 0;
        for (const auto& b : w.beta_s) count += b.size();
        for (const auto& b : w.beta_a) count += b.size();
        Eigen::VectorXd v(count);
        long pos = 0;
        for (std::size_t t = 0; t < w.beta_s.size(); ++t) {
            for (long i = 0; i < w.beta_s[t].rows(); ++i)
                for (long j = 0; j < w.beta_s[t].cols(); ++j) v[pos++] = w.beta_s[t](i, j);
            for (long i = 0; i < w.beta_a[t].rows(); ++i)
                for (long j = 0; j < w.beta_a[t].cols(); ++j) v[pos++] = w.beta_a[t](i, j);
        }
        return v;
    }

    LinearGaussianModel assemble(const Eigen::VectorXd& v) const {
        LgParameterSample w = inst->posterior.lg_samples.front();
        long pos = 0;
        for (std::size_t t = 0; t < w.beta_s.size(); ++t) {
            for (long i = 0; i < w.beta_s[t].rows(); ++i)
                for (long j = 0; j < w.beta_s[t].cols(); ++j) w.beta_s[t](i, j) = v[pos++];
            for (long i = 0; i < w.beta_a[t].rows(); ++i)
                for (long j = 0; j < w.beta_a[t].cols(); ++j) w.beta_a[t](i, j) = v[pos++];
        }
        return apply_sample(inst->lg, w);
    }

    Impl(const ProcessInstance& instance, LgModelValueOptions options)
        : inst(&instance), opts(options),
          outputs(state_output_labels(instance.horizon, instance.state_names)) {
        check_lg_analytic(instance);
        ensemble_size = instance.posterior.size();
        inputs = model_parameter_labels_lg(instance);
        for (const auto& w : instance.posterior.lg_samples)
            member_vectors.push_back(flatten(w));
        pinned_values = flatten(lg_ensemble_mean(instance.posterior));
        if (opts.exhaustive) {
            opts.outer = ensemble_size;
            opts.inner = ensemble_size;
        }
        require(opts.with_replacement || opts.exhaustive || opts.outer <= ensemble_size,
                ErrorCode::EnsembleTooSmall,
                "requested outer draws exceed the ensemble size without replacement");
    }

    static std::vector<std::string> model_parameter_labels_lg(const ProcessInstance& inst) {
        std::vector<std::string> labels;
        const int n = inst.lg.n;
        const int m = inst.lg.m;
        for (int t = 1; t <= inst.horizon - 1; ++t) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    labels.push_back("w[t=" + std::to_string(t) + ",bs(" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     ")]");
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    labels.push_back("w[t=" + std::to_string(t) + ",ba(" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     ")]");
        }
        return labels;
    }

    int pick_member(std::uint64_t tag, int d, int slot, int stage) const {
        if (opts.exhaustive) return slot;
        Rng rng = Rng::substream(opts.seed, tag, static_cast<std::uint64_t>(d),
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

    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int d) const {
        const long n_out = static_cast<long>(outputs.size());
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(n_out);
        if (opts.mode == ValueMode::Expectation) {
            for (int o = 0; o < opts.outer; ++o) {
                const int member = pick_member(kTagLgModelOuter, d, o, 0);
                LinearGaussianModel model = assemble(compose(
                    in_subset, pinned_values, member_vectors[static_cast<std::size_t>(member)]));
                acc += lg_expected_outputs(model, inst->policy, inst->reward);
            }
            return acc / static_cast<double>(opts.outer);
        }
        const int inner_count = opts.exhaustive ? ensemble_size : opts.inner;
        require(inner_count >= 1, ErrorCode::ConfigError, "inner draw count must be >= 1");
        for (int o = 0; o < opts.outer; ++o) {
            const int outer_member = pick_member(kTagLgModelOuter, d, o, 0);
            Eigen::VectorXd var_mean = Eigen::VectorXd::Zero(n_out);
            Eigen::VectorXd e_sum = Eigen::VectorXd::Zero(n_out);
            Eigen::VectorXd e_sumsq = Eigen::VectorXd::Zero(n_out);
            for (int i = 0; i < inner_count; ++i) {
                const int inner_member =
                    opts.exhaustive ? i : pick_member(kTagLgModelInner, d, o, i + 1);
                LinearGaussianModel model = assemble(
                    compose(in_subset, member_vectors[static_cast<std::size_t>(inner_member)],
                            member_vectors[static_cast<std::size_t>(outer_member)]));
                var_mean += lg_variance_outputs(model, inst->policy, inst->reward);
                Eigen::VectorXd mean = lg_expected_outputs(model, inst->policy, inst->reward);
                e_sum += mean;
                e_sumsq += mean.cwiseProduct(mean);
            }
            acc += var_mean / static_cast<double>(inner_count);
            if (inner_count >= 2) {
                Eigen::VectorXd centered =
                    e_sumsq - e_sum.cwiseProduct(e_sum) / static_cast<double>(inner_count);
                acc += (centered / static_cast<double>(inner_count - 1)).cwiseMax(0.0);
            }
        }
        return acc / static_cast<double>(opts.outer);
    }
};

LgModelValue::LgModelValue(const ProcessInstance& instance, LgModelValueOptions options)
    : impl_(std::make_unique<Impl>(instance, options)) {}
LgModelValue::~LgModelValue() = default;
int LgModelValue::input_count() const { return static_cast<int>(impl_->inputs.size()); }
const std::vector<std::string>& LgModelValue::input_labels() const { return impl_->inputs; }
const std::vector<std::string>& LgModelValue::output_labels() const {
    return impl_->outputs;
}
Eigen::VectorXd LgModelValue::evaluate(const std::vector<std::uint8_t>& in_subset, int,
                                       int d) const {
    return impl_->evaluate(in_subset, d);
}

// ---------------------------------------------------------------------------
// LgRandomFactorsValue

struct LgRandomFactorsValue::Impl {
    const ProcessInstance* inst;
    LgRandomFactorOptions opts;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    // per posterior member: base outputs and per-(input, output) pinned
    // contributions (expectation mode), or the per-output quadratic-form
    // matrices M(l1, l2) = rho_l1 V_l1l2 rho_l2 (variance mode)
    std::vector<Eigen::VectorXd> base;
    std::vector<Eigen::MatrixXd> contribution;          // inputs x outputs per member
    std::vector<std::vector<Eigen::MatrixXd>> quad;     // [member][output] dim x dim

    Impl(const ProcessInstance& instance, LgRandomFactorOptions options)
        : inst(&instance), opts(options),
          inputs(random_factor_labels(instance.horizon, instance.state_names)),
          outputs(state_output_labels(instance.horizon, instance.state_names)) {
        check_lg_analytic(instance);
        const int n = instance.lg.n;
        const int H = instance.horizon;
        const long dim = static_cast<long>(H) * n;
        const Eigen::MatrixXd v_full = instance.lg.residual_covariance();
        const Eigen::VectorXd stds = v_full.diagonal().cwiseMax(0.0).cwiseSqrt();
        for (const auto& w : instance.posterior.lg_samples) {
            LinearGaussianModel member = apply_sample(instance.lg, w);
            PathwayCoefficients paths(member, instance.policy);
            RewardProjection proj = reward_projection(member, instance.policy, inst->reward);
            if (opts.mode == ValueMode::Expectation) {
                base.push_back(lg_expected_outputs(member, instance.policy, inst->reward));
                Eigen::MatrixXd contrib =
                    Eigen::MatrixXd::Zero(dim, static_cast<long>(outputs.size()));
                for (int h = 1; h <= H; ++h)
                    for (int k = 0; k < n; ++k) {
                        const long input = static_cast<long>(h - 1) * n + k;
                        const double pinned = opts.lambda * stds[input];
                        Eigen::RowVectorXd j_row = Eigen::RowVectorXd::Zero(n);
                        for (int t = h - 1; t <= H - 1; ++t) {
                            const Eigen::MatrixXd& r = paths.block(h, t);
                            contrib.block(input, static_cast<long>(t) * n, 1, n) =
                                (r.col(k) * pinned).transpose();
                            j_row += proj.row(t + 1) * r;
                        }
                        contrib(input, static_cast<long>(H) * n) = j_row[k] * pinned;
                    }
                contribution.push_back(std::move(contrib));
            } else {
                // coefficient rows per output over the stacked residuals
                std::vector<Eigen::MatrixXd> per_output;
                Eigen::MatrixXd coef =
                    Eigen::MatrixXd::Zero(static_cast<long>(outputs.size()), dim);
                for (int t = 0; t <= H - 1; ++t)
                    for (int i = 1; i <= t + 1; ++i) {
                        const Eigen::MatrixXd& r = paths.block(i, t);
                        coef.block(static_cast<long>(t) * n,
                                   static_cast<long>(i - 1) * n, n, n) = r;
                        coef.block(dim, static_cast<long>(i - 1) * n, 1, n) +=
                            proj.row(t + 1) * r;
                    }
                for (long out = 0; out < coef.rows(); ++out) {
                    Eigen::VectorXd rho = coef.row(out).transpose();
                    per_output.push_back((rho * rho.transpose()).cwiseProduct(v_full));
                }
                quad.push_back(std::move(per_output));
            }
        }
    }

    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q) const {
        const int member = q % inst->posterior.size();
        const long n_out = static_cast<long>(outputs.size());
        if (opts.mode == ValueMode::Expectation) {
            Eigen::VectorXd value = base[static_cast<std::size_t>(member)];
            const auto& contrib = contribution[static_cast<std::size_t>(member)];
            for (long i = 0; i < contrib.rows(); ++i)
                if (in_subset[static_cast<std::size_t>(i)]) value += contrib.row(i).transpose();
            return value;
        }
        Eigen::VectorXd value(n_out);
        const auto& mats = quad[static_cast<std::size_t>(member)];
        const long dim = mats.front().rows();
        for (long out = 0; out < n_out; ++out) {
            double acc = 0.0;
            const Eigen::MatrixXd& m = mats[static_cast<std::size_t>(out)];
            for (long i = 0; i < dim; ++i) {
                if (!in_subset[static_cast<std::size_t>(i)]) continue;
                for (long j = 0; j < dim; ++j)
                    if (in_subset[static_cast<std::size_t>(j)]) acc += m(i, j);
            }
            value[out] = acc;
        }
        return value;
    }
};

LgRandomFactorsValue::LgRandomFactorsValue(const ProcessInstance& instance,
                                           LgRandomFactorOptions options)
    : impl_(std::make_unique<Impl>(instance, options)) {}
LgRandomFactorsValue::~LgRandomFactorsValue() = default;
int LgRandomFactorsValue::input_count() const {
    return static_cast<int>(impl_->inputs.size());
}
const std::vector<std::string>& LgRandomFactorsValue::input_labels() const {
    return impl_->inputs;
}
const std::vector<std::string>& LgRandomFactorsValue::output_labels() const {
    return impl_->outputs;
}
Eigen::VectorXd LgRandomFactorsValue::evaluate(const std::vector<std::uint8_t>& in_subset,
                                               int q, int) const {
    return impl_->evaluate(in_subset, q);
}

} // namespace svpkg
