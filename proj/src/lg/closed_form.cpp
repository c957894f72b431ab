#include "lg/closed_form.hpp"

#include <cmath>

#include "common/error.hpp"
#include "sv/instance.hpp"

namespace svpkg {

namespace {

/// Per-output coefficient rows against the stacked residual vector
/// X = (e_1, ..., e_H): row for s^j_{t+1} holds R_{i,t}(j, :) at block i
/// (identity at i = t+1); the row for J is sum_t alpha_{t+1} R_{i,t}.
/// Output order matches state_output_labels: states period-major, then J.
Eigen::MatrixXd stacked_output_coefficients(const LinearGaussianModel& model,
                                            const PathwayCoefficients& paths,
                                            const RewardProjection& proj) {
    const int n = model.n;
    const int H = model.horizon;
    const long dim = static_cast<long>(H) * n;
    Eigen::MatrixXd coef = Eigen::MatrixXd::Zero(dim + 1, dim);
    for (int t = 0; t <= H - 1; ++t) {
        for (int i = 1; i <= t + 1; ++i) {
            const Eigen::MatrixXd& r = paths.block(i, t);
            // rows for s_{t+1} components
            coef.block(static_cast<long>(t) * n, static_cast<long>(i - 1) * n, n, n) = r;
            // J row
            coef.block(dim, static_cast<long>(i - 1) * n, 1, n) += proj.row(t + 1) * r;
        }
    }
    return coef;
}

SVReport make_report(const LinearGaussianModel& model, std::uint64_t seed,
                     const std::string& method) {
    SVReport report;
    auto names = default_state_names(model.n);
    report.input_labels = random_factor_labels(model.horizon, names);
    report.output_labels = state_output_labels(model.horizon, names);
    report.sv = Eigen::MatrixXd::Zero(report.input_count(), report.output_count());
    report.mc_variance = Eigen::MatrixXd::Zero(report.input_count(), report.output_count());
    report.value_full = Eigen::VectorXd::Zero(report.output_count());
    report.value_empty = Eigen::VectorXd::Zero(report.output_count());
    report.efficiency_residual = Eigen::VectorXd::Zero(report.output_count());
    report.seed = seed;
    report.method = method;
    return report;
}

} // namespace

Eigen::VectorXd lg_expected_outputs(const LinearGaussianModel& model,
                                    const PolicySpec& policy, const RewardSpec& reward) {
    const int n = model.n;
    const int H = model.horizon;
    RewardProjection proj = reward_projection(model, policy, reward);
    Eigen::VectorXd out(static_cast<long>(H) * n + 1);
    Eigen::VectorXd deviation = model.s0 - model.mu_s.front(); // s0 - mu_s[1]
    double j_acc = 0.0;
    // t = 0 term: R_{1,0} = I
    Eigen::VectorXd propagated = deviation;
    for (int t = 0; t <= H - 1; ++t) {
        if (t >= 1) {
            Eigen::MatrixXd gain =
                model.beta_s[static_cast<std::size_t>(t - 1)].transpose() +
                model.beta_a[static_cast<std::size_t>(t - 1)].transpose() *
                    policy.theta[static_cast<std::size_t>(t - 1)].transpose();
            propagated = gain * propagated; // R_{1,t} (s0 - mu_s[1])
        }
        Eigen::VectorXd mean_state = model.mu_s[static_cast<std::size_t>(t)] + propagated;
        out.segment(static_cast<long>(t) * n, n) = mean_state;
        j_acc += proj.offset[static_cast<std::size_t>(t)] + proj.row(t + 1).dot(propagated);
    }
    out[static_cast<long>(H) * n] = j_acc;
    return out;
}

Eigen::VectorXd lg_expected_outputs_noreuse(const LinearGaussianModel& model,
                                            const PolicySpec& policy,
                                            const RewardSpec& reward) {
    const int n = model.n;
    const int H = model.horizon;
    RewardProjection proj = reward_projection(model, policy, reward);
    Eigen::VectorXd out(static_cast<long>(H) * n + 1);
    Eigen::VectorXd deviation = model.s0 - model.mu_s.front();
    double j_acc = 0.0;
    for (int t = 0; t <= H - 1; ++t) {
        Eigen::VectorXd propagated =
            pathway_product_direct(model, policy, 1, t) * deviation;
        out.segment(static_cast<long>(t) * n, n) =
            model.mu_s[static_cast<std::size_t>(t)] + propagated;
        j_acc += proj.offset[static_cast<std::size_t>(t)] + proj.row(t + 1).dot(propagated);
    }
    out[static_cast<long>(H) * n] = j_acc;
    return out;
}

Eigen::VectorXd lg_variance_outputs(const LinearGaussianModel& model,
                                    const PolicySpec& policy, const RewardSpec& reward) {
    const int n = model.n;
    const int H = model.horizon;
    CovarianceTable table = covariance_engine(model, policy, reward);
    Eigen::VectorXd out(static_cast<long>(H) * n + 1);
    for (int t = 1; t <= H; ++t)
        out.segment(static_cast<long>(t - 1) * n, n) = table.state_variance(t);
    out[static_cast<long>(H) * n] = table.cumulative_reward_variance;
    return out;
}

Eigen::VectorXd lg_variance_outputs_noreuse(const LinearGaussianModel& model,
                                            const PolicySpec& policy,
                                            const RewardSpec& reward) {
    const int n = model.n;
    const int H = model.horizon;
    const Eigen::MatrixXd full = model.residual_covariance();
    auto residual_block = [&](int i, int j) -> Eigen::MatrixXd {
        if (i < 1 || j < 1) return Eigen::MatrixXd::Zero(n, n);
        return full.block((i - 1) * n, (j - 1) * n, n, n);
    };
    auto covariance_noreuse = [&](int t1, int t2) {
        Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n, n);
        for (int i = 1; i <= t1; ++i)
            for (int j = 1; j <= t2; ++j)
                cov += pathway_product_direct(model, policy, i, t1) * residual_block(i, j) *
                       pathway_product_direct(model, policy, j, t2).transpose();
        for (int i = 1; i <= t1; ++i)
            cov += pathway_product_direct(model, policy, i, t1) * residual_block(i, t2 + 1);
        for (int j = 1; j <= t2; ++j)
            cov += residual_block(t1 + 1, j) *
                   pathway_product_direct(model, policy, j, t2).transpose();
        cov += residual_block(t1 + 1, t2 + 1);
        return cov;
    };
    Eigen::VectorXd out(static_cast<long>(H) * n + 1);
    for (int t = 0; t <= H - 1; ++t)
        out.segment(static_cast<long>(t) * n, n) = covariance_noreuse(t, t).diagonal();
    RewardProjection proj = reward_projection(model, policy, reward);
    double total = 0.0;
    for (int t1 = 0; t1 <= H - 1; ++t1)
        for (int t2 = 0; t2 <= H - 1; ++t2)
            total += (proj.row(t1 + 1) * covariance_noreuse(t1, t2) *
                      proj.row(t2 + 1).transpose())(0, 0);
    out[static_cast<long>(H) * n] = total;
    return out;
}

SVReport sv_random_predictive_exact(const LinearGaussianModel& model,
                                    const PolicySpec& policy, const RewardSpec& reward,
                                    const PosteriorEnsemble& posterior, double lambda,
                                    std::uint64_t seed) {
    require(posterior.kind == PosteriorEnsemble::Kind::LinearGaussian,
            ErrorCode::InvalidArgument, "linear Gaussian posterior required");
    const int n = model.n;
    const int H = model.horizon;
    SVReport report = make_report(model, seed, "closed-form-predictive");
    const Eigen::VectorXd stds =
        model.residual_covariance().diagonal().cwiseMax(0.0).cwiseSqrt();

    const int q_count = posterior.size();
    for (const auto& w : posterior.lg_samples) {
        LinearGaussianModel member = apply_sample(model, w);
        PathwayCoefficients paths(member, policy);
        RewardProjection proj = reward_projection(member, policy, reward);
        for (int h = 1; h <= H; ++h) {
            for (int k = 0; k < n; ++k) {
                const long input = static_cast<long>(h - 1) * n + k;
                const double pinned = lambda * stds[input];
                Eigen::RowVectorXd j_row = Eigen::RowVectorXd::Zero(n);
                for (int t = h - 1; t <= H - 1; ++t) {
                    const Eigen::MatrixXd& r = paths.block(h, t);
                    report.sv.block(input, static_cast<long>(t) * n, 1, n) +=
                        (r.col(k) * pinned).transpose();
                    j_row += proj.row(t + 1) * r;
                }
                report.sv(input, static_cast<long>(H) * n) += j_row[k] * pinned;
            }
        }
        report.value_empty += lg_expected_outputs(member, policy, reward);
        // g(O): the deterministic path with every residual at its pinned value.
        Eigen::MatrixXd pinned_residuals(H, n);
        for (int t = 0; t < H; ++t)
            for (int k = 0; k < n; ++k)
                pinned_residuals(t, k) = lambda * stds[static_cast<long>(t) * n + k];
        Trajectory pinned_traj =
            simulate_linear_gaussian(member, policy, reward, pinned_residuals);
        for (int t = 0; t < H; ++t)
            report.value_full.segment(static_cast<long>(t) * n, n) +=
                pinned_traj.states.row(t).transpose();
        report.value_full[static_cast<long>(H) * n] += pinned_traj.rewards.sum();
    }
    report.sv /= static_cast<double>(q_count);
    report.value_empty /= static_cast<double>(q_count);
    report.value_full /= static_cast<double>(q_count);
    for (int j = 0; j < report.output_count(); ++j)
        report.efficiency_residual[j] = std::abs(
            report.sv.col(j).sum() - (report.value_full[j] - report.value_empty[j]));
    report.q_count = q_count;
    report.d_count = 0;
    return report;
}

SVReport sv_random_variance_exact(const LinearGaussianModel& model, const PolicySpec& policy,
                                  const RewardSpec& reward,
                                  const PosteriorEnsemble& posterior, std::uint64_t seed) {
    require(posterior.kind == PosteriorEnsemble::Kind::LinearGaussian,
            ErrorCode::InvalidArgument, "linear Gaussian posterior required");
    const int H = model.horizon;
    const int n = model.n;
    SVReport report = make_report(model, seed, "closed-form-variance");
    const Eigen::MatrixXd v_full = model.residual_covariance();

    const int q_count = posterior.size();
    for (const auto& w : posterior.lg_samples) {
        LinearGaussianModel member = apply_sample(model, w);
        PathwayCoefficients paths(member, policy);
        RewardProjection proj = reward_projection(member, policy, reward);
        Eigen::MatrixXd coef = stacked_output_coefficients(member, paths, proj);
        for (long out = 0; out < coef.rows(); ++out) {
            Eigen::VectorXd rho = coef.row(out).transpose();
            Eigen::VectorXd v_rho = v_full * rho;
            report.sv.col(out) += rho.cwiseProduct(v_rho);
            report.value_full[out] += rho.dot(v_rho); // total output variance
        }
    }
    report.sv /= static_cast<double>(q_count);
    report.value_full /= static_cast<double>(q_count);
    report.value_empty.setZero();
    for (int j = 0; j < report.output_count(); ++j)
        report.efficiency_residual[j] =
            std::abs(report.sv.col(j).sum() - report.value_full[j]);
    report.q_count = q_count;
    report.d_count = 0;
    return report;
}

} // namespace svpkg
