#include "lg/covariance_engine.hpp"

#include "common/error.hpp"

namespace svpkg {

namespace {

/// Residual cross-covariance block Cov(e_i, e_j), with Cov involving the
/// nonexistent e_0 defined as zero (it always meets the R_{0,0} = 0 factor).
struct ResidualBlocks {
    int n;
    int horizon;
    Eigen::MatrixXd full;
    Eigen::MatrixXd zero;

    ResidualBlocks(const LinearGaussianModel& model)
        : n(model.n), horizon(model.horizon), full(model.residual_covariance()),
          zero(Eigen::MatrixXd::Zero(model.n, model.n)) {}

    Eigen::MatrixXd block(int i, int j) const {
        if (i < 1 || j < 1) return zero;
        return full.block((i - 1) * n, (j - 1) * n, n, n);
    }
};

} // namespace

CovarianceTable covariance_engine(const LinearGaussianModel& model, const PolicySpec& policy,
                                  const RewardSpec& reward) {
    const int n = model.n;
    const int H = model.horizon;
    const ResidualBlocks residual(model);
    PathwayCoefficients paths(model, policy);

    CovarianceTable table;
    table.n = n;
    table.horizon = H;
    table.blocks.assign(static_cast<std::size_t>(H) * H, Eigen::MatrixXd::Zero(n, n));

    // Three running accumulators per ordered pair (a, b) = (t1+1, t2+1):
    //   A1(a,b) = sum_{i<a} sum_{j<b} R_{i,a-1} Cov(e_i, e_j) R_{j,b-1}^T
    //   A2(a,b) = sum_{i<a} R_{i,a-1} Cov(e_i, e_b)
    //   A3(a,b) = sum_{j<b} Cov(e_a, e_j) R_{j,b-1}^T
    // The upper triangle (a <= b) is filled in order; lower-triangle lookups
    // use the cross symmetries A1(b,a) = A1(a,b)^T, A2(b,a) = A3(a,b)^T and
    // A3(b,a) = A2(a,b)^T.
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);
    std::vector<Eigen::MatrixXd> a1(static_cast<std::size_t>(H + 1) * (H + 1), zero);
    std::vector<Eigen::MatrixXd> a2(a1), a3(a1);
    auto at = [H](std::vector<Eigen::MatrixXd>& store, int a, int b) -> Eigen::MatrixXd& {
        return store[static_cast<std::size_t>(a) * (H + 1) + b];
    };
    auto upper1 = [&](int a, int b) -> Eigen::MatrixXd {
        if (a <= b) return at(a1, a, b);
        return at(a1, b, a).transpose();
    };
    auto upper2 = [&](int a, int b) -> Eigen::MatrixXd {
        if (a <= b) return at(a2, a, b);
        return at(a3, b, a).transpose();
    };
    auto upper3 = [&](int a, int b) -> Eigen::MatrixXd {
        if (a <= b) return at(a3, a, b);
        return at(a2, b, a).transpose();
    };

    for (int t2 = 0; t2 <= H - 1; ++t2) {
        for (int t1 = 0; t1 <= t2; ++t1) {
            const int a = t1 + 1;
            const int b = t2 + 1;
            // R_{t,t} is the single-period gain B_t; R_{0,0} = 0.
            const bool have_b_gain = t2 >= 1;
            const bool have_a_gain = t1 >= 1;
            if (have_b_gain) {
                const Eigen::MatrixXd& gain_b = paths.closed_loop(t2);
                at(a1, a, b) = (upper1(a, t2) + upper2(a, t2)) * gain_b.transpose();
                at(a3, a, b) = (upper3(a, t2) + residual.block(a, t2)) * gain_b.transpose();
            } else {
                at(a1, a, b).setZero();
                at(a3, a, b).setZero();
            }
            if (have_a_gain) {
                const Eigen::MatrixXd& gain_a = paths.closed_loop(t1);
                at(a2, a, b) = gain_a * (upper2(t1, b) + residual.block(t1, b));
            } else {
                at(a2, a, b).setZero();
            }
            Eigen::MatrixXd cov = at(a1, a, b) + at(a2, a, b) + at(a3, a, b) +
                                  residual.block(a, b);
            table.blocks[static_cast<std::size_t>((a - 1) * H + (b - 1))] = cov;
            if (a != b)
                table.blocks[static_cast<std::size_t>((b - 1) * H + (a - 1))] =
                    cov.transpose();
        }
    }

    if (reward.form == RewardSpec::Form::Linear) {
        RewardProjection proj = reward_projection(model, policy, reward);
        double total = 0.0;
        for (int a = 1; a <= H; ++a) {
            total += (proj.row(a) * table.cov(a, a) * proj.row(a).transpose())(0, 0);
            for (int b = a + 1; b <= H; ++b)
                total += 2.0 * (proj.row(a) * table.cov(a, b) * proj.row(b).transpose())(0, 0);
        }
        table.cumulative_reward_variance = total;
    }
    return table;
}

Eigen::MatrixXd covariance_direct(const LinearGaussianModel& model,
                                  const PathwayCoefficients& paths, int t1, int t2) {
    const int n = model.n;
    const ResidualBlocks residual(model);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i <= t1; ++i)
        for (int j = 1; j <= t2; ++j)
            cov += paths.block(i, t1) * residual.block(i, j) * paths.block(j, t2).transpose();
    for (int i = 1; i <= t1; ++i) cov += paths.block(i, t1) * residual.block(i, t2 + 1);
    for (int j = 1; j <= t2; ++j) cov += residual.block(t1 + 1, j) * paths.block(j, t2).transpose();
    cov += residual.block(t1 + 1, t2 + 1);
    return cov;
}

double cumulative_reward_variance_direct(const LinearGaussianModel& model,
                                         const PolicySpec& policy,
                                         const RewardSpec& reward) {
    const int H = model.horizon;
    PathwayCoefficients paths(model, policy);
    RewardProjection proj = reward_projection(model, policy, reward);
    double total = 0.0;
    for (int t1 = 0; t1 <= H - 1; ++t1)
        for (int t2 = 0; t2 <= H - 1; ++t2) {
            Eigen::MatrixXd cov = covariance_direct(model, paths, t1, t2);
            total += (proj.row(t1 + 1) * cov * proj.row(t2 + 1).transpose())(0, 0);
        }
    return total;
}

double cumulative_reward_variance_noreuse(const LinearGaussianModel& model,
                                          const PolicySpec& policy,
                                          const RewardSpec& reward) {
    const int H = model.horizon;
    const ResidualBlocks residual(model);
    RewardProjection proj = reward_projection(model, policy, reward);
    double total = 0.0;
    for (int t1 = 0; t1 <= H - 1; ++t1) {
        for (int t2 = 0; t2 <= H - 1; ++t2) {
            Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(model.n, model.n);
            for (int i = 1; i <= t1; ++i)
                for (int j = 1; j <= t2; ++j)
                    cov += pathway_product_direct(model, policy, i, t1) *
                           residual.block(i, j) *
                           pathway_product_direct(model, policy, j, t2).transpose();
            for (int i = 1; i <= t1; ++i)
                cov += pathway_product_direct(model, policy, i, t1) *
                       residual.block(i, t2 + 1);
            for (int j = 1; j <= t2; ++j)
                cov += residual.block(t1 + 1, j) *
                       pathway_product_direct(model, policy, j, t2).transpose();
            cov += residual.block(t1 + 1, t2 + 1);
            total += (proj.row(t1 + 1) * cov * proj.row(t2 + 1).transpose())(0, 0);
        }
    }
    return total;
}

} // namespace svpkg
