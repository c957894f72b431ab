#include "lg/pathway.hpp"

#include "common/error.hpp"

namespace svpkg {

PathwayCoefficients::PathwayCoefficients(const LinearGaussianModel& model,
                                         const PolicySpec& policy)
    : n_(model.n), horizon_(model.horizon) {
    require(!policy.clamp_nonnegative, ErrorCode::InvalidArgument,
            "pathway coefficients require a linear (unclamped) policy");
    identity_ = Eigen::MatrixXd::Identity(n_, n_);
    zero_ = Eigen::MatrixXd::Zero(n_, n_);
    closed_loop_.reserve(static_cast<std::size_t>(horizon_ - 1));
    for (int t = 1; t <= horizon_ - 1; ++t)
        closed_loop_.push_back(model.beta_s[static_cast<std::size_t>(t - 1)].transpose() +
                               model.beta_a[static_cast<std::size_t>(t - 1)].transpose() *
                                   policy.theta[static_cast<std::size_t>(t - 1)].transpose());
    // table_[index(i,t)] holds R_{i,t} for t >= i (entries t = i-1 are the
    // identity, t < i-1 zero; both served from the shared constants).
    table_.assign(static_cast<std::size_t>(horizon_) * horizon_, Eigen::MatrixXd());
    for (int i = 1; i <= horizon_ - 1; ++i) {
        Eigen::MatrixXd running = identity_;
        for (int t = i; t <= horizon_ - 1; ++t) {
            running = closed_loop(t) * running;
            table_[static_cast<std::size_t>(index(i, t))] = running;
        }
    }
}

long PathwayCoefficients::index(int i, int t) const {
    return static_cast<long>(i - 1) * horizon_ + t;
}

const Eigen::MatrixXd& PathwayCoefficients::block(int i, int t) const {
    require(i >= 1 && i <= horizon_ && t >= 0 && t <= horizon_ - 1,
            ErrorCode::InvalidArgument, "pathway index out of range");
    if (t == i - 1) return identity_;
    if (t < i - 1) return zero_;
    return table_[static_cast<std::size_t>(index(i, t))];
}

Eigen::MatrixXd pathway_product_direct(const LinearGaussianModel& model,
                                       const PolicySpec& policy, int i, int t) {
    const int n = model.n;
    if (t == i - 1) return Eigen::MatrixXd::Identity(n, n);
    if (t < i - 1) return Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd product = Eigen::MatrixXd::Identity(n, n);
    for (int j = i; j <= t; ++j) {
        Eigen::MatrixXd gain = model.beta_s[static_cast<std::size_t>(j - 1)].transpose() +
                               model.beta_a[static_cast<std::size_t>(j - 1)].transpose() *
                                   policy.theta[static_cast<std::size_t>(j - 1)].transpose();
        product = gain * product;
    }
    return product;
}

RewardProjection reward_projection(const LinearGaussianModel& model, const PolicySpec& policy,
                                   const RewardSpec& reward) {
    require(reward.form == RewardSpec::Form::Linear, ErrorCode::InvalidArgument,
            "reward projection requires the linear reward form");
    const int H = model.horizon;
    RewardProjection proj;
    proj.alpha.reserve(static_cast<std::size_t>(H));
    proj.offset.reserve(static_cast<std::size_t>(H));
    for (int t = 1; t <= H; ++t) {
        const auto& c = reward.state_coeff[static_cast<std::size_t>(t - 1)];
        double offset = reward.offset[static_cast<std::size_t>(t - 1)];
        Eigen::RowVectorXd alpha = c.transpose();
        if (t <= H - 1) {
            const auto& b = reward.action_coeff[static_cast<std::size_t>(t - 1)];
            alpha += b.transpose() * policy.theta[static_cast<std::size_t>(t - 1)].transpose();
            offset += b.dot(model.mu_a[static_cast<std::size_t>(t - 1)]);
        }
        offset += c.dot(model.mu_s[static_cast<std::size_t>(t - 1)]);
        proj.alpha.push_back(std::move(alpha));
        proj.offset.push_back(offset);
    }
    return proj;
}

} // namespace svpkg
