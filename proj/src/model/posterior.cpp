#include "model/posterior.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace svpkg {

void PosteriorEnsemble::validate() const {
    require(size() >= 1, ErrorCode::ConfigError, "posterior ensemble must be nonempty");
    for (const auto& w : kinetic_samples) {
        require(w.r_L >= 0.0 && w.r_L <= 1.0, ErrorCode::ConfigError,
                "ensemble r_L outside [0, 1]");
        require(w.m_s >= 0.0 && w.beta_LCmax >= 0.0 && w.mu_max >= 0.0,
                ErrorCode::ConfigError, "ensemble rate parameters must be nonnegative");
    }
}

LinearGaussianModel apply_sample(const LinearGaussianModel& base, const LgParameterSample& w) {
    LinearGaussianModel out = base;
    require(w.beta_s.size() == base.beta_s.size() && w.beta_a.size() == base.beta_a.size(),
            ErrorCode::InvalidArgument, "sample period count mismatch");
    out.beta_s = w.beta_s;
    out.beta_a = w.beta_a;
    return out;
}

KineticModel apply_sample(const KineticModel& base, const KineticParameterSample& w) {
    KineticModel out = base;
    out.m_s = w.m_s;
    out.r_L = w.r_L;
    out.beta_LCmax = w.beta_LCmax;
    out.mu_max = w.mu_max;
    return out;
}

LgParameterSample lg_ensemble_mean(const PosteriorEnsemble& ensemble) {
    require(ensemble.kind == PosteriorEnsemble::Kind::LinearGaussian &&
                !ensemble.lg_samples.empty(),
            ErrorCode::InvalidArgument, "linear Gaussian ensemble required");
    LgParameterSample mean = ensemble.lg_samples.front();
    for (auto& b : mean.beta_s) b.setZero();
    for (auto& b : mean.beta_a) b.setZero();
    for (const auto& w : ensemble.lg_samples) {
        for (std::size_t t = 0; t < mean.beta_s.size(); ++t) {
            mean.beta_s[t] += w.beta_s[t];
            mean.beta_a[t] += w.beta_a[t];
        }
    }
    const double inv = 1.0 / ensemble.lg_samples.size();
    for (auto& b : mean.beta_s) b *= inv;
    for (auto& b : mean.beta_a) b *= inv;
    return mean;
}

KineticParameterSample kinetic_ensemble_mean(const PosteriorEnsemble& ensemble) {
    require(ensemble.kind == PosteriorEnsemble::Kind::Kinetic &&
                !ensemble.kinetic_samples.empty(),
            ErrorCode::InvalidArgument, "kinetic ensemble required");
    KineticParameterSample mean{0, 0, 0, 0};
    for (const auto& w : ensemble.kinetic_samples) {
        mean.m_s += w.m_s;
        mean.r_L += w.r_L;
        mean.beta_LCmax += w.beta_LCmax;
        mean.mu_max += w.mu_max;
    }
    const double inv = 1.0 / ensemble.kinetic_samples.size();
    mean.m_s *= inv;
    mean.r_L *= inv;
    mean.beta_LCmax *= inv;
    mean.mu_max *= inv;
    return mean;
}

namespace {

struct RegressionPosterior {
    Eigen::VectorXd mean;     // b_n
    Eigen::MatrixXd cov_chol; // chol of (precision-part)^-1, scaled by sigma at draw time
    double ig_shape;          // a_n
    double ig_scale;          // b_n of the inverse gamma
};

RegressionPosterior conjugate_update(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                     const LinearRegressionPrior& prior) {
    const int p = static_cast<int>(X.cols());
    Eigen::MatrixXd precision = X.transpose() * X;
    precision.diagonal().array() += prior.precision;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(precision);
    require(ldlt.info() == Eigen::Success, ErrorCode::SingularDesign,
            "regression precision factorization failed");
    if (prior.precision == 0.0) {
        require((ldlt.vectorD().array() > 1e-12).all(), ErrorCode::SingularDesign,
                "rank-deficient design with an improper prior");
    }
    RegressionPosterior post;
    post.mean = ldlt.solve(X.transpose() * y);
    Eigen::MatrixXd cov = ldlt.solve(Eigen::MatrixXd::Identity(p, p));
    post.cov_chol = Eigen::LLT<Eigen::MatrixXd>(0.5 * (cov + cov.transpose())).matrixL();
    post.ig_shape = prior.ig_shape + 0.5 * static_cast<double>(X.rows());
    const double rss =
        y.squaredNorm() - post.mean.dot(precision * post.mean);
    post.ig_scale = prior.ig_scale + 0.5 * std::max(0.0, rss);
    return post;
}

double draw_sigma2(const RegressionPosterior& post, const LinearRegressionPrior& prior,
                   Rng& rng) {
    if (prior.known_noise_variance) return prior.noise_variance;
    // InvGamma(a, b) via sum of exponentials for integer-ish shapes is not
    // general enough; use the Marsaglia-Tsang gamma sampler.
    const double a = post.ig_shape;
    const double b = post.ig_scale;
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = rng.normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = rng.uniform_open();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v))
            return b / (d * v); // gamma(a,1) draw is d*v; invert for InvGamma
    }
}

} // namespace

PosteriorEnsemble fit_linear_posterior(const std::vector<Trajectory>& dataset,
                                       const LinearGaussianModel& model_template,
                                       const LinearRegressionPrior& prior, int q_count,
                                       std::uint64_t seed) {
    const int n = model_template.n;
    const int m = model_template.m;
    const int H = model_template.horizon;
    require(q_count >= 1, ErrorCode::InvalidArgument, "q_count must be >= 1");
    for (const auto& traj : dataset)
        require(traj.states.cols() == n && traj.states.rows() == H &&
                    traj.actions.cols() == m,
                ErrorCode::InvalidArgument, "trajectory dimensions disagree with model");

    PosteriorEnsemble ensemble;
    ensemble.kind = PosteriorEnsemble::Kind::LinearGaussian;
    ensemble.provenance = PosteriorEnsemble::Provenance::Conjugate;
    ensemble.seed = seed;

    const int p = n + m;
    // Per (period, component) posterior; draws are joint across components
    // because the regressions are independent given the data.
    std::vector<std::vector<RegressionPosterior>> posts(static_cast<std::size_t>(H - 1));
    for (int t = 1; t <= H - 1; ++t) {
        const long rows = static_cast<long>(dataset.size());
        Eigen::MatrixXd X(rows, p);
        Eigen::MatrixXd Y(rows, n);
        for (long i = 0; i < rows; ++i) {
            const auto& traj = dataset[static_cast<std::size_t>(i)];
            X.row(i).head(n) =
                traj.states.row(t - 1) - model_template.mu_s[static_cast<std::size_t>(t - 1)].transpose();
            X.row(i).tail(m) =
                traj.actions.row(t - 1) - model_template.mu_a[static_cast<std::size_t>(t - 1)].transpose();
            Y.row(i) = traj.states.row(t) - model_template.mu_s[static_cast<std::size_t>(t)].transpose();
        }
        posts[static_cast<std::size_t>(t - 1)].reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            posts[static_cast<std::size_t>(t - 1)].push_back(conjugate_update(X, Y.col(k), prior));
    }

    for (int q = 0; q < q_count; ++q) {
        Rng rng = Rng::substream(seed, 0x636f6e6aull, static_cast<std::uint64_t>(q));
        LgParameterSample w;
        w.beta_s.assign(static_cast<std::size_t>(H - 1), Eigen::MatrixXd(n, n));
        w.beta_a.assign(static_cast<std::size_t>(H - 1), Eigen::MatrixXd(m, n));
        for (int t = 0; t < H - 1; ++t) {
            for (int k = 0; k < n; ++k) {
                const auto& post = posts[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
                double sigma2 = draw_sigma2(post, prior, rng);
                Eigen::VectorXd z(p);
                for (int j = 0; j < p; ++j) z[j] = rng.normal();
                Eigen::VectorXd beta = post.mean + std::sqrt(sigma2) * (post.cov_chol * z);
                w.beta_s[static_cast<std::size_t>(t)].col(k) = beta.head(n);
                w.beta_a[static_cast<std::size_t>(t)].col(k) = beta.tail(m);
            }
        }
        ensemble.lg_samples.push_back(std::move(w));
    }

    // Pooled empirical cross-equation residual covariance at the posterior
    // mean coefficients.
    long count = 0;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    if (!dataset.empty() && H >= 2) {
        LgParameterSample mean_w = lg_ensemble_mean(ensemble);
        LinearGaussianModel mean_model = apply_sample(model_template, mean_w);
        for (const auto& traj : dataset) {
            for (int t = 1; t <= H - 1; ++t) {
                Eigen::VectorXd predicted = mean_model.step(
                    traj.states.row(t - 1).transpose(), traj.actions.row(t - 1).transpose(), t);
                Eigen::VectorXd resid = traj.states.row(t).transpose() - predicted;
                sum += resid * resid.transpose();
                ++count;
            }
        }
    }
    if (count > 0) ensemble.residual_covariance = sum / static_cast<double>(count);
    return ensemble;
}

double kinetic_transition_log_likelihood(const std::vector<Trajectory>& dataset,
                                         const KineticModel& model) {
    const double sqrt_dt = std::sqrt(model.dt);
    double loglike = 0.0;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(KineticModel::state_dim);
    for (const auto& traj : dataset) {
        double lipid = model.lipid_init;
        for (int t = 0; t + 1 < traj.states.rows(); ++t) {
            Eigen::VectorXd state = traj.states.row(t).transpose();
            if (state[4] <= 0.0) return -std::numeric_limits<double>::infinity();
            Eigen::VectorXd action = traj.actions.row(t).transpose();
            double lipid_next = lipid;
            Eigen::VectorXd predicted = model.step(state, lipid_next, action, zero);
            for (int k = 0; k < KineticModel::state_dim; ++k) {
                double sigma = model.noise.scale_at(k, state[k]) * sqrt_dt;
                if (sigma <= 0.0) continue; // component carries no noise
                double resid = traj.states(t + 1, k) - predicted[k];
                loglike += -0.5 * (resid / sigma) * (resid / sigma) - std::log(sigma);
            }
            lipid = lipid_next;
        }
    }
    return loglike;
}

namespace {

double reflect_interval(double x, double lo, double hi) {
    const double span = hi - lo;
    double y = std::fmod(x - lo, 2.0 * span);
    if (y < 0.0) y += 2.0 * span;
    return lo + (y <= span ? y : 2.0 * span - y);
}

double gaussian_log_prior(const KineticParameterSample& w, const KineticPrior& prior) {
    auto term = [](double x, double mean, double sd) {
        double z = (x - mean) / sd;
        return -0.5 * z * z;
    };
    return term(w.m_s, prior.mean.m_s, prior.sd.m_s) +
           term(w.r_L, prior.mean.r_L, prior.sd.r_L) +
           term(w.beta_LCmax, prior.mean.beta_LCmax, prior.sd.beta_LCmax) +
           term(w.mu_max, prior.mean.mu_max, prior.sd.mu_max);
}

} // namespace

PosteriorEnsemble sample_nonlinear_posterior(const std::vector<Trajectory>& dataset,
                                             const KineticModel& model_template,
                                             const KineticPrior& prior,
                                             const McmcConfig& config) {
    require(!dataset.empty(), ErrorCode::InvalidArgument, "dataset must be nonempty");
    require(config.sample_count >= 1 && config.thin >= 1 && config.burn_in >= 0,
            ErrorCode::ConfigError, "bad MCMC configuration");

    Rng rng = Rng::substream(config.seed, 0x6d636d63ull);
    KineticParameterSample current = prior.mean;
    auto log_post = [&](const KineticParameterSample& w) {
        double lp = gaussian_log_prior(w, prior);
        if (config.data_weight != 0.0) {
            KineticModel candidate = apply_sample(model_template, w);
            lp += config.data_weight * kinetic_transition_log_likelihood(dataset, candidate);
        }
        return lp;
    };
    double current_lp = log_post(current);

    PosteriorEnsemble ensemble;
    ensemble.kind = PosteriorEnsemble::Kind::Kinetic;
    ensemble.provenance = PosteriorEnsemble::Provenance::Metropolis;
    ensemble.seed = config.seed;

    const long total = static_cast<long>(config.burn_in) +
                       static_cast<long>(config.sample_count) * config.thin;
    int since_accept = 0;
    // proposal scale adapts toward ~25% acceptance during burn-in only; the
    // sampling phase runs a plain random walk at the frozen scale
    double scale = 1.0;
    int window_accepts = 0;
    int window_size = 0;
    for (long it = 1; it <= total; ++it) {
        KineticParameterSample proposal = current;
        proposal.m_s = std::abs(current.m_s + scale * config.step.m_s * rng.normal());
        proposal.r_L = reflect_interval(
            current.r_L + scale * config.step.r_L * rng.normal(), 0.0, 1.0);
        proposal.beta_LCmax =
            std::abs(current.beta_LCmax + scale * config.step.beta_LCmax * rng.normal());
        proposal.mu_max =
            std::abs(current.mu_max + scale * config.step.mu_max * rng.normal());
        double proposal_lp = log_post(proposal);
        const bool accepted = std::log(rng.uniform_open()) < proposal_lp - current_lp;
        if (accepted) {
            current = proposal;
            current_lp = proposal_lp;
            since_accept = 0;
        } else {
            ++since_accept;
            require(since_accept < config.divergence_window, ErrorCode::ChainDiverged,
                    "no Metropolis acceptance over " +
                        std::to_string(config.divergence_window) + " proposals");
        }
        if (it <= config.burn_in) {
            window_accepts += accepted ? 1 : 0;
            if (++window_size == 50) {
                const double rate = window_accepts / 50.0;
                scale *= std::exp(rate - 0.25);
                scale = std::min(std::max(scale, 1e-4), 1e4);
                window_accepts = 0;
                window_size = 0;
            }
        }
        if (it > config.burn_in && (it - config.burn_in) % config.thin == 0)
            ensemble.kinetic_samples.push_back(current);
    }
    ensemble.validate();
    return ensemble;
}

} // namespace svpkg
