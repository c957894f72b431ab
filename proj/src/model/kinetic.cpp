#include "model/kinetic.hpp"

#include <cmath>

#include "common/error.hpp"

namespace svpkg {

KineticModel::Rates KineticModel::rates(const Eigen::VectorXd& state, double lipid,
                                        double feed) const {
    const double X_f = state[0];
    const double C = state[1];
    const double S = state[2];
    const double N = state[3];
    const double V = state[4];
    const double O = oxygen;

    Rates r{};
    const double substrate_monod = (S / (K_S + S)) * (1.0 / (1.0 + S / K_iS));
    const double oxygen_monod = O / (K_O + O);
    const double density_inhibition = 1.0 / (1.0 + X_f / K_iX);

    r.mu = mu_max * substrate_monod * (N / (K_N + N)) * oxygen_monod * density_inhibition;
    r.beta_LC = (1.0 / (1.0 + N / K_iN)) * substrate_monod * oxygen_monod *
                density_inhibition * (1.0 - C / C_max) * beta_LCmax;
    r.beta_C = 2.0 * (1.0 - r_L) * r.beta_LC;
    const double total_mass = lipid + X_f;
    const double lipid_fraction = total_mass > 0.0 ? lipid / total_mass : 0.0;
    r.q_L = alpha_L * r.mu + r_L * r.beta_LC - K_SL * lipid_fraction * oxygen_monod;
    r.q_S = r.mu / Y_xs + oxygen_monod * substrate_monod * m_s + r.beta_C / Y_cs +
            r.q_L / Y_ls;
    r.F_B = (V / 1000.0) * ((7.14 / Y_xn) * r.mu * X_f + 1.59 * r.beta_C * X_f);
    r.dilution = (r.F_B + feed) / V;
    return r;
}

Eigen::VectorXd KineticModel::step(const Eigen::VectorXd& state, double& lipid,
                                   const Eigen::VectorXd& action,
                                   const Eigen::VectorXd& z) const {
    require(state.size() == state_dim, ErrorCode::InvalidArgument,
            "kinetic state must have 5 components");
    require(z.size() == state_dim, ErrorCode::InvalidArgument,
            "noise draw must have 5 components");
    require(state[4] > 0.0, ErrorCode::NonPositiveVolume,
            "volume must be positive before the step");

    const double feed = action.size() ? action[0] : 0.0;
    const Rates r = rates(state, lipid, feed);
    const double V = state[4];
    const double outflow = r.dilution - V_evap / V;
    const double sqrt_dt = std::sqrt(dt);

    Eigen::VectorXd drift(state_dim);
    drift[0] = (r.mu - outflow) * state[0];
    drift[1] = r.beta_C * state[0] - outflow * state[1];
    drift[2] = -(r.q_S * state[0]) + (feed / V) * S_F - outflow * state[2];
    drift[3] = -(r.mu / Y_xn) * state[0] - outflow * state[3];
    drift[4] = r.F_B + feed - V_evap;

    Eigen::VectorXd next(state_dim);
    for (int k = 0; k < state_dim; ++k)
        next[k] = state[k] + drift[k] * dt + noise.scale_at(k, state[k]) * sqrt_dt * z[k];

    const double lipid_drift = r.q_L * state[0] - outflow * lipid;
    lipid = std::max(0.0, lipid + lipid_drift * dt);

    require(next.allFinite(), ErrorCode::NonFiniteState,
            "kinetic step produced a non-finite state");
    for (int k = 0; k < 4; ++k) next[k] = std::max(0.0, next[k]);
    require(next[4] > 0.0, ErrorCode::NonPositiveVolume,
            "working volume dropped to zero or below");
    return next;
}

void KineticModel::validate() const {
    require(alpha_L > 0 && C_max > 0 && K_iN > 0 && K_iS > 0 && K_iX > 0 && K_N > 0 &&
                K_O > 0 && K_S > 0 && K_SL > 0 && Y_cs > 0 && Y_ls > 0 && Y_xn > 0 &&
                Y_xs > 0 && S_F > 0,
            ErrorCode::ConfigError,
            "kinetic yield and saturation constants must be strictly positive");
    require(r_L >= 0.0 && r_L <= 1.0, ErrorCode::ConfigError, "r_L must lie in [0, 1]");
    require(beta_LCmax >= 0.0 && mu_max >= 0.0 && m_s >= 0.0, ErrorCode::ConfigError,
            "rate parameters must be nonnegative");
    require(V_evap >= 0.0, ErrorCode::ConfigError, "V_evap must be nonnegative");
    require(dt > 0.0, ErrorCode::ConfigError, "dt must be positive");
    require(oxygen > 0.0, ErrorCode::ConfigError, "dissolved oxygen must be positive");
    noise.validate(state_dim, 1);
}

Trajectory simulate_kinetic(const KineticModel& model, const Eigen::VectorXd& s0,
                            const PolicySpec& policy, const RewardSpec& reward,
                            int horizon, const Eigen::MatrixXd& draws) {
    require(draws.rows() == horizon && draws.cols() == KineticModel::state_dim,
            ErrorCode::InvalidArgument, "draw matrix must be H x 5");
    const int n = KineticModel::state_dim;
    Trajectory traj;
    traj.states.resize(horizon, n);
    traj.actions.resize(horizon - 1, KineticModel::action_dim);
    traj.residuals.resize(horizon, n);
    traj.rewards.resize(horizon);
    traj.lipid.resize(horizon);

    const double sqrt_dt = std::sqrt(model.dt);
    Eigen::VectorXd e1(n);
    for (int k = 0; k < n; ++k)
        e1[k] = model.noise.scale_at(k, s0[k]) * sqrt_dt * draws(0, k);
    Eigen::VectorXd state = s0 + e1;
    for (int k = 0; k < 4; ++k) state[k] = std::max(0.0, state[k]);
    require(state[4] > 0.0, ErrorCode::NonPositiveVolume,
            "initial volume must stay positive");
    traj.residuals.row(0) = e1;
    traj.states.row(0) = state;

    double lipid = model.lipid_init;
    traj.lipid[0] = lipid;
    for (int t = 1; t <= horizon - 1; ++t) {
        Eigen::VectorXd action = policy.action(state, t);
        traj.actions.row(t - 1) = action;
        traj.rewards[t - 1] = reward.evaluate(state, action, t, horizon);
        for (int k = 0; k < n; ++k)
            traj.residuals(t, k) =
                model.noise.scale_at(k, state[k]) * sqrt_dt * draws(t, k);
        state = model.step(state, lipid, action, draws.row(t).transpose());
        traj.states.row(t) = state;
        traj.lipid[t] = lipid;
    }
    traj.rewards[horizon - 1] = reward.evaluate_terminal(state, horizon);
    return traj;
}

} // namespace svpkg
