#pragma once

#include <Eigen/Core>

#include "model/linear_gaussian.hpp"
#include "model/noise.hpp"

namespace svpkg {

/// Fed-batch fermentation kinetics for Yarrowia lipolytica citrate
/// production. State vector: (X_f, C, S, N, V) = lipid-free cell mass,
/// citrate, substrate, nitrogen (all g/L) and working volume (L); the action
/// is the substrate feed rate F_S (L/h). Lipid L is integrated internally
/// (it feeds the substrate-uptake and beta-oxidation terms) and exposed as a
/// diagnostic channel.
///
/// The transition is one explicit Euler step of the kinetic rate equations
/// with per-state Gaussian disturbances sigma(.) sqrt(dt) z. Biophysical
/// concentrations are clamped at zero after the step; the volume must stay
/// positive.
struct KineticModel {
    // fixed parameters
    double alpha_L = 0.1273; // lipid production per unit growth
    double C_max = 130.90;   // citrate tolerance limit, g/L
    double K_iN = 0.1229;    // nitrogen limitation constant, g/L
    double K_iS = 612.18;    // substrate inhibition constant, g/L
    double K_iX = 59.974;    // cell-density inhibition constant, g/L
    double K_N = 0.0200;     // nitrogen saturation constant, g/L
    double K_O = 0.3309;     // dissolved-oxygen saturation constant, %
    double K_S = 0.0430;     // substrate saturation constant, g/L
    double K_SL = 0.0217;    // lipid consumption coefficient
    double V_evap = 0.0026;  // evaporation rate, L/h
    double Y_cs = 0.6826;    // citrate yield on substrate, g/g
    double Y_ls = 0.3574;    // lipid yield on substrate, g/g
    double Y_xn = 10.0;      // cell yield on nitrogen, g/g
    double Y_xs = 0.2386;    // cell yield on substrate, g/g
    double S_F = 917.00;     // oil concentration in the feed, g/L

    // uncertain parameters (posterior-sampled set); defaults are documented
    // working values, not calibrated estimates
    double m_s = 0.01;        // substrate maintenance coefficient, g/g/h
    double r_L = 0.5;         // lipid fraction of the lipid+citrate carbon flow
    double beta_LCmax = 0.15; // max carbon flow to citrate and lipid, 1/h
    double mu_max = 0.30;     // max specific growth rate, 1/h

    double oxygen = 50.0; // dissolved oxygen, %, exogenous constant
    double dt = 1.0;      // Euler step, h
    double lipid_init = 0.0;

    NoiseSpec noise; // scales over the 5 public states

    static constexpr int state_dim = 5;
    static constexpr int action_dim = 1;

    struct Rates {
        double mu;       // specific growth rate
        double beta_LC;  // carbon flow to lipid + citrate
        double beta_C;   // citrate formation rate
        double q_L;      // net lipid production rate
        double q_S;      // specific substrate uptake rate
        double F_B;      // base feed rate, L/h
        double dilution; // (F_B + F_S) / V
    };

    Rates rates(const Eigen::VectorXd& state, double lipid, double feed) const;

    /// One Euler step; `z` holds the 5 standardized normal draws.
    /// Returns the next 5-state and updates `lipid` in place.
    Eigen::VectorXd step(const Eigen::VectorXd& state, double& lipid,
                         const Eigen::VectorXd& action, const Eigen::VectorXd& z) const;

    void validate() const;
};

/// Rolls out the kinetic model under `policy` for `horizon` periods with the
/// given standardized draws (H x 5; row t-1 scales into e_t). s_1 = s0 + e_1.
Trajectory simulate_kinetic(const KineticModel& model, const Eigen::VectorXd& s0,
                            const PolicySpec& policy, const RewardSpec& reward,
                            int horizon, const Eigen::MatrixXd& draws);

} // namespace svpkg
