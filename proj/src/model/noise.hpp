#pragma once

#include <Eigen/Core>

namespace svpkg {

/// Residual noise description for transition models.
///
/// `scales` holds the per-state sigma_k. For the additive kind the residual
/// standard deviation is sigma_k (times sqrt(dt) in the kinetic case); for
/// the multiplicative kind it is sigma_k * max(state_k, 0). The linear
/// Gaussian model may instead carry a full covariance over all H*n residuals.
struct NoiseSpec {
    enum class Kind { AdditiveGaussian, MultiplicativeStateProportional };

    Kind kind = Kind::MultiplicativeStateProportional;
    Eigen::VectorXd scales;      // length n, nonnegative
    Eigen::MatrixXd covariance;  // optional, (H*n) x (H*n), symmetric PSD
    double dt = 1.0;             // hours, nonlinear case

    bool has_covariance() const { return covariance.size() > 0; }

    double scale_at(int k, double state_value) const {
        double sigma = scales[k];
        if (kind == Kind::MultiplicativeStateProportional)
            sigma *= state_value > 0.0 ? state_value : 0.0;
        return sigma;
    }

    void validate(int n, int horizon) const;
};

} // namespace svpkg
