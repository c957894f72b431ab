#pragma once

#include <cstdint>

#include "sv/report.hpp"

namespace svpkg {

/// Chebyshev rule: smallest QD with P(|error| >= eps) <= delta given the
/// marginal-contribution variance. Returns at least 1.
long required_sample_size_variance(double sigma2, double delta, double eps);

/// Hoeffding rule for a known marginal-contribution range r.
long required_sample_size_range(double range, double delta, double eps);

/// Variance-weighted sample-size plan from a pilot report: per output, the
/// per-input required sizes are averaged with weights proportional to the
/// pilot marginal-contribution variances; the plan is the maximum over
/// outputs. Zero-variance outputs plan a single sample.
long plan_sample_size(const SVReport& pilot, double delta, double eps);

} // namespace svpkg
