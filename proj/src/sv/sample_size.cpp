#include "sv/sample_size.hpp"

#include <cmath>

#include "common/error.hpp"

namespace svpkg {

namespace {

void check_rates(double delta, double eps) {
    require(delta > 0.0 && delta < 1.0, ErrorCode::InvalidArgument,
            "delta must lie in (0, 1)");
    require(eps > 0.0, ErrorCode::InvalidArgument, "eps must be positive");
}

} // namespace

long required_sample_size_variance(double sigma2, double delta, double eps) {
    require(sigma2 >= 0.0, ErrorCode::InvalidArgument, "sigma2 must be nonnegative");
    check_rates(delta, eps);
    long size = static_cast<long>(std::ceil(sigma2 / (delta * eps * eps)));
    return size < 1 ? 1 : size;
}

long required_sample_size_range(double range, double delta, double eps) {
    require(range >= 0.0, ErrorCode::InvalidArgument, "range must be nonnegative");
    check_rates(delta, eps);
    long size =
        static_cast<long>(std::ceil(std::log(2.0 / delta) * range * range / (2.0 * eps * eps)));
    return size < 1 ? 1 : size;
}

long plan_sample_size(const SVReport& pilot, double delta, double eps) {
    check_rates(delta, eps);
    require(pilot.input_count() >= 1 && pilot.output_count() >= 1,
            ErrorCode::InvalidArgument, "pilot report is empty");
    long plan = 1;
    for (int j = 0; j < pilot.output_count(); ++j) {
        double weight_total = 0.0;
        double weighted = 0.0;
        for (int i = 0; i < pilot.input_count(); ++i) {
            const double sigma2 = pilot.mc_variance(i, j);
            const double weight = sigma2;
            weighted += weight *
                        static_cast<double>(required_sample_size_variance(sigma2, delta, eps));
            weight_total += weight;
        }
        long output_plan =
            weight_total > 0.0 ? static_cast<long>(std::ceil(weighted / weight_total)) : 1;
        if (output_plan > plan) plan = output_plan;
    }
    return plan;
}

} // namespace svpkg
