#include "sampling/sphere.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace svpkg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

double positive_floor(double c) {
    return c > 0.0 ? c : std::numeric_limits<double>::denorm_min();
}

/// Deterministic unit-vector fallback for a degenerate (zero-norm) image.
Eigen::VectorXd degenerate_fallback(const Eigen::VectorXd& cube, int s) {
    std::uint64_t h = 0x8446744073709551ull;
    for (int i = 0; i < cube.size(); ++i) {
        std::uint64_t bits;
        double v = cube[i];
        std::memcpy(&bits, &v, sizeof(bits));
        h = mix64(h, bits);
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(s);
    x[static_cast<int>(h % static_cast<std::uint64_t>(s))] = 1.0;
    return x;
}

} // namespace

int bmt_cube_dimension(int s) { return s + (s & 1); }
int sct_cube_dimension(int s) { return s - 1; }
int tfww_cube_dimension(int s) { return s - 1; }

Eigen::VectorXd bmt_sphere_point(const Eigen::VectorXd& cube, int s) {
    const int two_a = bmt_cube_dimension(s);
    require(cube.size() == two_a, ErrorCode::InvalidArgument,
            "bmt: cube dimension must be " + std::to_string(two_a));
    Eigen::VectorXd z(s);
    for (int i = 0; i < two_a / 2; ++i) {
        double r = std::sqrt(-2.0 * std::log(positive_floor(cube[2 * i])));
        double a = kTwoPi * cube[2 * i + 1];
        if (2 * i < s) z[2 * i] = r * std::cos(a);
        if (2 * i + 1 < s) z[2 * i + 1] = r * std::sin(a);
    }
    double norm = z.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) return degenerate_fallback(cube, s);
    return z / norm;
}

double sct_angle_cdf(double phi, int sin_power) {
    // I_n(x) = int_0^x sin(u)^n du via the reduction
    // I_n = -cos(x) sin(x)^(n-1) / n + (n-1)/n I_{n-2},
    // with I_0 = x and I_1 = 1 - cos(x). The boundary term vanishes at
    // x = pi, so I_n(pi) = (n-1)/n I_{n-2}(pi).
    if (sin_power == 0) return phi;
    const double x = kPi * phi;
    double s, c;
    ::sincos(x, &s, &c);
    const int n0 = (sin_power % 2 == 0) ? 0 : 1;
    double value = (n0 == 0) ? x : 1.0 - c;
    double full = (n0 == 0) ? kPi : 2.0;
    double sin_pow = (n0 == 0) ? 1.0 : s; // sin(x)^n for the current order n
    for (int n = n0 + 2; n <= sin_power; n += 2) {
        sin_pow *= s; // sin(x)^(n-1)
        value = -c * sin_pow / n + (n - 1.0) / n * value;
        full = (n - 1.0) / n * full;
        sin_pow *= s; // sin(x)^n
    }
    return value / full;
}

namespace {

double invert_sct_cdf(double c, int sin_power) {
    if (c <= 0.0) return 0.0;
    if (c >= 1.0) return 1.0;
    if (sin_power == 0) return c;
    double lo = 0.0, hi = 1.0;
    double flo = 0.0 - c, fhi = 1.0 - c;
    require(flo <= 0.0 && fhi >= 0.0, ErrorCode::RootNotBracketed,
            "sct: cdf root not bracketed");
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        double mid = 0.5 * (lo + hi);
        double f = sct_angle_cdf(mid, sin_power) - c;
        if (f < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

Eigen::VectorXd sct_sphere_point(const Eigen::VectorXd& cube, int s) {
    require(s >= 2, ErrorCode::InvalidArgument, "sct: ambient dimension must be >= 2");
    require(cube.size() == s - 1, ErrorCode::InvalidArgument,
            "sct: cube dimension must be " + std::to_string(s - 1));
    Eigen::VectorXd sines(s - 1), cosines(s - 1);
    for (int j = 1; j <= s - 1; ++j) {
        if (j <= s - 2) {
            double phi = invert_sct_cdf(cube[j - 1], s - j - 1);
            sines[j - 1] = std::sin(kPi * phi);
            cosines[j - 1] = std::cos(kPi * phi);
        } else {
            double a = kTwoPi * cube[j - 1];
            sines[j - 1] = std::sin(a);
            cosines[j - 1] = std::cos(a);
        }
    }
    Eigen::VectorXd x(s);
    double prod = 1.0;
    for (int j = 1; j <= s - 1; ++j) {
        x[j - 1] = prod * cosines[j - 1];
        prod *= sines[j - 1];
    }
    x[s - 1] = prod;
    return x;
}

Eigen::VectorXd tfww_sphere_point(const Eigen::VectorXd& cube, int s) {
    require(s >= 2, ErrorCode::InvalidArgument, "tfww: ambient dimension must be >= 2");
    require(cube.size() == s - 1, ErrorCode::InvalidArgument,
            "tfww: cube dimension must be " + std::to_string(s - 1));
    Eigen::VectorXd x(s);
    if (s % 2 == 0) {
        const int a = s / 2;
        // g_a = 1, g_0 = 0, g_j = g_{j+1} * c_j^(1/j) descending.
        Eigen::VectorXd g(a + 1);
        g[a] = 1.0;
        g[0] = 0.0;
        for (int j = a - 1; j >= 1; --j)
            g[j] = g[j + 1] * std::pow(cube[j - 1], 1.0 / j);
        for (int l = 1; l <= a; ++l) {
            double d = std::sqrt(std::max(0.0, g[l] - g[l - 1]));
            double angle = kTwoPi * cube[a + l - 2]; // c_{a+l-1}, 1-based
            x[2 * l - 2] = d * std::cos(angle);
            x[2 * l - 1] = d * std::sin(angle);
        }
    } else {
        const int a = (s - 1) / 2;
        Eigen::VectorXd g(a + 1);
        g[a] = 1.0;
        g[0] = 0.0;
        for (int j = a - 1; j >= 1; --j)
            g[j] = g[j + 1] * std::pow(cube[j - 1], 2.0 / (2.0 * j + 1.0));
        Eigen::VectorXd d(a + 1);
        for (int j = 1; j <= a; ++j) d[j] = std::sqrt(std::max(0.0, g[j] - g[j - 1]));
        // First block: a 3-sphere component from one Dirichlet weight.
        const double c_a = cube[a - 1];
        const double angle1 = kTwoPi * cube[a];
        x[0] = d[1] * (1.0 - 2.0 * c_a);
        const double radial = 2.0 * std::sqrt(std::max(0.0, c_a * (1.0 - c_a)));
        x[1] = d[1] * radial * std::cos(angle1);
        x[2] = d[1] * radial * std::sin(angle1);
        // Remaining circles consume distinct uniforms c_{a+l}, l = 2..a.
        for (int l = 2; l <= a; ++l) {
            double angle = kTwoPi * cube[a + l - 1];
            x[2 * l - 1] = d[l] * std::cos(angle);
            x[2 * l] = d[l] * std::sin(angle);
        }
    }
    double norm = x.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) return degenerate_fallback(cube, s);
    return x / norm;
}

namespace {

template <typename F>
std::vector<Eigen::VectorXd> map_points(const std::vector<Eigen::VectorXd>& cube, int s, F f) {
    std::vector<Eigen::VectorXd> out;
    out.reserve(cube.size());
    for (const auto& c : cube) out.push_back(f(c, s));
    return out;
}

} // namespace

std::vector<Eigen::VectorXd> bmt_sphere(const std::vector<Eigen::VectorXd>& cube, int s) {
    return map_points(cube, s, bmt_sphere_point);
}
std::vector<Eigen::VectorXd> sct_sphere(const std::vector<Eigen::VectorXd>& cube, int s) {
    return map_points(cube, s, sct_sphere_point);
}
std::vector<Eigen::VectorXd> tfww_sphere(const std::vector<Eigen::VectorXd>& cube, int s) {
    return map_points(cube, s, tfww_sphere_point);
}

} // namespace svpkg
