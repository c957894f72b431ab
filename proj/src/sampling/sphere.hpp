#pragma once

#include <vector>

#include <Eigen/Core>

namespace svpkg {

/// Cube-to-sphere transforms. Each maps points of the unit cube to the unit
/// sphere in R^s (s = ambient dimension); outputs have Euclidean norm 1.
///
/// Input cube dimensions:
///   bmt_sphere:  2a with s <= 2a <= s+1  (one normal coordinate is dropped
///                when 2a = s+1)
///   sct_sphere:  s-1
///   tfww_sphere: s-1

Eigen::VectorXd bmt_sphere_point(const Eigen::VectorXd& cube, int s);
Eigen::VectorXd sct_sphere_point(const Eigen::VectorXd& cube, int s);
Eigen::VectorXd tfww_sphere_point(const Eigen::VectorXd& cube, int s);

std::vector<Eigen::VectorXd> bmt_sphere(const std::vector<Eigen::VectorXd>& cube, int s);
std::vector<Eigen::VectorXd> sct_sphere(const std::vector<Eigen::VectorXd>& cube, int s);
std::vector<Eigen::VectorXd> tfww_sphere(const std::vector<Eigen::VectorXd>& cube, int s);

/// Cube dimension consumed by each transform for ambient dimension s.
int bmt_cube_dimension(int s);
int sct_cube_dimension(int s);
int tfww_cube_dimension(int s);

/// CDF of the angle variable phi_j in the spherical-coordinate construction:
/// F(phi) = I_n(pi * phi) / I_n(pi) with I_n(x) the sin-power antiderivative,
/// n = s - j - 1. Exposed for tests.
double sct_angle_cdf(double phi, int sin_power);

} // namespace svpkg
