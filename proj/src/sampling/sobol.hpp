#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace svpkg {

/// Digitally shifted Sobol sequence generator.
///
/// Direction numbers come from the Joe-Kuo D6 table (dimensions up to 256).
/// Points are produced with 32-bit precision via Gray-code accumulation; the
/// randomization is a per-dimension digital shift (XOR of the dyadic digits)
/// derived deterministically from the seed. Seed 0 selects the zero shift, in
/// which case the base sequence is reproduced. Enumeration starts at index 1
/// of the base sequence, so the first emitted point of the unshifted sequence
/// is (0.5, ..., 0.5).
class SobolSequence {
  public:
    SobolSequence(int dimension, std::uint64_t seed);

    int dimension() const { return dimension_; }

    /// The point at 1-based base-sequence index `index` (index >= 1).
    Eigen::VectorXd point(std::uint64_t index) const;

    /// First `count` points, indices 1..count.
    std::vector<Eigen::VectorXd> points(int count) const;

    static int max_dimension();

  private:
    int dimension_;
    std::vector<std::uint32_t> shift_;            // per dimension
    std::vector<std::uint32_t> directions_;       // dimension x 32, row-major
};

/// Convenience wrapper matching the batch interface: `count` points of the
/// digitally shifted sequence.
std::vector<Eigen::VectorXd> sobol_points(int dimension, int count, std::uint64_t seed);

/// Pseudo-random points in [0,1)^dimension; point i is derived from
/// (seed, i) so chunked generation is deterministic.
std::vector<Eigen::VectorXd> pseudo_random_points(int dimension, int count, std::uint64_t seed);

} // namespace svpkg
