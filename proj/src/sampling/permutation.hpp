#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace svpkg {

using Permutation = std::vector<int>; // values 1..s, each exactly once

enum class PermutationMethod { Uniform, Bmt, Sct, Tfww, TfwwVrt };

PermutationMethod permutation_method_from_string(const std::string& name);
std::string to_string(PermutationMethod method);

/// Ordered collection of permutations of {1..s} with sampling provenance.
struct PermutationBatch {
    std::vector<Permutation> perms;
    int s = 0;
    PermutationMethod method = PermutationMethod::Uniform;
    std::uint64_t seed = 0;
    bool antithetic_paired = false;

    int count() const { return static_cast<int>(perms.size()); }
};

struct PermutationSamplingOptions {
    /// Use randomized Sobol cube points instead of pseudo-random ones for
    /// the sphere-based methods. tfww-vrt always uses Sobol; the plain
    /// baselines default to pseudo-random.
    bool sobol_cube = false;
};

/// Maps a unit vector in R^(s-1) to a permutation of {1..s}: multiply by the
/// transposed Helmert-style contrast matrix and argsort ascending, ties
/// broken by the smaller original index.
Permutation sphere_to_permutation(const Eigen::VectorXd& x, int s);

Permutation reverse_permutation(const Permutation& perm);

bool is_valid_permutation(const Permutation& perm, int s);

/// Samples D permutations of {1..s}. tfww-vrt follows the QMC + antithetic
/// pipeline (D/2 Sobol points, TFWW transform, argsort map, reverses
/// appended) and requires D even. The plain sphere methods consume
/// pseudo-random cube points unless options.sobol_cube is set. `uniform` is
/// Fisher-Yates. Deterministic for a given (s, count, method, seed).
PermutationBatch sample_permutations(int s, int count, PermutationMethod method,
                                     std::uint64_t seed,
                                     const PermutationSamplingOptions& options = {});

/// Enumerates all s! permutations in lexicographic order (s <= 8).
PermutationBatch enumerate_permutations(int s);

/// Mean over ordered index pairs (i < j) of |P(i before j) - 1/2|.
double discrepancy_score(const PermutationBatch& batch);

/// Writes one permutation per row (1-based, comma separated) preceded by a
/// `# method=<m> seed=<n> s=<s>` header line.
void write_permutations_csv(const PermutationBatch& batch, const std::string& path);

} // namespace svpkg
