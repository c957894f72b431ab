#include "sampling/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "sampling/sobol.hpp"
#include "sampling/sphere.hpp"

namespace svpkg {

PermutationMethod permutation_method_from_string(const std::string& name) {
    if (name == "uniform") return PermutationMethod::Uniform;
    if (name == "bmt") return PermutationMethod::Bmt;
    if (name == "sct") return PermutationMethod::Sct;
    if (name == "tfww") return PermutationMethod::Tfww;
    if (name == "tfww-vrt") return PermutationMethod::TfwwVrt;
    fail(ErrorCode::InvalidArgument, "unknown permutation method: " + name);
}

std::string to_string(PermutationMethod method) {
    switch (method) {
        case PermutationMethod::Uniform: return "uniform";
        case PermutationMethod::Bmt: return "bmt";
        case PermutationMethod::Sct: return "sct";
        case PermutationMethod::Tfww: return "tfww";
        case PermutationMethod::TfwwVrt: return "tfww-vrt";
    }
    return "?";
}

Permutation sphere_to_permutation(const Eigen::VectorXd& x, int s) {
    require(s >= 2, ErrorCode::InvalidArgument, "permutation dimension must be >= 2");
    require(x.size() == s - 1, ErrorCode::InvalidArgument,
            "sphere point must have dimension s-1");
    require(std::abs(x.norm() - 1.0) < 1e-9, ErrorCode::InvalidArgument,
            "sphere point must have unit norm");
    // x' = T^t x with row k of T carrying k entries 1/sqrt(k^2+k) followed by
    // -k/sqrt(k^2+k). Accumulate column-wise without materializing T.
    Eigen::VectorXd projected = Eigen::VectorXd::Zero(s);
    for (int k = 1; k <= s - 1; ++k) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1.0));
        const double xk = x[k - 1];
        for (int j = 1; j <= k; ++j) projected[j - 1] += xk * scale;
        projected[k] -= xk * static_cast<double>(k) * scale;
    }
    Permutation perm(s);
    std::iota(perm.begin(), perm.end(), 1);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return projected[a - 1] < projected[b - 1];
    });
    return perm;
}

Permutation reverse_permutation(const Permutation& perm) {
    return Permutation(perm.rbegin(), perm.rend());
}

bool is_valid_permutation(const Permutation& perm, int s) {
    if (static_cast<int>(perm.size()) != s) return false;
    std::vector<bool> seen(static_cast<std::size_t>(s), false);
    for (int v : perm) {
        if (v < 1 || v > s || seen[static_cast<std::size_t>(v - 1)]) return false;
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return true;
}

namespace {

Permutation fisher_yates(int s, Rng& rng) {
    Permutation perm(s);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = s - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

} // namespace

PermutationBatch sample_permutations(int s, int count, PermutationMethod method,
                                     std::uint64_t seed,
                                     const PermutationSamplingOptions& options) {
    require(count >= 1, ErrorCode::InvalidArgument, "count must be >= 1");
    PermutationBatch batch;
    batch.s = s;
    batch.method = method;
    batch.seed = seed;

    if (method == PermutationMethod::Uniform) {
        require(s >= 1, ErrorCode::InvalidArgument, "s must be >= 1");
        batch.perms.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            Rng rng = Rng::substream(seed, 0x7065726dull, static_cast<std::uint64_t>(i));
            batch.perms.push_back(fisher_yates(s, rng));
        }
        return batch;
    }

    require(s >= 3, ErrorCode::InvalidArgument,
            "sphere-based permutation sampling requires s >= 3");
    const int ambient = s - 1;

    if (method == PermutationMethod::TfwwVrt) {
        require(count % 2 == 0, ErrorCode::OddCountForAntithetic,
                "tfww-vrt requires an even permutation count");
        const int half = count / 2;
        auto cube = sobol_points(tfww_cube_dimension(ambient), half, seed);
        batch.perms.reserve(static_cast<std::size_t>(count));
        for (const auto& c : cube) {
            Permutation perm = sphere_to_permutation(tfww_sphere_point(c, ambient), s);
            batch.perms.push_back(perm);
            batch.perms.push_back(reverse_permutation(perm));
        }
        batch.antithetic_paired = true;
        return batch;
    }

    int cube_dim = 0;
    Eigen::VectorXd (*transform)(const Eigen::VectorXd&, int) = nullptr;
    switch (method) {
        case PermutationMethod::Bmt:
            cube_dim = bmt_cube_dimension(ambient);
            transform = bmt_sphere_point;
            break;
        case PermutationMethod::Sct:
            cube_dim = sct_cube_dimension(ambient);
            transform = sct_sphere_point;
            break;
        case PermutationMethod::Tfww:
            cube_dim = tfww_cube_dimension(ambient);
            transform = tfww_sphere_point;
            break;
        default: fail(ErrorCode::InvalidArgument, "unhandled method");
    }
    auto cube = options.sobol_cube ? sobol_points(cube_dim, count, seed)
                                   : pseudo_random_points(cube_dim, count, seed);
    batch.perms.reserve(static_cast<std::size_t>(count));
    for (const auto& c : cube)
        batch.perms.push_back(sphere_to_permutation(transform(c, ambient), s));
    return batch;
}

PermutationBatch enumerate_permutations(int s) {
    require(s >= 1 && s <= 8, ErrorCode::InstanceTooLarge,
            "exhaustive permutation enumeration is limited to s <= 8");
    PermutationBatch batch;
    batch.s = s;
    batch.method = PermutationMethod::Uniform;
    Permutation perm(s);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        batch.perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return batch;
}

double discrepancy_score(const PermutationBatch& batch) {
    require(!batch.perms.empty(), ErrorCode::InvalidArgument, "empty batch");
    const int s = batch.s;
    require(s >= 2, ErrorCode::InvalidArgument, "discrepancy needs s >= 2");
    const int count = batch.count();
    // position[v-1] = rank of value v within the permutation
    std::vector<int> position(static_cast<std::size_t>(s));
    Eigen::MatrixXd before = Eigen::MatrixXd::Zero(s, s);
    for (const auto& perm : batch.perms) {
        for (int r = 0; r < s; ++r) position[static_cast<std::size_t>(perm[r] - 1)] = r;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (position[static_cast<std::size_t>(i)] < position[static_cast<std::size_t>(j)])
                    before(i, j) += 1.0;
    }
    double total = 0.0;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            total += std::abs(before(i, j) / count - 0.5);
    return total / (0.5 * s * (s - 1));
}

void write_permutations_csv(const PermutationBatch& batch, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::IoError, "cannot open " + path + " for writing");
    out << "# method=" << to_string(batch.method) << " seed=" << batch.seed
        << " s=" << batch.s << "\n";
    for (const auto& perm : batch.perms) {
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (i) out << ',';
            out << perm[i];
        }
        out << "\n";
    }
    require(out.good(), ErrorCode::IoError, "write failed for " + path);
}

} // namespace svpkg
