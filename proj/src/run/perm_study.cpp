#include <chrono>
#include <cmath>
#include <fstream>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "common/text.hpp"
#include "run/commands.hpp"
#include "sampling/permutation.hpp"
#include "sampling/sobol.hpp"
#include "sampling/sphere.hpp"

namespace svpkg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct StudyRow {
    double discrepancy = 0.0;
    double cube_seconds = 0.0;
    double transform_seconds = 0.0;
};

StudyRow run_replication(int s, int count, const std::string& method, bool sobol_cube,
                         std::uint64_t seed) {
    const int ambient = s - 1;
    int cube_dim = 0;
    Eigen::VectorXd (*transform)(const Eigen::VectorXd&, int) = nullptr;
    bool antithetic = false;
    int points_needed = count;
    if (method == "bmt") {
        cube_dim = bmt_cube_dimension(ambient);
        transform = bmt_sphere_point;
    } else if (method == "sct") {
        cube_dim = sct_cube_dimension(ambient);
        transform = sct_sphere_point;
    } else if (method == "tfww") {
        cube_dim = tfww_cube_dimension(ambient);
        transform = tfww_sphere_point;
    } else if (method == "tfww-vrt") {
        require(count % 2 == 0, ErrorCode::OddCountForAntithetic,
                "tfww-vrt needs an even count");
        cube_dim = tfww_cube_dimension(ambient);
        transform = tfww_sphere_point;
        antithetic = true;
        points_needed = count / 2;
    } else {
        fail(ErrorCode::InvalidArgument, "perm-study method must be a sphere transform");
    }

    StudyRow row;
    auto t0 = Clock::now();
    auto cube = sobol_cube ? sobol_points(cube_dim, points_needed, seed)
                           : pseudo_random_points(cube_dim, points_needed, seed);
    row.cube_seconds = seconds_since(t0);

    PermutationBatch batch;
    batch.s = s;
    batch.method = permutation_method_from_string(method);
    batch.seed = seed;
    auto t1 = Clock::now();
    std::vector<Eigen::VectorXd> sphere;
    sphere.reserve(cube.size());
    for (const auto& c : cube) sphere.push_back(transform(c, ambient));
    row.transform_seconds = seconds_since(t1);

    for (const auto& x : sphere) {
        Permutation perm = sphere_to_permutation(x, s);
        batch.perms.push_back(perm);
        if (antithetic) batch.perms.push_back(reverse_permutation(perm));
    }
    row.discrepancy = discrepancy_score(batch);
    return row;
}

} // namespace

void cmd_perm_study(const PermStudyParams& params, const std::string& out_csv) {
    require(!params.dims.empty() && !params.counts.empty() && !params.methods.empty(),
            ErrorCode::InvalidArgument, "perm-study needs dims, counts and methods");
    require(params.replications >= 1, ErrorCode::InvalidArgument,
            "perm-study needs at least one replication");
    std::ofstream out(out_csv, std::ios::binary);
    require(out.good(), ErrorCode::IoError, "cannot open " + out_csv + " for writing");
    out << "dim,count,method,replications,mean_discrepancy,std_discrepancy,"
           "mean_sobol_seconds,mean_transform_seconds\n";
    for (int s : params.dims) {
        require(s >= 3, ErrorCode::InvalidArgument, "perm-study dims must be >= 3");
        for (int count : params.counts) {
            for (const auto& method : params.methods) {
                double sum = 0.0, sumsq = 0.0, cube_sum = 0.0, transform_sum = 0.0;
                for (int r = 0; r < params.replications; ++r) {
                    std::uint64_t rep_seed =
                        mix64(mix64(params.seed, static_cast<std::uint64_t>(s)),
                              static_cast<std::uint64_t>(r) + 1);
                    StudyRow row = run_replication(s, count, method, params.sobol_cube,
                                                   rep_seed);
                    sum += row.discrepancy;
                    sumsq += row.discrepancy * row.discrepancy;
                    cube_sum += row.cube_seconds;
                    transform_sum += row.transform_seconds;
                }
                const double reps = params.replications;
                const double mean = sum / reps;
                const double var =
                    reps > 1 ? std::max(0.0, (sumsq - sum * sum / reps) / (reps - 1)) : 0.0;
                out << s << ',' << count << ',' << method << ',' << params.replications
                    << ',' << format_double(mean) << ',' << format_double(std::sqrt(var))
                    << ',' << format_double(cube_sum / reps) << ','
                    << format_double(transform_sum / reps) << "\n";
            }
        }
    }
    require(out.good(), ErrorCode::IoError, "write failed for " + out_csv);
}

} // namespace svpkg
