#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "svpkg/svpkg.h"

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("svpkg_capi_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const char* kScalarConfig = R"({
  "model": {
    "type": "linear-gaussian", "n": 1, "m": 1, "H": 2,
    "beta_s": [[0.5]], "beta_a": [[0.2]],
    "mu_s": [[0.0], [0.0]], "mu_a": [[0.0]],
    "s0": [0.0],
    "noise": {"kind": "additive-gaussian", "scales": [1.0]}
  },
  "policy": {"theta": [[1.0]]},
  "reward": {"form": "linear", "offset": [0, 0],
             "action_coeff": [[0], [0]], "state_coeff": [[0], [1.0]]},
  "analysis": {"inputs": "random-factors", "mode": "expectation",
               "engine": "analytic", "exact": true, "seed": 42}
})";

} // namespace

TEST_CASE("version and error surface") {
    CHECK(std::strlen(svpkg_version()) > 0);
    CHECK(svpkg_run_sv("{ not json", "", "") == SVPKG_ERR_PARSE);
    CHECK(std::strlen(svpkg_last_error()) > 0);
    CHECK(svpkg_run_sv(nullptr, "", "") == SVPKG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run_sv writes the analytic scalar report") {
    TempDir dir;
    svpkg_status status = svpkg_run_sv(kScalarConfig, dir.file("sv.csv").c_str(),
                                       dir.file("sv.json").c_str());
    REQUIRE_MESSAGE(status == SVPKG_OK, svpkg_last_error());
    std::string csv = slurp(dir.file("sv.csv"));
    CHECK(csv.find("0.69999999999999996") != std::string::npos);
}

TEST_CASE("permutation handles") {
    svpkg_permutations* batch = nullptr;
    REQUIRE(svpkg_permutations_sample(6, 10, "tfww-vrt", 99, &batch) == SVPKG_OK);
    REQUIRE(batch != nullptr);
    CHECK(svpkg_permutations_count(batch) == 10);
    CHECK(svpkg_permutations_size(batch) == 6);

    std::vector<int32_t> first(6), second(6);
    REQUIRE(svpkg_permutations_row(batch, 0, first.data(), 6) == SVPKG_OK);
    REQUIRE(svpkg_permutations_row(batch, 1, second.data(), 6) == SVPKG_OK);
    for (int i = 0; i < 6; ++i) CHECK(second[static_cast<std::size_t>(i)] ==
                                      first[static_cast<std::size_t>(5 - i)]);

    double score = -1.0;
    CHECK(svpkg_permutations_discrepancy(batch, &score) == SVPKG_OK);
    CHECK(score >= 0.0);
    CHECK(score <= 0.5);

    TempDir dir;
    CHECK(svpkg_permutations_write_csv(batch, dir.file("perms.csv").c_str()) == SVPKG_OK);
    CHECK(slurp(dir.file("perms.csv")).find("# method=tfww-vrt seed=99 s=6") == 0);

    CHECK(svpkg_permutations_row(batch, 10, first.data(), 6) ==
          SVPKG_ERR_INVALID_ARGUMENT);
    CHECK(svpkg_permutations_row(batch, 0, first.data(), 3) ==
          SVPKG_ERR_INVALID_ARGUMENT);
    svpkg_permutations_free(batch);

    svpkg_permutations* odd = nullptr;
    CHECK(svpkg_permutations_sample(6, 9, "tfww-vrt", 99, &odd) ==
          SVPKG_ERR_ODD_COUNT_FOR_ANTITHETIC);
}

TEST_CASE("sample size planners") {
    int64_t out = 0;
    REQUIRE(svpkg_sample_size_variance(1.0, 0.05, 0.1, &out) == SVPKG_OK);
    CHECK(out == 2000);
    REQUIRE(svpkg_sample_size_range(1.0, 0.05, 0.1, &out) == SVPKG_OK);
    CHECK(out == 185);
    CHECK(svpkg_sample_size_variance(1.0, 2.0, 0.1, &out) == SVPKG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("perm study and bench runners accept JSON parameters") {
    TempDir dir;
    const char* study = R"({"dims":[5],"counts":[8],"methods":["tfww"],
                            "replications":1,"seed":3})";
    REQUIRE_MESSAGE(svpkg_run_perm_study(study, dir.file("study.csv").c_str()) == SVPKG_OK,
                    svpkg_last_error());
    CHECK(slurp(dir.file("study.csv")).find("5,8,tfww,1,") != std::string::npos);

    const char* bench = R"({"tasks":[],"horizons":[4],"seed":1})";
    REQUIRE(svpkg_run_bench(bench, dir.file("bench.csv").c_str()) == SVPKG_OK);
    CHECK(slurp(dir.file("bench.csv")) == "task,H,n,m,variant,wall_seconds,checksum\n");
}
