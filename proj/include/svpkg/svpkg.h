/*
 * svpkg - Shapley-value sensitivity analysis for policy-augmented
 * knowledge-graph process models.
 *
 * C API over the C++ core: opaque handles, integer status codes, thread-local
 * error messages. All functions are safe to call from multiple threads as
 * long as a handle is not used concurrently from two threads.
 */
#ifndef SVPKG_H
#define SVPKG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SVPKG_API __declspec(dllexport)
#else
#define SVPKG_API __attribute__((visibility("default")))
#endif

typedef int32_t svpkg_status;

enum {
    SVPKG_OK = 0,
    SVPKG_ERR_CONFIG = 1,
    SVPKG_ERR_PARSE = 2,
    SVPKG_ERR_NON_MONOTONE_TIME = 3,
    SVPKG_ERR_NON_POSITIVE_VOLUME = 4,
    SVPKG_ERR_NON_FINITE_STATE = 5,
    SVPKG_ERR_SINGULAR_DESIGN = 6,
    SVPKG_ERR_CHAIN_DIVERGED = 7,
    SVPKG_ERR_DIMENSION_UNSUPPORTED = 8,
    SVPKG_ERR_DEGENERATE_NORM = 9,
    SVPKG_ERR_ROOT_NOT_BRACKETED = 10,
    SVPKG_ERR_ODD_COUNT_FOR_ANTITHETIC = 11,
    SVPKG_ERR_ENSEMBLE_TOO_SMALL = 12,
    SVPKG_ERR_INSTANCE_TOO_LARGE = 13,
    SVPKG_ERR_CHECKSUM_MISMATCH = 14,
    SVPKG_ERR_IO = 15,
    SVPKG_ERR_INVALID_ARGUMENT = 16,
    SVPKG_ERR_UNKNOWN = 99
};

SVPKG_API const char* svpkg_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
SVPKG_API const char* svpkg_last_error(void);

/* ------------------------------------------------------------------ */
/* Command runners. `config_json` is a complete configuration document */
/* (see README for the schema); artifacts are written to the paths.    */

SVPKG_API svpkg_status svpkg_run_simulate(const char* config_json, const char* out_csv);

SVPKG_API svpkg_status svpkg_run_fit(const char* config_json, const char* data_csv,
                                     const char* out_posterior_json);

SVPKG_API svpkg_status svpkg_run_sv(const char* config_json, const char* out_csv,
                                    const char* out_json);

/* params_json: {"dims":[...], "counts":[...], "methods":[...],
 *               "replications":N, "seed":N, "sobol_cube":bool} */
SVPKG_API svpkg_status svpkg_run_perm_study(const char* params_json, const char* out_csv);

/* params_json: {"tasks":[...], "horizons":[...], "seed":N,
 *               "min_seconds":x} */
SVPKG_API svpkg_status svpkg_run_bench(const char* params_json, const char* out_csv);

/* ------------------------------------------------------------------ */
/* Permutation sampling handles.                                       */

typedef struct svpkg_permutations svpkg_permutations;

/* method: "uniform" | "bmt" | "sct" | "tfww" | "tfww-vrt" */
SVPKG_API svpkg_status svpkg_permutations_sample(int32_t s, int32_t count,
                                                 const char* method, uint64_t seed,
                                                 svpkg_permutations** out);

SVPKG_API int32_t svpkg_permutations_count(const svpkg_permutations* batch);
SVPKG_API int32_t svpkg_permutations_size(const svpkg_permutations* batch);

/* Copies row `index` (0-based) into `out` (capacity >= size), 1-based values. */
SVPKG_API svpkg_status svpkg_permutations_row(const svpkg_permutations* batch,
                                              int32_t index, int32_t* out,
                                              int32_t capacity);

SVPKG_API svpkg_status svpkg_permutations_discrepancy(const svpkg_permutations* batch,
                                                      double* out);

SVPKG_API svpkg_status svpkg_permutations_write_csv(const svpkg_permutations* batch,
                                                    const char* path);

SVPKG_API void svpkg_permutations_free(svpkg_permutations* batch);

/* ------------------------------------------------------------------ */
/* Sample-size planning.                                               */

SVPKG_API svpkg_status svpkg_sample_size_variance(double sigma2, double delta, double eps,
                                                  int64_t* out);

SVPKG_API svpkg_status svpkg_sample_size_range(double range, double delta, double eps,
                                               int64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* SVPKG_H */
