/*
 * cdtree C interface.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function (which accepts NULL). Every fallible call returns
 * a cdt_status; on failure cdt_last_error() describes the problem for the
 * calling thread until its next failing call.
 */
#ifndef CDTREE_CDTREE_H_
#define CDTREE_CDTREE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CDT_BUILDING_LIBRARY)
#define CDT_API __attribute__((visibility("default")))
#else
#define CDT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cdt_status {
  CDT_OK = 0,
  CDT_ERR_INVALID_ARGUMENT = 1,
  CDT_ERR_LENGTH_MISMATCH = 2,
  CDT_ERR_NON_FINITE = 3,
  CDT_ERR_NON_INTEGER = 4,
  CDT_ERR_TOO_SMALL = 5,
  CDT_ERR_EMPTY_INPUT = 6,
  CDT_ERR_LABEL_OUT_OF_RANGE = 7,
  CDT_ERR_CONFIG_INVALID = 8,
  CDT_ERR_IO = 9,
  CDT_ERR_PARSE = 10,
  CDT_ERR_INTERNAL = 11
} cdt_status;

typedef enum cdt_kind { CDT_DISCRETE = 0, CDT_CONTINUOUS = 1 } cdt_kind;

typedef enum cdt_direction {
  CDT_X_TO_Y = 0,
  CDT_Y_TO_X = 1,
  CDT_ABSTAIN = 2
} cdt_direction;

/* Tree depth, node count, leaf count, mean path length, residual entropy,
 * interpolation hardness. */
typedef enum cdt_criterion {
  CDT_TD = 0,
  CDT_TN = 1,
  CDT_TL = 2,
  CDT_PL = 3,
  CDT_RE = 4,
  CDT_IH = 5
} cdt_criterion;

#define CDT_CRITERION_COUNT 6

typedef enum cdt_noise_family {
  CDT_NOISE_DISCRETE_UNIFORM = 0,
  CDT_NOISE_DISCRETE_GAUSSIAN = 1,
  CDT_NOISE_CONTINUOUS_UNIFORM = 2,
  CDT_NOISE_CONTINUOUS_GAUSSIAN = 3
} cdt_noise_family;

typedef enum cdt_noise_mode { CDT_ADDITIVE = 0, CDT_MULTIPLICATIVE = 1 } cdt_noise_mode;

typedef enum cdt_normalization {
  CDT_NORM_CARDINALITY = 0,
  CDT_NORM_SHANNON = 1
} cdt_normalization;

typedef struct cdt_dataset cdt_dataset;
typedef struct cdt_labeled_dataset cdt_labeled_dataset;
typedef struct cdt_manifest cdt_manifest;
typedef struct cdt_report cdt_report;

/* Orientation multipliers (+1 or -1), indexed by cdt_criterion. */
typedef struct cdt_sign_config {
  int8_t discrete[CDT_CRITERION_COUNT];
  int8_t continuous[CDT_CRITERION_COUNT];
} cdt_sign_config;

typedef struct cdt_eval_options {
  uint32_t n_bins;
  cdt_sign_config signs;
  cdt_normalization normalization;
} cdt_eval_options;

typedef struct cdt_score {
  cdt_criterion criterion;
  double j_raw;
  double j_oriented;
  double measure_xy;
  double measure_yx;
  cdt_direction decision;
} cdt_score;

typedef struct cdt_noise_spec {
  cdt_noise_family family;
  uint32_t cardinality; /* discrete families only */
} cdt_noise_spec;

typedef struct cdt_gen_config {
  uint32_t n_samples;
  cdt_noise_spec noise_x;
  cdt_noise_spec noise_y;
  cdt_noise_mode mode;
  double flip_probability;
  uint64_t seed;
} cdt_gen_config;

typedef struct cdt_bench_config {
  uint32_t n_datasets;
  cdt_gen_config gen; /* gen.seed is the master seed */
  uint32_t n_bins;
  uint32_t histogram_bins;
  cdt_sign_config signs;
  cdt_normalization normalization;
  uint32_t threads; /* 0 = hardware concurrency */
} cdt_bench_config;

typedef struct cdt_summary {
  cdt_criterion criterion;
  uint64_t n_correct;
  uint64_t n_incorrect;
  uint64_t n_abstain;
  double accuracy;
  double accuracy_excluding_abstentions;
  double abstention_rate;
  double mean_measure_causal;
  double mean_measure_anticausal;
} cdt_summary;

CDT_API const char* cdt_version(void);
CDT_API const char* cdt_last_error(void);
CDT_API const char* cdt_status_name(cdt_status status);
CDT_API const char* cdt_criterion_name(cdt_criterion criterion); /* "J_TD" */
CDT_API const char* cdt_direction_name(cdt_direction direction); /* "x->y" */
/* Accepts "TD" or "J_TD". */
CDT_API cdt_status cdt_parse_criterion(const char* text, cdt_criterion* out);

CDT_API void cdt_sign_config_default(cdt_sign_config* out);
CDT_API void cdt_eval_options_default(cdt_eval_options* out);
CDT_API void cdt_gen_config_default(cdt_gen_config* out);
CDT_API void cdt_bench_config_default(cdt_bench_config* out);

/* Datasets. Inputs are copied and validated. */
CDT_API cdt_status cdt_dataset_create(const double* x, const double* y, size_t n,
                                      cdt_kind kind, cdt_dataset** out);
CDT_API cdt_status cdt_dataset_read_csv(const char* path, cdt_kind kind,
                                        cdt_dataset** out);
CDT_API cdt_status cdt_dataset_write_csv(const cdt_dataset* data, const char* path);
CDT_API size_t cdt_dataset_size(const cdt_dataset* data);
CDT_API cdt_kind cdt_dataset_kind(const cdt_dataset* data);
/* Copies the columns into caller arrays of cdt_dataset_size() elements. */
CDT_API cdt_status cdt_dataset_columns(const cdt_dataset* data, double* x, double* y);
CDT_API void cdt_dataset_free(cdt_dataset* data);

/* Scores all six criteria; out receives them in cdt_criterion order.
 * options may be NULL for the defaults. */
CDT_API cdt_status cdt_evaluate(const cdt_dataset* data, const cdt_eval_options* options,
                                cdt_score out[CDT_CRITERION_COUNT]);
CDT_API cdt_status cdt_decide(double j, cdt_direction* out);

/* Synthetic data. Dataset `index` uses a seed derived from config->seed. */
CDT_API cdt_status cdt_generate(const cdt_gen_config* config, uint64_t index,
                                cdt_labeled_dataset** out);
/* Borrowed; valid until the labeled dataset is freed. */
CDT_API const cdt_dataset* cdt_labeled_data(const cdt_labeled_dataset* ds);
CDT_API cdt_direction cdt_labeled_truth(const cdt_labeled_dataset* ds);
CDT_API uint64_t cdt_labeled_seed(const cdt_labeled_dataset* ds);
CDT_API void cdt_labeled_free(cdt_labeled_dataset* ds);

CDT_API cdt_status cdt_manifest_create(const cdt_gen_config* config, cdt_manifest** out);
CDT_API cdt_status cdt_manifest_add(cdt_manifest* manifest, const cdt_labeled_dataset* ds,
                                    uint64_t index, const char* file_name);
CDT_API cdt_status cdt_manifest_write(const cdt_manifest* manifest, const char* path);
CDT_API void cdt_manifest_free(cdt_manifest* manifest);

/* Benchmark over config->n_datasets generated datasets. */
CDT_API cdt_status cdt_benchmark_run(const cdt_bench_config* config, cdt_report** out);
CDT_API cdt_status cdt_report_summary(const cdt_report* report, cdt_criterion criterion,
                                      cdt_summary* out);
/* Borrowed arrays: edges has *n_bins + 1 entries, the counts *n_bins. */
CDT_API cdt_status cdt_report_histogram(const cdt_report* report, cdt_criterion criterion,
                                        const double** edges, const uint64_t** counts_xy,
                                        const uint64_t** counts_yx, size_t* n_bins);
CDT_API double cdt_report_duration(const cdt_report* report);
/* JSON text; release with cdt_string_free. */
CDT_API cdt_status cdt_report_to_json(const cdt_report* report, int include_duration,
                                      char** out);
CDT_API cdt_status cdt_report_write_json(const cdt_report* report, const char* path);
CDT_API void cdt_report_free(cdt_report* report);

CDT_API void cdt_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CDTREE_CDTREE_H_ */
