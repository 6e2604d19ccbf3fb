// Copyright 2026 The minsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the minsym library. All functions return a status code;
 * on failure minsym_last_error() holds a message for the calling thread.
 * Handles are opaque and owned by the caller once returned. */

#ifndef MINSYM_MINSYM_H_
#define MINSYM_MINSYM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MINSYM_BUILDING_LIBRARY)
#define MINSYM_API __attribute__((visibility("default")))
#else
#define MINSYM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum minsym_status {
  MINSYM_OK = 0,
  MINSYM_ERR_INVALID_ARGUMENT = 1,
  MINSYM_ERR_DOMAIN = 2,
  MINSYM_ERR_IO = 3,
  MINSYM_ERR_ALREADY_EXISTS = 4,
  MINSYM_ERR_FORMAT = 5,
  MINSYM_ERR_COUNT_MISMATCH = 6,
  MINSYM_ERR_UNSUPPORTED_VERSION = 7,
  MINSYM_ERR_PURITY_VIOLATION = 8,
  MINSYM_ERR_PARTIAL_RESULT = 9,
  MINSYM_ERR_BUFFER_TOO_SMALL = 10,
  MINSYM_ERR_INTERNAL = 11
} minsym_status;

MINSYM_API const char* minsym_version(void);
MINSYM_API const char* minsym_last_error(void);
MINSYM_API const char* minsym_status_name(minsym_status status);

/* ---- Vocabulary: code = attribute * num_values + value ---------------- */

MINSYM_API minsym_status minsym_encode_pair(int32_t num_attributes,
                                            int32_t num_values,
                                            int32_t attribute, int32_t value,
                                            int32_t* code);
MINSYM_API minsym_status minsym_decode_symbol(int32_t num_attributes,
                                              int32_t num_values, int32_t code,
                                              int32_t* attribute,
                                              int32_t* value);

/* ---- Game instances ------------------------------------------------------ */

typedef struct minsym_instance minsym_instance;

/* `values` is row-major: num_objects rows of num_attributes value indices. */
MINSYM_API minsym_status minsym_instance_create(int32_t num_attributes,
                                                int32_t num_values,
                                                const int32_t* values,
                                                size_t num_objects,
                                                int32_t target_index,
                                                minsym_instance** out);
MINSYM_API minsym_status minsym_instance_from_json(const char* json,
                                                   minsym_instance** out);
MINSYM_API minsym_status minsym_instance_read_file(const char* path,
                                                   minsym_instance** out);
MINSYM_API void minsym_instance_destroy(minsym_instance* instance);

MINSYM_API int32_t minsym_instance_num_attributes(const minsym_instance* instance);
MINSYM_API int32_t minsym_instance_num_values(const minsym_instance* instance);
MINSYM_API int32_t minsym_instance_num_objects(const minsym_instance* instance);
MINSYM_API int32_t minsym_instance_target_index(const minsym_instance* instance);
/* Value of `attribute` on object `object`, or -1 when out of range. */
MINSYM_API int32_t minsym_instance_value(const minsym_instance* instance,
                                         int32_t object, int32_t attribute);
MINSYM_API int minsym_instance_equal(const minsym_instance* a,
                                     const minsym_instance* b);

/* ---- Minimum symbols ----------------------------------------------------- */

typedef enum minsym_solver {
  MINSYM_SOLVER_ENUMERATION = 0,
  MINSYM_SOLVER_HITTING_SET = 1
} minsym_solver;

/* *min_symbols is 0 when no message can identify the target. The witness
 * attributes (ascending) are written to `witness_attributes` when
 * `capacity` allows; *witness_len always receives the witness size. */
MINSYM_API minsym_status minsym_solve(const minsym_instance* instance,
                                      minsym_solver solver,
                                      int32_t* min_symbols,
                                      int32_t* witness_attributes,
                                      size_t capacity, size_t* witness_len);

MINSYM_API minsym_status minsym_verify_witness(const minsym_instance* instance,
                                               const int32_t* attributes,
                                               const int32_t* values,
                                               size_t count, int* unique);

/* ---- Collision probabilities --------------------------------------------- */

MINSYM_API minsym_status minsym_p_class_at_least(int64_t n, int64_t m,
                                                 int64_t num_classes,
                                                 double* out);
MINSYM_API minsym_status minsym_p_exists_class_at_least(int64_t n, int64_t m,
                                                        int64_t num_classes,
                                                        double* out);

typedef struct minsym_mc_estimate {
  double probability;
  double standard_error;
  int64_t trials;
  int64_t hits;
} minsym_mc_estimate;

MINSYM_API minsym_status minsym_monte_carlo_exists(int64_t n, int64_t m,
                                                   int64_t num_classes,
                                                   int64_t trials,
                                                   uint64_t seed,
                                                   int32_t workers,
                                                   minsym_mc_estimate* out);

/* ---- Sampling ------------------------------------------------------------ */

/* counts[0] receives the unsolvable count, counts[k] the count of
 * min(|M|) = k for k in 1..num_attributes. counts_len >= num_attributes+1. */
MINSYM_API minsym_status minsym_min_m_histogram(
    int32_t num_attributes, int32_t num_values, int32_t num_distractors,
    int64_t trials, uint64_t seed, int32_t workers, int64_t* counts,
    size_t counts_len);

typedef struct minsym_sampler_config {
  int32_t num_attributes;
  int32_t num_values;
  int32_t num_distractors;
  int32_t per_bucket_target;
  const int32_t* tracked_buckets;
  size_t num_tracked_buckets;
  uint64_t seed;
  int64_t max_attempts; /* 0 = 10^4 * per_bucket_target per bucket */
  int32_t workers;
} minsym_sampler_config;

/* Defaults: 20 attributes, 4 values, 63 distractors, 10000 per bucket,
 * no buckets, seed 0, default attempts, 1 worker. */
MINSYM_API void minsym_sampler_config_init(minsym_sampler_config* config);

typedef struct minsym_dataset minsym_dataset;

/* On MINSYM_ERR_PARTIAL_RESULT *out still receives the partial dataset. */
MINSYM_API minsym_status minsym_controlled_sample(
    const minsym_sampler_config* config, minsym_dataset** out);

MINSYM_API void minsym_dataset_destroy(minsym_dataset* dataset);
MINSYM_API int32_t minsym_dataset_num_attributes(const minsym_dataset* dataset);
MINSYM_API int32_t minsym_dataset_num_values(const minsym_dataset* dataset);
MINSYM_API int32_t minsym_dataset_num_distractors(const minsym_dataset* dataset);
MINSYM_API int64_t minsym_dataset_attempts(const minsym_dataset* dataset);
MINSYM_API int minsym_dataset_complete(const minsym_dataset* dataset);
MINSYM_API size_t minsym_dataset_num_buckets(const minsym_dataset* dataset);
/* Bucket keys ascending; returns -1 for an out-of-range index. */
MINSYM_API int32_t minsym_dataset_bucket_key(const minsym_dataset* dataset,
                                             size_t index);
MINSYM_API int64_t minsym_dataset_bucket_size(const minsym_dataset* dataset,
                                              int32_t key);
/* Same layout as minsym_min_m_histogram. */
MINSYM_API minsym_status minsym_dataset_histogram(const minsym_dataset* dataset,
                                                  int64_t* counts,
                                                  size_t counts_len);
/* Copies instance `index` of bucket `key`. */
MINSYM_API minsym_status minsym_dataset_instance(const minsym_dataset* dataset,
                                                 int32_t key, size_t index,
                                                 int64_t* id,
                                                 minsym_instance** out);

/* ---- Dataset files ------------------------------------------------------- */

MINSYM_API minsym_status minsym_dataset_write(const minsym_dataset* dataset,
                                              const char* dir, int overwrite,
                                              double train_fraction);
/* verify != 0 re-solves every record and checks its bucket. */
MINSYM_API minsym_status minsym_dataset_read(const char* dir, int verify,
                                             minsym_dataset** out);
MINSYM_API minsym_status minsym_dataset_export_one_hot(
    const minsym_dataset* dataset, const char* dir, uint64_t split_seed,
    double train_fraction, int overwrite, int64_t* train_instances,
    int64_t* eval_instances);
/* Decodes an export back into instances, bucketed by stored min(|M|). */
MINSYM_API minsym_status minsym_one_hot_read(const char* dir,
                                             minsym_dataset** train,
                                             minsym_dataset** eval);

/* ---- Game ---------------------------------------------------------------- */

typedef enum minsym_policy {
  MINSYM_POLICY_ORACLE = 0,
  MINSYM_POLICY_EMPTY = 1
} minsym_policy;

typedef struct minsym_eval_result {
  int64_t episodes;
  double accuracy;
  double standard_error;
  double expected_accuracy;
} minsym_eval_result;

MINSYM_API minsym_status minsym_oracle_message(const minsym_instance* instance,
                                               int32_t max_length,
                                               int32_t* symbols,
                                               size_t capacity, size_t* length);
/* Number of candidates consistent with the message, and the oracle
 * receiver's success probability for it. */
MINSYM_API minsym_status minsym_message_survivors(
    const minsym_instance* instance, const int32_t* symbols, size_t length,
    int32_t* survivors, double* expected_success);

/* bucket < 0 evaluates every bucket. log_path may be NULL; append_log != 0
 * appends to an existing log instead of truncating it. */
MINSYM_API minsym_status minsym_evaluate(const minsym_dataset* dataset,
                                         int32_t bucket, int32_t max_length,
                                         minsym_policy sender,
                                         int32_t episodes_per_instance,
                                         uint64_t seed, int32_t workers,
                                         const char* log_path, int append_log,
                                         minsym_eval_result* out);

/* ---- Analysis ------------------------------------------------------------ */

typedef struct minsym_curve minsym_curve;

typedef struct minsym_curve_row {
  int32_t max_length;
  double accuracy;
  double standard_error;
  double expected_accuracy;
  int64_t episodes;
} minsym_curve_row;

MINSYM_API minsym_status minsym_curve_table_write(const char* path,
                                                  const char* source,
                                                  const minsym_curve_row* rows,
                                                  size_t count);
MINSYM_API minsym_status minsym_curve_create(const int32_t* lengths,
                                             const double* accuracies,
                                             size_t count, minsym_curve** out);
/* column: "accuracy" (NULL) or "expected_accuracy"; epoch < 0 takes each
 * length's last epoch. */
MINSYM_API minsym_status minsym_curve_read(const char* path,
                                           const char* column, int32_t epoch,
                                           minsym_curve** out);
MINSYM_API void minsym_curve_destroy(minsym_curve* curve);
MINSYM_API size_t minsym_curve_size(const minsym_curve* curve);
MINSYM_API minsym_status minsym_curve_point(const minsym_curve* curve,
                                            size_t index, int32_t* max_length,
                                            double* accuracy);
MINSYM_API minsym_status minsym_effective_symbols(const minsym_curve* curve,
                                                  double epsilon,
                                                  int32_t* out);
MINSYM_API minsym_status minsym_accuracy_gap(const minsym_curve* curve,
                                             int32_t max_length, double* out);

typedef struct minsym_message_stats minsym_message_stats;

MINSYM_API minsym_status minsym_message_stats_read(const char* path,
                                                   minsym_message_stats** out);
MINSYM_API void minsym_message_stats_destroy(minsym_message_stats* stats);
MINSYM_API int64_t minsym_message_stats_total(const minsym_message_stats* stats);
MINSYM_API int64_t minsym_message_stats_successes(
    const minsym_message_stats* stats);
MINSYM_API size_t minsym_message_stats_num_lengths(
    const minsym_message_stats* stats);
MINSYM_API minsym_status minsym_message_stats_length(
    const minsym_message_stats* stats, size_t index, int32_t* length,
    int64_t* count);
MINSYM_API size_t minsym_message_stats_num_symbols(
    const minsym_message_stats* stats);
MINSYM_API minsym_status minsym_message_stats_symbol(
    const minsym_message_stats* stats, size_t index, int32_t* code,
    int64_t* count);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* MINSYM_MINSYM_H_ */
