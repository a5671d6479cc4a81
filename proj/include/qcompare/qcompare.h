/*
 * Copyright 2026 The qcompare Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QCOMPARE_QCOMPARE_H_
#define QCOMPARE_QCOMPARE_H_

/*
 * C interface to the qcompare library.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a qc_status; on failure the message is available
 * from qc_context_last_error() until the next call on the same context.
 * A context must not be used from two threads at once; distinct contexts
 * are independent. Strings returned through `char**` are heap-allocated and
 * released with qc_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define QC_API __declspec(dllexport)
#else
#  define QC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum qc_status {
  QC_OK = 0,
  QC_ERR_INTERNAL = 1,
  QC_ERR_INVALID = 2,   /* schema, normalization, shape, domain, precondition */
  QC_ERR_NUMERICAL = 3, /* numerical-consistency failure */
  QC_ERR_CAPACITY = 4   /* dense construction too large */
} qc_status;

typedef enum qc_mode {
  QC_MODE_ANY = 0, /* at least one particle differs */
  QC_MODE_ALL = 1  /* all particles differ */
} qc_mode;

typedef enum qc_which { QC_CERT_YES = 0, QC_CERT_NO = 1 } qc_which;

typedef struct qc_context qc_context;
typedef struct qc_states qc_states;
typedef struct qc_gram qc_gram;

typedef struct qc_dims {
  uint64_t total;
  uint64_t sym;
  uint64_t anti;
  uint64_t asym;
  uint64_t na;
} qc_dims;

typedef struct qc_probabilities {
  double conclusive;
  double inconclusive;
  double permanent;
  double determinant;
} qc_probabilities;

typedef struct qc_mc_report {
  double estimate;
  double std_error;
  double analytic;
  uint64_t samples;
  uint64_t seed;
} qc_mc_report;

typedef struct qc_outcome_counts {
  uint64_t conclusive;
  uint64_t inconclusive;
  uint64_t shots;
} qc_outcome_counts;

typedef struct qc_counterexample {
  double lhs;
  double rhs;
  int asserted;
  int decreased;
} qc_counterexample;

QC_API const char* qc_version(void);
QC_API const char* qc_status_name(qc_status status);

QC_API qc_context* qc_context_create(void);
QC_API void qc_context_free(qc_context* ctx);
QC_API qc_status qc_context_set_tolerances(qc_context* ctx, double psd_tol, double rank_tol);
QC_API qc_status qc_context_set_threads(qc_context* ctx, unsigned threads);
QC_API const char* qc_context_last_error(const qc_context* ctx);

QC_API void qc_string_free(char* s);

/* States: {"dim": D, "states": [[[re, im], ...], ...]}. */
QC_API qc_status qc_states_from_json(qc_context* ctx, const char* json, qc_states** out);
/* `re_im` holds count*dim interleaved (re, im) pairs, state-major. */
QC_API qc_status qc_states_from_amplitudes(qc_context* ctx, size_t dim, size_t count,
                                           const double* re_im, qc_states** out);
QC_API void qc_states_free(qc_states* states);
QC_API size_t qc_states_count(const qc_states* states);
QC_API size_t qc_states_dim(const qc_states* states);

/* Gram files: {"gram": [[[re, im], ...], ...]} or a state file. */
QC_API qc_status qc_gram_from_states(qc_context* ctx, const qc_states* states, qc_gram** out);
QC_API qc_status qc_gram_from_json(qc_context* ctx, const char* json, qc_gram** out);
QC_API void qc_gram_free(qc_gram* gram);
QC_API size_t qc_gram_size(const qc_gram* gram);
QC_API qc_status qc_gram_entry(const qc_gram* gram, size_t i, size_t j, double* re, double* im);
/* Renders a gram file accepted back by qc_gram_from_json. */
QC_API qc_status qc_gram_to_json(qc_context* ctx, const qc_gram* gram, char** out);

QC_API qc_status qc_subspace_dims(qc_context* ctx, size_t d, size_t n, qc_dims* out);

QC_API qc_status qc_probabilities_compute(qc_context* ctx, const qc_gram* gram, qc_mode mode,
                                          qc_probabilities* out);
QC_API qc_status qc_analytic_avg(qc_context* ctx, size_t d, size_t n, qc_mode mode, double* out);
QC_API qc_status qc_monte_carlo_avg(qc_context* ctx, size_t d, size_t n, qc_mode mode,
                                    uint64_t samples, uint64_t seed, qc_mc_report* out);
/* `spectra` holds n spectra of length d each, row-major. */
QC_API qc_status qc_mixed_avg(qc_context* ctx, size_t d, size_t n, const double* spectra,
                              qc_mode mode, double* out);
QC_API qc_status qc_simulate(qc_context* ctx, const qc_states* states, qc_mode mode,
                             uint64_t shots, uint64_t seed, qc_outcome_counts* out);

/* JSON reports. */
QC_API qc_status qc_identicality(qc_context* ctx, const qc_states* states, size_t n,
                                 char** out_json);
QC_API qc_status qc_monotone(qc_context* ctx, const qc_gram* initial, const qc_gram* final_,
                             char** out_json);
QC_API qc_status qc_conjecture_search(qc_context* ctx, size_t n, uint64_t trials, uint64_t seed,
                                      char** out_json);
QC_API qc_status qc_overlap_certificate(qc_context* ctx, size_t d, double omega, qc_which which,
                                        double margin, uint64_t seed, char** out_json);

QC_API qc_status qc_depolarizing_counterexample(qc_context* ctx, size_t d, size_t n,
                                                qc_counterexample* out);

#ifdef __cplusplus
}
#endif

#endif  // QCOMPARE_QCOMPARE_H_
