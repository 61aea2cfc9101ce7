/*
 * Copyright 2026 The kalamidas-nosignal Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the no-signaling verification library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a ks_status; on failure a description of the
 * most recent error on the calling thread is available from ks_last_error().
 */

#ifndef KALAMIDAS_KALAMIDAS_H
#define KALAMIDAS_KALAMIDAS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KALAMIDAS_BUILDING_LIBRARY)
#    define KS_API __declspec(dllexport)
#  else
#    define KS_API __declspec(dllimport)
#  endif
#else
#  define KS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ks_status {
  KS_OK = 0,
  KS_ERR_NULL_ARGUMENT = 1,
  KS_ERR_INVALID_ARGUMENT = 2,
  KS_ERR_DIMENSION_MISMATCH = 3,
  KS_ERR_SUBSET_MISMATCH = 4,
  KS_ERR_NOT_UNITARY = 5,
  KS_ERR_NOT_HERMITIAN = 6,
  KS_ERR_INCOMPLETE_FAMILY = 7,
  KS_ERR_TOO_LARGE = 8,
  KS_ERR_INTERNAL = 9
} ks_status;

typedef struct ks_config ks_config;
typedef struct ks_report ks_report;

KS_API const char* ks_version(void);
KS_API const char* ks_status_name(ks_status status);
/* Message for the last failed call on this thread; "" if none. */
KS_API const char* ks_last_error(void);

/* Defaults: alpha = 1, phi = 0, t = 1/sqrt(2), seed = 0, trials = 100,
 * tolerance = 1e-9, cutoffs from the adequacy rule. */
KS_API ks_status ks_config_create(ks_config** out);
KS_API void ks_config_destroy(ks_config* config);

KS_API ks_status ks_config_set_alpha(ks_config* config, double re, double im);
KS_API ks_status ks_config_set_phi(ks_config* config, double phi);
/* Rejects t outside [0, 1]. */
KS_API ks_status ks_config_set_transmittivity(ks_config* config, double t);
/* sign = +1 or -1; r = sign * sqrt(1 - t^2). */
KS_API ks_status ks_config_set_reflectivity_sign(ks_config* config, int sign);
/* mode is one of "a1", "b1", "a2", "b2", "a3", "b3". */
KS_API ks_status ks_config_set_cutoff(ks_config* config, const char* mode, int cutoff);
KS_API ks_status ks_config_get_cutoff(const ks_config* config, const char* mode, int* out);
KS_API ks_status ks_config_set_seed(ks_config* config, uint64_t seed);
KS_API ks_status ks_config_set_trials(ks_config* config, int trials);
KS_API ks_status ks_config_set_tolerance(ks_config* config, double tolerance);
KS_API ks_status ks_config_set_channel_trials(ks_config* config, int trials);
/* Checks every constraint of a complete configuration. */
KS_API ks_status ks_config_validate(const ks_config* config);

KS_API ks_status ks_run_experiment(const ks_config* config, ks_report** out);
KS_API void ks_report_destroy(ks_report* report);

/* 1 when every residual is within tolerance, 0 otherwise. */
KS_API int ks_report_passed(const ks_report* report);
/* The report as a JSON document; owned by the report. */
KS_API const char* ks_report_json(const ks_report* report);
KS_API double ks_report_trace_distance(const ks_report* report);
KS_API double ks_report_signaling_gap(const ks_report* report);
KS_API size_t ks_report_warning_count(const ks_report* report);
KS_API const char* ks_report_warning(const ks_report* report, size_t index);

/* Normalized signaling gap only (no channel battery). */
KS_API ks_status ks_signaling_gap(const ks_config* config, double* out);

#ifdef __cplusplus
}
#endif

#endif /* KALAMIDAS_KALAMIDAS_H */
