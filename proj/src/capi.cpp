// Copyright 2026 The kalamidas-nosignal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "kalamidas/experiment.hpp"
#include "kalamidas/kalamidas.h"

struct ks_config {
  kalamidas::experiment::ExperimentConfig value;
};

struct ks_report {
  kalamidas::experiment::Report value;
  std::string json;
};

namespace {

thread_local std::string last_error;

ks_status to_status(kalamidas::ErrorCode code) {
  using kalamidas::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return KS_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return KS_ERR_DIMENSION_MISMATCH;
    case ErrorCode::subset_mismatch: return KS_ERR_SUBSET_MISMATCH;
    case ErrorCode::not_unitary: return KS_ERR_NOT_UNITARY;
    case ErrorCode::not_hermitian: return KS_ERR_NOT_HERMITIAN;
    case ErrorCode::incomplete_family: return KS_ERR_INCOMPLETE_FAMILY;
    case ErrorCode::too_large: return KS_ERR_TOO_LARGE;
  }
  return KS_ERR_INTERNAL;
}

ks_status fail(ks_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
ks_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const kalamidas::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KS_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(KS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KS_ERR_INTERNAL, "unknown error");
  }
}

#define KS_REQUIRE(ptr)                                                   \
  do {                                                                    \
    if ((ptr) == nullptr) return fail(KS_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* ks_version(void) { return "1.0.0"; }

const char* ks_status_name(ks_status status) {
  switch (status) {
    case KS_OK: return "ok";
    case KS_ERR_NULL_ARGUMENT: return "null argument";
    case KS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KS_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case KS_ERR_SUBSET_MISMATCH: return "subset mismatch";
    case KS_ERR_NOT_UNITARY: return "not unitary";
    case KS_ERR_NOT_HERMITIAN: return "not hermitian";
    case KS_ERR_INCOMPLETE_FAMILY: return "incomplete family";
    case KS_ERR_TOO_LARGE: return "too large";
    case KS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ks_last_error(void) { return last_error.c_str(); }

ks_status ks_config_create(ks_config** out) {
  KS_REQUIRE(out);
  return guarded([&] {
    *out = new ks_config{};
    return KS_OK;
  });
}

void ks_config_destroy(ks_config* config) { delete config; }

ks_status ks_config_set_alpha(ks_config* config, double re, double im) {
  KS_REQUIRE(config);
  if (!std::isfinite(re) || !std::isfinite(im)) {
    return fail(KS_ERR_INVALID_ARGUMENT, "alpha must be finite");
  }
  config->value.alpha = {re, im};
  return KS_OK;
}

ks_status ks_config_set_phi(ks_config* config, double phi) {
  KS_REQUIRE(config);
  if (!std::isfinite(phi)) return fail(KS_ERR_INVALID_ARGUMENT, "phi must be finite");
  config->value.phi = phi;
  return KS_OK;
}

ks_status ks_config_set_transmittivity(ks_config* config, double t) {
  KS_REQUIRE(config);
  if (!(t >= 0.0 && t <= 1.0)) {
    return fail(KS_ERR_INVALID_ARGUMENT,
                "t = " + std::to_string(t) + " is outside the allowed range [0,1]");
  }
  config->value.t = t;
  return KS_OK;
}

ks_status ks_config_set_reflectivity_sign(ks_config* config, int sign) {
  KS_REQUIRE(config);
  if (sign != 1 && sign != -1) return fail(KS_ERR_INVALID_ARGUMENT, "sign must be +1 or -1");
  config->value.reflectivity_sign = sign;
  return KS_OK;
}

ks_status ks_config_set_cutoff(ks_config* config, const char* mode, int cutoff) {
  KS_REQUIRE(config);
  KS_REQUIRE(mode);
  const auto m = kalamidas::parse_mode(mode);
  if (!m) return fail(KS_ERR_INVALID_ARGUMENT, std::string("unknown mode '") + mode + "'");
  if (cutoff < 1) return fail(KS_ERR_INVALID_ARGUMENT, "cutoff must be >= 1");
  config->value.cutoff_overrides[*m] = cutoff;
  return KS_OK;
}

ks_status ks_config_get_cutoff(const ks_config* config, const char* mode, int* out) {
  KS_REQUIRE(config);
  KS_REQUIRE(mode);
  KS_REQUIRE(out);
  const auto m = kalamidas::parse_mode(mode);
  if (!m) return fail(KS_ERR_INVALID_ARGUMENT, std::string("unknown mode '") + mode + "'");
  *out = config->value.cutoff(*m);
  return KS_OK;
}

ks_status ks_config_set_seed(ks_config* config, uint64_t seed) {
  KS_REQUIRE(config);
  config->value.seed = seed;
  return KS_OK;
}

ks_status ks_config_set_trials(ks_config* config, int trials) {
  KS_REQUIRE(config);
  if (trials < 1) return fail(KS_ERR_INVALID_ARGUMENT, "trials must be >= 1");
  config->value.trials = trials;
  return KS_OK;
}

ks_status ks_config_set_tolerance(ks_config* config, double tolerance) {
  KS_REQUIRE(config);
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    return fail(KS_ERR_INVALID_ARGUMENT, "tolerance must be a positive number");
  }
  config->value.tolerance = tolerance;
  return KS_OK;
}

ks_status ks_config_set_channel_trials(ks_config* config, int trials) {
  KS_REQUIRE(config);
  if (trials < 1) return fail(KS_ERR_INVALID_ARGUMENT, "channel trials must be >= 1");
  config->value.channel_trials = trials;
  return KS_OK;
}

ks_status ks_config_validate(const ks_config* config) {
  KS_REQUIRE(config);
  return guarded([&] {
    config->value.validate();
    return KS_OK;
  });
}

ks_status ks_run_experiment(const ks_config* config, ks_report** out) {
  KS_REQUIRE(config);
  KS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto* rep = new ks_report{kalamidas::experiment::run_experiment(config->value), {}};
    rep->json = kalamidas::experiment::to_json(rep->value);
    *out = rep;
    return KS_OK;
  });
}

void ks_report_destroy(ks_report* report) { delete report; }

int ks_report_passed(const ks_report* report) {
  return report != nullptr && report->value.passed() ? 1 : 0;
}

const char* ks_report_json(const ks_report* report) {
  return report != nullptr ? report->json.c_str() : "";
}

double ks_report_trace_distance(const ks_report* report) {
  return report != nullptr ? report->value.left_trace_distance : NAN;
}

double ks_report_signaling_gap(const ks_report* report) {
  return report != nullptr ? report->value.signaling_gap : NAN;
}

size_t ks_report_warning_count(const ks_report* report) {
  return report != nullptr ? report->value.warnings.size() : 0;
}

const char* ks_report_warning(const ks_report* report, size_t index) {
  if (report == nullptr || index >= report->value.warnings.size()) return nullptr;
  return report->value.warnings[index].c_str();
}

ks_status ks_signaling_gap(const ks_config* config, double* out) {
  KS_REQUIRE(config);
  KS_REQUIRE(out);
  return guarded([&] {
    *out = kalamidas::experiment::signaling_gap(config->value);
    return KS_OK;
  });
}

}  // extern "C"
