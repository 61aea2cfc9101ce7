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
#include <cstring>
#include <string>

#include "doctest.h"
#include "kalamidas/kalamidas.h"

namespace {

struct Config {
  ks_config* ptr = nullptr;
  Config() { REQUIRE(ks_config_create(&ptr) == KS_OK); }
  ~Config() { ks_config_destroy(ptr); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(ks_version()) > 0);
  CHECK(std::string(ks_status_name(KS_OK)) == "ok");
  CHECK(std::string(ks_status_name(KS_ERR_NOT_UNITARY)) == "not unitary");
}

TEST_CASE("null handles are rejected") {
  CHECK(ks_config_create(nullptr) == KS_ERR_NULL_ARGUMENT);
  CHECK(ks_config_set_phi(nullptr, 0.0) == KS_ERR_NULL_ARGUMENT);
  CHECK(std::string(ks_last_error()).find("null") != std::string::npos);
  CHECK(ks_report_passed(nullptr) == 0);
  ks_config_destroy(nullptr);
  ks_report_destroy(nullptr);
}

TEST_CASE("setters validate their arguments") {
  Config c;
  CHECK(ks_config_set_transmittivity(c.ptr, 1.2) == KS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ks_last_error()).find("[0,1]") != std::string::npos);
  CHECK(ks_config_set_transmittivity(c.ptr, 0.6) == KS_OK);
  CHECK(ks_config_set_cutoff(c.ptr, "c7", 3) == KS_ERR_INVALID_ARGUMENT);
  CHECK(ks_config_set_cutoff(c.ptr, "a3", 0) == KS_ERR_INVALID_ARGUMENT);
  CHECK(ks_config_set_trials(c.ptr, 0) == KS_ERR_INVALID_ARGUMENT);
  CHECK(ks_config_set_tolerance(c.ptr, -1.0) == KS_ERR_INVALID_ARGUMENT);
  CHECK(ks_config_set_reflectivity_sign(c.ptr, 0) == KS_ERR_INVALID_ARGUMENT);
  CHECK(ks_config_set_alpha(c.ptr, NAN, 0.0) == KS_ERR_INVALID_ARGUMENT);
  CHECK(ks_config_validate(c.ptr) == KS_OK);
}

TEST_CASE("cutoffs follow alpha until overridden") {
  Config c;
  int v = 0;
  CHECK(ks_config_get_cutoff(c.ptr, "a3", &v) == KS_OK);
  CHECK(v == 16);
  CHECK(ks_config_set_alpha(c.ptr, 0.5, 0.0) == KS_OK);
  CHECK(ks_config_get_cutoff(c.ptr, "a3", &v) == KS_OK);
  CHECK(v == 13);
  CHECK(ks_config_set_cutoff(c.ptr, "a3", 20) == KS_OK);
  CHECK(ks_config_get_cutoff(c.ptr, "a3", &v) == KS_OK);
  CHECK(v == 20);
  CHECK(ks_config_get_cutoff(c.ptr, "b1", &v) == KS_OK);
  CHECK(v == 1);
}

TEST_CASE("oversized spaces are reported, not attempted") {
  Config c;
  for (const char* m : {"a2", "b2", "a3", "b3"}) REQUIRE(ks_config_set_cutoff(c.ptr, m, 90) == KS_OK);
  CHECK(ks_config_validate(c.ptr) == KS_ERR_INVALID_ARGUMENT);
  ks_report* rep = nullptr;
  CHECK(ks_run_experiment(c.ptr, &rep) == KS_ERR_INVALID_ARGUMENT);
  CHECK(rep == nullptr);
}

TEST_CASE("experiment through the C interface") {
  Config c;
  REQUIRE(ks_config_set_alpha(c.ptr, 0.5, 0.0) == KS_OK);
  REQUIRE(ks_config_set_trials(c.ptr, 10) == KS_OK);
  REQUIRE(ks_config_set_channel_trials(c.ptr, 2) == KS_OK);
  double gap = 1.0;
  CHECK(ks_signaling_gap(c.ptr, &gap) == KS_OK);
  CHECK(gap < 1e-9);

  ks_report* rep = nullptr;
  REQUIRE(ks_run_experiment(c.ptr, &rep) == KS_OK);
  CHECK(ks_report_passed(rep) == 1);
  CHECK(ks_report_trace_distance(rep) < 1e-9);
  CHECK(ks_report_signaling_gap(rep) < 1e-9);
  CHECK(ks_report_warning_count(rep) == 0);
  CHECK(ks_report_warning(rep, 0) == nullptr);
  const std::string json = ks_report_json(rep);
  CHECK(json.rfind("{\n  \"schema\": \"kalamidas-nosignal/report-v1\"", 0) == 0);
  CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
  ks_report_destroy(rep);
}

TEST_CASE("adequacy warnings reach the caller") {
  Config c;
  for (const char* m : {"a3", "b3"}) REQUIRE(ks_config_set_cutoff(c.ptr, m, 2) == KS_OK);
  for (const char* m : {"a2", "b2"}) REQUIRE(ks_config_set_cutoff(c.ptr, m, 3) == KS_OK);
  REQUIRE(ks_config_set_trials(c.ptr, 5) == KS_OK);
  REQUIRE(ks_config_set_channel_trials(c.ptr, 1) == KS_OK);
  ks_report* rep = nullptr;
  REQUIRE(ks_run_experiment(c.ptr, &rep) == KS_OK);
  CHECK(ks_report_warning_count(rep) > 0);
  CHECK(std::string(ks_report_warning(rep, 0)).find("adequacy") != std::string::npos);
  ks_report_destroy(rep);
}
