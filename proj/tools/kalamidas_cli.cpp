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

// Command-line front end. Runs the full verification suite for one
// configuration and writes the JSON report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kalamidas/kalamidas.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
  std::cerr << "kalamidas: " << message << "\n";
  return kExitUsage;
}

struct ConfigGuard {
  ks_config* ptr = nullptr;
  ~ConfigGuard() { ks_config_destroy(ptr); }
};

struct ReportGuard {
  ks_report* ptr = nullptr;
  ~ReportGuard() { ks_report_destroy(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify that the left reduced state of the six-mode interferometer "
               "does not depend on right-side operations."};
  app.set_version_flag("--version", ks_version());

  double alpha_re = 1.0;
  double alpha_im = 0.0;
  double phi = 0.0;
  double t = 0.7071067811865476;
  int r_sign = 1;
  std::vector<std::string> cutoffs;
  std::uint64_t seed = 0;
  int trials = 100;
  double tolerance = 1e-9;
  int channel_trials = 20;
  std::string emit = "-";
  std::string format = "json";

  app.add_option("--alpha-re", alpha_re, "Real part of the coherent amplitude")
      ->capture_default_str();
  app.add_option("--alpha-im", alpha_im, "Imaginary part of the coherent amplitude")
      ->capture_default_str();
  app.add_option("--phi", phi, "Phase of the photon-pair source")->capture_default_str();
  app.add_option("--t", t, "Beam-splitter transmittivity, in [0,1]")->capture_default_str();
  app.add_option("--r-sign", r_sign, "Sign of the reflectivity (+1 or -1)")
      ->capture_default_str();
  app.add_option("--cutoff", cutoffs,
                 "Per-mode Fock cutoff as mode=value, repeatable "
                 "(default: 1 for a1,b1; adequacy rule for the right modes)")
      ->type_name("MODE=N");
  app.add_option("--seed", seed, "Seed for observables and random channels")
      ->capture_default_str();
  app.add_option("--trials", trials, "Number of random left observables")
      ->capture_default_str();
  app.add_option("--channel-trials", channel_trials,
                 "Random unitaries and Kraus families per evolved state")
      ->capture_default_str();
  app.add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();
  app.add_option("--emit", emit, "Report destination, '-' for stdout")->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  ConfigGuard config;
  if (ks_config_create(&config.ptr) != KS_OK) return usage_error(ks_last_error());

  auto check = [](ks_status status) { return status == KS_OK; };
  if (!check(ks_config_set_alpha(config.ptr, alpha_re, alpha_im)) ||
      !check(ks_config_set_phi(config.ptr, phi)) ||
      !check(ks_config_set_transmittivity(config.ptr, t)) ||
      !check(ks_config_set_reflectivity_sign(config.ptr, r_sign)) ||
      !check(ks_config_set_seed(config.ptr, seed)) ||
      !check(ks_config_set_trials(config.ptr, trials)) ||
      !check(ks_config_set_channel_trials(config.ptr, channel_trials)) ||
      !check(ks_config_set_tolerance(config.ptr, tolerance))) {
    return usage_error(ks_last_error());
  }
  for (const auto& item : cutoffs) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) return usage_error("--cutoff expects MODE=N, got '" + item + "'");
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      return usage_error("--cutoff expects an integer value, got '" + item + "'");
    }
    if (!check(ks_config_set_cutoff(config.ptr, item.substr(0, eq).c_str(), value))) {
      return usage_error(ks_last_error());
    }
  }
  if (!check(ks_config_validate(config.ptr))) return usage_error(ks_last_error());

  ReportGuard report;
  const ks_status status = ks_run_experiment(config.ptr, &report.ptr);
  if (status == KS_ERR_INVALID_ARGUMENT || status == KS_ERR_TOO_LARGE) {
    return usage_error(ks_last_error());
  }
  if (status != KS_OK) {
    std::cerr << "kalamidas: " << ks_status_name(status) << ": " << ks_last_error() << "\n";
    return kExitFail;
  }

  for (std::size_t i = 0; i < ks_report_warning_count(report.ptr); ++i) {
    std::cerr << "kalamidas: warning: " << ks_report_warning(report.ptr, i) << "\n";
  }

  const char* json = ks_report_json(report.ptr);
  if (emit == "-") {
    std::fputs(json, stdout);
    std::fflush(stdout);
  } else {
    std::ofstream out(emit, std::ios::binary);
    if (!out) return usage_error("cannot open '" + emit + "' for writing");
    out << json;
    if (!out) return usage_error("failed writing '" + emit + "'");
  }

  const bool passed = ks_report_passed(report.ptr) == 1;
  std::cerr << "kalamidas: verdict " << (passed ? "pass" : "fail") << "\n";
  return passed ? kExitPass : kExitFail;
}
