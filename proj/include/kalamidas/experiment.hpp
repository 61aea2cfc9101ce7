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

#ifndef KALAMIDAS_EXPERIMENT_HPP
#define KALAMIDAS_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "kalamidas/error.hpp"
#include "kalamidas/hilbert.hpp"
#include "kalamidas/nosignal.hpp"

namespace kalamidas::experiment {

using hilbert::HilbertSpec;
using hilbert::PureState;

/// Parameters of one run. Unless overridden, left modes get cutoff 1 and the
/// four right modes get the coherent-state adequacy cutoff for |alpha|.
struct ExperimentConfig {
  Complex alpha{1.0, 0.0};
  double phi = 0.0;
  double t = std::numbers::sqrt2 / 2.0;
  /// r = reflectivity_sign * sqrt(1 - t^2); +1 unless sweeping conventions.
  int reflectivity_sign = 1;
  std::map<Mode, int> cutoff_overrides;
  std::uint64_t seed = 0;
  int trials = 100;
  double tolerance = 1e-9;
  int channel_trials = 20;
  int occupation_cap = 3;
  int heisenberg_cutoff = 6;

  double r() const;
  int cutoff(Mode m) const;
  std::array<int, 6> cutoffs() const;
  HilbertSpec spec() const;
  /// Throws invalid_argument naming the first violated constraint.
  void validate() const;
};

int default_cutoff(Mode m, Complex alpha);

/// (1/sqrt2)(a1^dagger a2^dagger + e^{i phi} b1^dagger b2^dagger) D_a3(alpha) D_b3(alpha)|0>
PureState initial_state_with_coherent(const ExperimentConfig& config,
                                      Diagnostics* diag = nullptr);
/// (1/sqrt2)(a1^dagger a2^dagger + e^{i phi} b1^dagger b2^dagger)|0>
PureState initial_state_bare(const ExperimentConfig& config);

/// U0 Ua Ub |state>: the b-arm splitter first, then the a-arm, then (a1, b1).
PureState evolve(const PureState& state, const ExperimentConfig& config);

/// Left reduced states of both evolved preparations.
struct LeftStates {
  nosignal::DensityOperator with_coherent;
  nosignal::DensityOperator bare;
};
LeftStates evolved_left_states(const ExperimentConfig& config, Diagnostics* diag = nullptr);

/// Normalized signaling gap between the two evolved left states.
double signaling_gap(const ExperimentConfig& config);

struct Report {
  struct Heisenberg {
    std::string name;
    double residual;
  };
  struct ChannelCheck {
    int trials = 0;
    double max_residual = 0.0;
  };
  struct Selective {
    std::string outcome;
    double probability = 0.0;
    double conditional_trace_distance = 0.0;
    double mixture_residual = 0.0;
    int outcomes = 0;
    int null_outcomes = 0;
    bool contrast_found = false;
  };
  struct DensityChecks {
    int states_checked = 0;
    double max_hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double max_trace_defect = 0.0;
  };

  ExperimentConfig config;
  std::array<int, 6> cutoffs{};
  Index dimension = 0;
  std::vector<std::string> warnings;
  double leakage_initial_with_coherent = 0.0;
  double leakage_evolved_with_coherent = 0.0;
  double leakage_evolved_bare = 0.0;
  double effective_tolerance = 0.0;
  double left_trace_distance = 0.0;
  double signaling_gap = 0.0;
  std::vector<Heisenberg> heisenberg;
  double analytic_max_residual = 0.0;
  double displacement_unitarity_defect = 0.0;
  ChannelCheck unitary;
  ChannelCheck projective;
  ChannelCheck kraus;
  double kraus_completeness_defect = 0.0;
  Selective selective;
  DensityChecks density;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// The full verification battery; see README for the order of checks.
Report run_experiment(const ExperimentConfig& config);

/// Single JSON document, fixed key order, doubles with 17 significant digits.
std::string to_json(const Report& report);

}  // namespace kalamidas::experiment

#endif  // KALAMIDAS_EXPERIMENT_HPP
