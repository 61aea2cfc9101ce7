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

#include <numbers>

#include "doctest.h"
#include "json.hpp"
#include "kalamidas/experiment.hpp"
#include "kalamidas/nosignal.hpp"
#include "oracles.hpp"

using namespace kalamidas;
using namespace kalamidas::experiment;

namespace {

std::vector<int> cutoff_vector(const ExperimentConfig& c) {
  const auto a = c.cutoffs();
  return {a.begin(), a.end()};
}

double mean_number(const hilbert::PureState& s, Mode m) {
  double acc = 0.0;
  for (Index i = 0; i < s.spec().dim(); ++i) {
    acc += s.spec().occupation(i, m) * std::norm(s.amplitudes()(i));
  }
  return acc;
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.alpha = 0.5;
  c.trials = 10;
  c.channel_trials = 2;
  return c;
}

}  // namespace

TEST_CASE("configuration defaults and validation") {
  ExperimentConfig c;
  CHECK(c.cutoff(Mode::a1) == 1);
  CHECK(c.cutoff(Mode::b1) == 1);
  for (Mode m : kRightModes) CHECK(c.cutoff(m) == 16);
  CHECK(c.spec().dim() == 4 * 17 * 17 * 17 * 17);
  CHECK(c.r() == doctest::Approx(std::numbers::sqrt2 / 2));
  c.reflectivity_sign = -1;
  CHECK(c.r() == doctest::Approx(-std::numbers::sqrt2 / 2));

  c.t = 1.2;
  try {
    c.validate();
    FAIL("t = 1.2 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
    CHECK(std::string(e.what()).find("[0, 1]") != std::string::npos);
  }
  c = ExperimentConfig{};
  c.cutoff_overrides[Mode::a3] = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = ExperimentConfig{};
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = ExperimentConfig{};
  for (Mode m : kRightModes) c.cutoff_overrides[m] = 100;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("bare initial state") {
  ExperimentConfig c;
  for (Mode m : kRightModes) c.cutoff_overrides[m] = 2;
  const auto psi = initial_state_bare(c);
  const std::vector<int> a = {1, 0, 1, 0, 0, 0};
  const std::vector<int> b = {0, 1, 0, 1, 0, 0};
  const double h = 1 / std::numbers::sqrt2;
  CHECK(std::abs(psi.amplitude(a) - h) < 1e-15);
  CHECK(std::abs(psi.amplitude(b) - h) < 1e-15);
  CHECK(psi.norm_squared() == doctest::Approx(1.0));
  CHECK(mean_number(psi, Mode::a3) == 0.0);
  CHECK(mean_number(psi, Mode::b3) == 0.0);
  c.phi = std::numbers::pi;
  const auto flipped = initial_state_bare(c);
  CHECK(std::abs(flipped.amplitude(b) + h) < 1e-15);
}

TEST_CASE("coherent initial state carries |alpha|^2 in a3 and b3") {
  ExperimentConfig c;
  c.alpha = {0.4, -0.3};
  const auto psi = initial_state_with_coherent(c);
  CHECK(mean_number(psi, Mode::a3) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(mean_number(psi, Mode::b3) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(mean_number(psi, Mode::a2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("transparent side splitters leave only the central one acting") {
  ExperimentConfig c;
  c.t = 1.0;
  c.phi = 0.7;
  for (Mode m : kRightModes) c.cutoff_overrides[m] = 2;
  const auto out = evolve(initial_state_bare(c), c);
  const Eigen::VectorXcd want = oracle::evolved_direct(cutoff_vector(c), 0.0, 1.0, 0.0, c.phi);
  CHECK((out.amplitudes() - want).norm() < 1e-13);
  const std::vector<int> a1a2 = {1, 0, 1, 0, 0, 0};
  CHECK(std::abs(out.amplitude(a1a2) - 0.5) < 1e-15);
}

TEST_CASE("bare evolution matches the direct construction") {
  for (double t : {0.6, std::numbers::sqrt2 / 2, 0.9}) {
    for (double phi : {0.0, std::numbers::pi / 3, std::numbers::pi}) {
      for (int sign : {1, -1}) {
        ExperimentConfig c;
        c.t = t;
        c.phi = phi;
        c.reflectivity_sign = sign;
        for (Mode m : kRightModes) c.cutoff_overrides[m] = 2;
        const auto out = evolve(initial_state_bare(c), c);
        const Eigen::VectorXcd want = oracle::evolved_direct(cutoff_vector(c), 0.0, t, c.r(), phi);
        CHECK((out.amplitudes() - want).norm() < 1e-13);
        CHECK(out.leakage() < 1e-14);
      }
    }
  }
}

TEST_CASE("coherent evolution: photon numbers and norm") {
  ExperimentConfig c;  // alpha = 1, t = 1/sqrt2
  const auto in = initial_state_with_coherent(c);
  const auto out = evolve(in, c);
  const double r = c.r(), t = c.t;
  CHECK(mean_number(out, Mode::a2) == doctest::Approx(r * r + t * t / 2).epsilon(1e-10));
  CHECK(mean_number(out, Mode::a2) == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(mean_number(out, Mode::a3) == doctest::Approx(t * t + r * r / 2).epsilon(1e-10));
  CHECK(std::abs(out.norm_squared() - in.norm_squared()) < 1e-10);
  CHECK(out.norm_squared() + out.leakage() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("left states agree with the analytic reduced state") {
  const ExperimentConfig c = small_config();
  const LeftStates left = evolved_left_states(c);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  want(1, 1) = 0.5;  // |0 1>
  want(2, 2) = 0.5;  // |1 0>
  CHECK((left.bare.matrix() - want).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((left.with_coherent.matrix() - want).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(nosignal::trace_distance(left.with_coherent, left.bare) < 1e-9);
  CHECK(signaling_gap(c) < 1e-9);
}

TEST_CASE("full run at a small amplitude passes and serializes") {
  const ExperimentConfig c = small_config();
  const Report rep = run_experiment(c);
  CHECK(rep.passed());
  CHECK(rep.warnings.empty());
  CHECK(rep.heisenberg.size() == 6);
  CHECK(rep.projective.trials == 256);
  CHECK(rep.selective.contrast_found);
  CHECK(rep.density.states_checked > 0);

  const std::string text = to_json(rep);
  CHECK(text == to_json(run_experiment(c)));
  const auto j = nlohmann::ordered_json::parse(text);
  CHECK(j["schema"] == "kalamidas-nosignal/report-v1");
  CHECK(j["verdict"] == "pass");
  CHECK(j["config"]["cutoffs"]["a3"] == 13);
  CHECK(j["dimension"] == rep.dimension);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys.front() == "schema");
  CHECK(keys.back() == "failures");
  CHECK(j["failures"].empty());
}

TEST_CASE("forced small cutoffs are flagged and widen the tolerance") {
  ExperimentConfig c;
  c.cutoff_overrides[Mode::a3] = 2;
  c.cutoff_overrides[Mode::b3] = 2;
  c.cutoff_overrides[Mode::a2] = 3;
  c.cutoff_overrides[Mode::b2] = 3;
  c.trials = 10;
  c.channel_trials = 2;
  const Report rep = run_experiment(c);
  CHECK_FALSE(rep.warnings.empty());
  CHECK(rep.leakage_evolved_with_coherent > 1e-3);
  CHECK(rep.effective_tolerance > c.tolerance + 1e-3);
}
