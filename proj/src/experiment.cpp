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

#include "kalamidas/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kalamidas/channels.hpp"
#include "kalamidas/optics.hpp"
#include "kalamidas/random.hpp"

namespace kalamidas::experiment {

using hilbert::LadderKind;
using hilbert::LinearOperator;
using nosignal::DensityOperator;

int default_cutoff(Mode m, Complex alpha) {
  return is_left(m) ? 1 : optics::adequacy_cutoff(alpha);
}

double ExperimentConfig::r() const {
  const double r2 = std::max(0.0, 1.0 - t * t);
  return (reflectivity_sign < 0 ? -1.0 : 1.0) * std::sqrt(r2);
}

int ExperimentConfig::cutoff(Mode m) const {
  auto it = cutoff_overrides.find(m);
  return it != cutoff_overrides.end() ? it->second : default_cutoff(m, alpha);
}

std::array<int, 6> ExperimentConfig::cutoffs() const {
  std::array<int, 6> c{};
  for (Mode m : kAllModes) c[static_cast<std::size_t>(slot(m))] = cutoff(m);
  return c;
}

HilbertSpec ExperimentConfig::spec() const { return HilbertSpec::full(cutoffs()); }

void ExperimentConfig::validate() const {
  auto bad = [](const std::string& msg) { throw Error(ErrorCode::invalid_argument, msg); };
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) bad("alpha must be finite");
  if (!std::isfinite(phi)) bad("phi must be finite");
  if (!(t >= 0.0 && t <= 1.0)) bad("t must lie in [0, 1]");
  if (reflectivity_sign != 1 && reflectivity_sign != -1) bad("reflectivity sign must be +1 or -1");
  if (trials < 1) bad("trials must be >= 1");
  if (!(tolerance > 0.0)) bad("tolerance must be > 0");
  if (channel_trials < 1) bad("channel trials must be >= 1");
  if (occupation_cap < 1) bad("occupation cap must be >= 1");
  if (heisenberg_cutoff < 1) bad("heisenberg cutoff must be >= 1");
  for (Mode m : kAllModes) {
    if (cutoff(m) < 1) {
      bad("cutoff of mode " + std::string(label(m)) + " must be >= 1");
    }
  }
  // dense left observables and 64-bit indexing both need a sane size
  const double dim = [&] {
    double d = 1.0;
    for (int c : cutoffs()) d *= c + 1.0;
    return d;
  }();
  if (dim > 5e7) bad("cutoffs give a Hilbert space that is too large (> 5e7 states)");
}

namespace {

/// (1/sqrt2)(a1^dagger a2^dagger + e^{i phi} b1^dagger b2^dagger) applied to `base`.
PureState add_photon_pair(const PureState& base, double phi) {
  const HilbertSpec& spec = base.spec();
  auto raise = [&](Mode m, const PureState& s) {
    return hilbert::apply(hilbert::ladder(spec, m, LadderKind::raise), s);
  };
  const PureState a_branch = raise(Mode::a1, raise(Mode::a2, base));
  const PureState b_branch = raise(Mode::b1, raise(Mode::b2, base));
  const double h = 1.0 / std::numbers::sqrt2;
  const std::array<std::pair<Complex, const PureState*>, 2> terms = {
      std::pair<Complex, const PureState*>{h, &a_branch},
      std::pair<Complex, const PureState*>{h * std::polar(1.0, phi), &b_branch}};
  return hilbert::superpose(terms, base.leakage());
}

}  // namespace

PureState initial_state_with_coherent(const ExperimentConfig& config, Diagnostics* diag) {
  config.validate();
  const HilbertSpec spec = config.spec();
  PureState s = hilbert::vacuum(spec);
  s = hilbert::apply(optics::displacement_unitary(spec, Mode::a3, config.alpha, diag), s);
  s = hilbert::apply(optics::displacement_unitary(spec, Mode::b3, config.alpha, diag), s);
  return add_photon_pair(s, config.phi);
}

PureState initial_state_bare(const ExperimentConfig& config) {
  config.validate();
  return add_photon_pair(hilbert::vacuum(config.spec()), config.phi);
}

PureState evolve(const PureState& state, const ExperimentConfig& config) {
  config.validate();
  const HilbertSpec& spec = state.spec();
  const double t = config.t;
  const double r = config.r();
  PureState s = hilbert::apply(
      optics::beamsplitter_unitary(spec, optics::make_splitter(Mode::b2, Mode::b3, t, r)), state);
  s = hilbert::apply(
      optics::beamsplitter_unitary(spec, optics::make_splitter(Mode::a2, Mode::a3, t, r)), s);
  return hilbert::apply(optics::beamsplitter_unitary(spec, optics::central_splitter()), s);
}

LeftStates evolved_left_states(const ExperimentConfig& config, Diagnostics* diag) {
  return {nosignal::reduce_left(evolve(initial_state_with_coherent(config, diag), config)),
          nosignal::reduce_left(evolve(initial_state_bare(config), config))};
}

double signaling_gap(const ExperimentConfig& config) {
  const LeftStates left = evolved_left_states(config);
  return nosignal::signaling_gap(left.with_coherent, left.bare, config.seed, config.trials);
}

namespace {

class DensityAudit {
 public:
  explicit DensityAudit(Report::DensityChecks& out) : out_(out) {
    out_.min_eigenvalue = std::numeric_limits<double>::infinity();
  }
  const DensityOperator& operator()(const DensityOperator& rho) {
    const auto h = rho.health();
    ++out_.states_checked;
    out_.max_hermiticity_defect = std::max(out_.max_hermiticity_defect, h.hermiticity_defect);
    out_.min_eigenvalue = std::min(out_.min_eigenvalue, h.min_eigenvalue);
    out_.max_trace_defect = std::max(out_.max_trace_defect, h.trace_defect);
    return rho;
  }

 private:
  Report::DensityChecks& out_;
};

std::vector<nosignal::Observable> anchor_observables(const HilbertSpec& left) {
  using hilbert::ladder;
  const LinearOperator na = hilbert::number_operator(left, Mode::a1);
  const LinearOperator nb = hilbert::number_operator(left, Mode::b1);
  const LinearOperator hop = hilbert::multiply(ladder(left, Mode::a1, LadderKind::raise),
                                               ladder(left, Mode::b1, LadderKind::lower));
  std::vector<nosignal::Observable> out;
  out.emplace_back(LinearOperator::identity(left));
  out.emplace_back(na);
  out.emplace_back(hilbert::add(na, nb));
  out.emplace_back(hilbert::add(hop, hop.adjoint()));
  return out;
}

}  // namespace

Report run_experiment(const ExperimentConfig& config) {
  config.validate();
  Report rep;
  rep.config = config;
  rep.cutoffs = config.cutoffs();
  const HilbertSpec spec = config.spec();
  rep.dimension = spec.dim();
  DensityAudit audit(rep.density);
  Diagnostics diag;

  // Heisenberg actions of the three splitters
  {
    const double t = config.t;
    const double r = config.r();
    const int c = config.heisenberg_cutoff;
    const auto u0 = optics::central_splitter();
    const auto ua = optics::make_splitter(Mode::a2, Mode::a3, t, r);
    const auto ub = optics::make_splitter(Mode::b2, Mode::b3, t, r);
    rep.heisenberg = {{"U0 a1", optics::heisenberg_residual(u0, Mode::a1, c)},
                      {"U0 b1", optics::heisenberg_residual(u0, Mode::b1, c)},
                      {"Ua a2", optics::heisenberg_residual(ua, Mode::a2, c)},
                      {"Ua a3", optics::heisenberg_residual(ua, Mode::a3, c)},
                      {"Ub b2", optics::heisenberg_residual(ub, Mode::b2, c)},
                      {"Ub b3", optics::heisenberg_residual(ub, Mode::b3, c)}};
  }

  rep.displacement_unitarity_defect = std::max(
      optics::displacement_unitarity_defect(spec, Mode::a3, config.alpha),
      optics::displacement_unitarity_defect(spec, Mode::b3, config.alpha));

  // both preparations, evolved and reduced
  const PureState in_coherent = initial_state_with_coherent(config, &diag);
  const PureState in_bare = initial_state_bare(config);
  const PureState fin_coherent = evolve(in_coherent, config);
  const PureState fin_bare = evolve(in_bare, config);
  rep.warnings = diag.warnings;
  rep.leakage_initial_with_coherent = in_coherent.leakage();
  rep.leakage_evolved_with_coherent = fin_coherent.leakage();
  rep.leakage_evolved_bare = fin_bare.leakage();
  const double leakage = std::max(fin_coherent.leakage(), fin_bare.leakage());
  rep.effective_tolerance = config.tolerance + leakage;

  const DensityOperator left_coherent = audit(nosignal::reduce_left(fin_coherent));
  const DensityOperator left_bare = audit(nosignal::reduce_left(fin_bare));
  rep.left_trace_distance = nosignal::trace_distance(left_coherent, left_bare);
  rep.signaling_gap =
      nosignal::signaling_gap(left_coherent, left_bare, config.seed, config.trials);

  // simulated expectations against the two-mode closed form
  {
    std::vector<nosignal::Observable> obs = anchor_observables(left_coherent.spec());
    for (int i = 0; i < config.trials; ++i) {
      obs.push_back(nosignal::random_left_observable(
          left_coherent.spec(),
          random::derive_seed(config.seed, random::Stream::observable, static_cast<std::uint64_t>(i))));
    }
    for (const auto& h : obs) {
      const double expected = nosignal::analytic_expectation(h);
      rep.analytic_max_residual =
          std::max({rep.analytic_max_residual, std::abs(nosignal::expectation(left_coherent, h) - expected),
                    std::abs(nosignal::expectation(left_bare, h) - expected)});
    }
  }

  // legitimate right-side operations, applied to both evolved states
  const std::array<std::pair<const PureState*, const DensityOperator*>, 2> inputs = {
      std::pair{&fin_coherent, &left_coherent}, std::pair{&fin_bare, &left_bare}};
  rep.unitary.trials = config.channel_trials;
  rep.kraus.trials = config.channel_trials;
  for (int i = 0; i < config.channel_trials; ++i) {
    const auto useed =
        random::derive_seed(config.seed, random::Stream::right_unitary, static_cast<std::uint64_t>(i));
    const auto kseed =
        random::derive_seed(config.seed, random::Stream::kraus, static_cast<std::uint64_t>(i));
    const LinearOperator u = channels::random_right_unitary(spec, useed);
    const channels::KrausFamily kraus = channels::random_kraus(spec, kseed, 2 + i % 3);
    rep.kraus_completeness_defect = std::max(rep.kraus_completeness_defect, kraus.completeness_defect());
    for (const auto& [psi, rho_left] : inputs) {
      const DensityOperator after_u =
          audit(nosignal::reduce_left(channels::apply_right_unitary(*psi, u)));
      rep.unitary.max_residual =
          std::max(rep.unitary.max_residual, nosignal::trace_distance(after_u, *rho_left));
      const DensityOperator after_k = audit(
          nosignal::reduce_left(channels::kraus_nonselective(hilbert::MixedState(*psi), kraus)));
      rep.kraus.max_residual =
          std::max(rep.kraus.max_residual, nosignal::trace_distance(after_k, *rho_left));
    }
  }

  const channels::ProjectorFamily occupation =
      channels::occupation_projectors(spec, config.occupation_cap);
  rep.projective.trials = static_cast<int>(occupation.size());
  for (const auto& [psi, rho_left] : inputs) {
    const DensityOperator after = audit(nosignal::reduce_left(
        channels::projective_nonselective(hilbert::MixedState(*psi), occupation)));
    rep.projective.max_residual =
        std::max(rep.projective.max_residual, nosignal::trace_distance(after, *rho_left));
  }

  // selective conditioning: individual outcomes move the left state, the
  // probability-weighted mixture does not
  {
    auto& sel = rep.selective;
    sel.outcomes = static_cast<int>(occupation.size());
    const DensityOperator unconditional(left_coherent.spec(),
                                        left_coherent.matrix() / left_coherent.trace());
    Eigen::MatrixXcd mixture = Eigen::MatrixXcd::Zero(unconditional.spec().dim(), unconditional.spec().dim());
    double best_td = -1.0;
    std::size_t best = 0;
    double contrast_p = -1.0;
    std::size_t contrast = 0;
    for (std::size_t k = 0; k < occupation.size(); ++k) {
      const auto outcome = channels::selective_outcome(fin_coherent, occupation.projectors()[k]);
      if (outcome.null_outcome()) {
        ++sel.null_outcomes;
        continue;
      }
      const DensityOperator cond = audit(nosignal::reduce_left(*outcome.conditional));
      mixture += outcome.probability * cond.matrix();
      const double td = nosignal::trace_distance(cond, unconditional);
      if (td > best_td) best_td = td, best = k;
      if (td > 0.01 && outcome.probability > contrast_p) contrast_p = outcome.probability, contrast = k;
    }
    sel.contrast_found = contrast_p >= 0.0;
    const std::size_t shown = sel.contrast_found ? contrast : best;
    const auto outcome = channels::selective_outcome(fin_coherent, occupation.projectors()[shown]);
    sel.outcome = occupation.labels()[shown];
    sel.probability = outcome.probability;
    if (!outcome.null_outcome()) {
      const DensityOperator cond = nosignal::reduce_left(*outcome.conditional);
      sel.conditional_trace_distance = nosignal::trace_distance(cond, unconditional);
    }
    const DensityOperator mixed =
        audit(DensityOperator(left_coherent.spec(), mixture, left_coherent.leakage()));
    sel.mixture_residual = nosignal::trace_distance(mixed, left_coherent);
  }

  // verdict
  const double tol = config.tolerance;
  const double eff = rep.effective_tolerance;
  auto require = [&](const std::string& name, double value, double limit) {
    if (!(value <= limit)) rep.failures.push_back(name);
  };
  require("left_trace_distance", rep.left_trace_distance, eff);
  require("signaling_gap", rep.signaling_gap, eff);
  for (const auto& h : rep.heisenberg) require("heisenberg." + h.name, h.residual, tol);
  require("analytic_max_residual", rep.analytic_max_residual, eff);
  require("displacement_unitarity_defect", rep.displacement_unitarity_defect, tol);
  require("channels.unitary", rep.unitary.max_residual, eff);
  require("channels.projective", rep.projective.max_residual, eff);
  require("channels.kraus", rep.kraus.max_residual, eff);
  require("channels.kraus_completeness", rep.kraus_completeness_defect, tol);
  require("selective.mixture_residual", rep.selective.mixture_residual, eff);
  require("density.hermiticity", rep.density.max_hermiticity_defect, eff);
  require("density.positivity", -rep.density.min_eigenvalue, eff);
  require("density.trace", rep.density.max_trace_defect, eff);
  return rep;
}

}  // namespace kalamidas::experiment
