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

#include "kalamidas/channels.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kalamidas/random.hpp"

namespace kalamidas::channels {

using Sparse = LinearOperator::Sparse;

namespace {

double max_abs(const Sparse& m) {
  double worst = 0.0;
  for (Index j = 0; j < m.outerSize(); ++j) {
    for (Sparse::InnerIterator it(m, j); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

void require_common_support(const std::vector<LinearOperator>& ops, const char* what) {
  if (ops.empty()) throw Error(ErrorCode::incomplete_family, std::string(what) + " is empty");
  for (const auto& op : ops) {
    require_right_support(op);
    if (!(op.support() == ops.front().support())) {
      throw Error(ErrorCode::dimension_mismatch,
                  std::string(what) + " members must share one support");
    }
  }
}

Sparse sparse_identity(Index n) {
  Sparse id(n, n);
  id.setIdentity();
  return id;
}

void require_same_space(const MixedState& rho, const LinearOperator& op) {
  if (!rho.spec().contains(op.support())) {
    throw Error(ErrorCode::dimension_mismatch, "channel support is not a factor of the state's space");
  }
}

}  // namespace

void require_right_support(const LinearOperator& op) {
  if (op.support().num_modes() == 0) {
    throw Error(ErrorCode::subset_mismatch, "right-side operator has an empty support");
  }
  for (const auto& f : op.support().factors()) {
    if (is_left(f.mode)) {
      throw Error(ErrorCode::subset_mismatch,
                  "operator acts on left mode " + std::string(label(f.mode)) +
                      "; right-side operations may only touch a2, b2, a3, b3");
    }
  }
}

double completeness_defect(const std::vector<LinearOperator>& operators) {
  require_common_support(operators, "operator family");
  const Index n = operators.front().dim();
  Sparse sum(n, n);
  for (const auto& a : operators) sum += Sparse(a.matrix().adjoint()) * a.matrix();
  return max_abs(sum - sparse_identity(n));
}

KrausFamily::KrausFamily(std::vector<LinearOperator> operators, double tolerance)
    : operators_(std::move(operators)) {
  defect_ = channels::completeness_defect(operators_);
  if (!(defect_ <= tolerance)) {
    throw Error(ErrorCode::incomplete_family,
                "Kraus family violates completeness (defect " + std::to_string(defect_) + ")");
  }
}

ProjectorFamily::ProjectorFamily(std::vector<LinearOperator> projectors,
                                 std::vector<std::string> labels, double tolerance)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  require_common_support(projectors_, "projector family");
  if (labels_.empty()) {
    for (std::size_t k = 0; k < projectors_.size(); ++k) labels_.push_back("P" + std::to_string(k));
  }
  if (labels_.size() != projectors_.size()) {
    throw Error(ErrorCode::invalid_argument, "one label per projector required");
  }
  const Index n = projectors_.front().dim();
  Sparse sum(n, n);
  for (const auto& p : projectors_) {
    const Sparse& m = p.matrix();
    if (max_abs(m - Sparse(m.adjoint())) > tolerance) {
      throw Error(ErrorCode::not_hermitian, "projector is not hermitian");
    }
    if (max_abs(Sparse(m * m) - m) > tolerance) {
      throw Error(ErrorCode::incomplete_family, "projector is not idempotent");
    }
    sum += m;
  }
  defect_ = max_abs(sum - sparse_identity(n));
  if (!(defect_ <= tolerance)) {
    throw Error(ErrorCode::incomplete_family,
                "projectors do not sum to the identity (defect " + std::to_string(defect_) + ")");
  }
}

PureState apply_right_unitary(const PureState& state, const LinearOperator& u) {
  require_right_support(u);
  if (!u.unitary()) throw Error(ErrorCode::not_unitary, "right operation is not flagged unitary");
  return hilbert::apply(u, state);
}

MixedState apply_right_unitary(const MixedState& rho, const LinearOperator& u) {
  require_right_support(u);
  if (!u.unitary()) throw Error(ErrorCode::not_unitary, "right operation is not flagged unitary");
  require_same_space(rho, u);
  MixedState out = hilbert::conjugate(rho, u);
  const double lost = std::max(0.0, rho.trace() - out.trace());
  std::vector<hilbert::Component> comps = out.components();
  return MixedState(rho.spec(), std::move(comps), rho.leakage() + lost);
}

MixedState projective_nonselective(const MixedState& rho, const ProjectorFamily& family) {
  require_same_space(rho, family.projectors().front());
  std::vector<hilbert::Component> comps;
  for (const auto& p : family.projectors()) {
    MixedState part = hilbert::conjugate(rho, p);
    for (const auto& c : part.components()) comps.push_back(c);
  }
  return MixedState(rho.spec(), std::move(comps), rho.leakage());
}

MixedState kraus_nonselective(const MixedState& rho, const KrausFamily& family) {
  require_same_space(rho, family.operators().front());
  std::vector<hilbert::Component> comps;
  for (const auto& a : family.operators()) {
    MixedState part = hilbert::conjugate(rho, a);
    for (const auto& c : part.components()) comps.push_back(c);
  }
  return MixedState(rho.spec(), std::move(comps), rho.leakage());
}

SelectiveOutcome selective_outcome(const PureState& state, const LinearOperator& projector,
                                   double floor) {
  require_right_support(projector);
  Eigen::VectorXcd v = hilbert::apply_to_vector(projector, state.spec(), state.amplitudes());
  SelectiveOutcome out;
  out.probability = v.squaredNorm();
  if (out.probability <= floor) return out;
  v /= std::sqrt(out.probability);
  std::vector<hilbert::Component> comps;
  comps.push_back(hilbert::compress(std::move(v)));
  out.conditional.emplace(state.spec(), std::move(comps), 0.0);
  return out;
}

std::vector<Index> low_photon_sector(const HilbertSpec& right, int photons) {
  std::vector<Index> sector;
  for (Index j = 0; j < right.dim(); ++j) {
    int total = 0;
    for (int n : right.occupations(j)) total += n;
    if (total <= photons) sector.push_back(j);
  }
  return sector;
}

LinearOperator random_right_unitary(const HilbertSpec& spec, std::uint64_t seed,
                                    int sector_photons) {
  const HilbertSpec right = spec.subspec(kRightModes);
  const auto sector = low_photon_sector(right, sector_photons);
  const Index m = static_cast<Index>(sector.size());
  const Eigen::MatrixXcd v = random::haar_unitary(m, seed);

  std::vector<bool> in_sector(static_cast<std::size_t>(right.dim()), false);
  for (Index s : sector) in_sector[static_cast<std::size_t>(s)] = true;
  std::vector<Eigen::Triplet<Complex>> t;
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < m; ++i) t.emplace_back(sector[i], sector[j], v(i, j));
  }
  for (Index j = 0; j < right.dim(); ++j) {
    if (!in_sector[static_cast<std::size_t>(j)]) t.emplace_back(j, j, 1.0);
  }
  Sparse u(right.dim(), right.dim());
  u.setFromTriplets(t.begin(), t.end());
  return LinearOperator(right, std::move(u), {.unitary = true, .unitary_tolerance = 1e-12});
}

KrausFamily random_kraus(const HilbertSpec& spec, std::uint64_t seed, int k, int sector_photons) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "a Kraus family needs k >= 1");
  const HilbertSpec right = spec.subspec(kRightModes);
  const auto sector = low_photon_sector(right, sector_photons);
  const Index m = static_cast<Index>(sector.size());

  random::Gaussian g(seed);
  const Eigen::MatrixXcd w = random::orthonormal_columns(random::complex_gaussian(k * m, m, g));

  std::vector<double> weight(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto& x : weight) total += (x = std::norm(g.next_complex()));
  for (auto& x : weight) x /= total;

  std::vector<bool> in_sector(static_cast<std::size_t>(right.dim()), false);
  for (Index s : sector) in_sector[static_cast<std::size_t>(s)] = true;

  std::vector<LinearOperator> ops;
  for (int op = 0; op < k; ++op) {
    std::vector<Eigen::Triplet<Complex>> t;
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < m; ++i) t.emplace_back(sector[i], sector[j], w(op * m + i, j));
    }
    const double amp = std::sqrt(weight[static_cast<std::size_t>(op)]);
    for (Index j = 0; j < right.dim(); ++j) {
      if (in_sector[static_cast<std::size_t>(j)]) continue;
      const Complex z = g.next_complex();
      t.emplace_back(j, j, amp * z / std::abs(z));
    }
    Sparse a(right.dim(), right.dim());
    a.setFromTriplets(t.begin(), t.end());
    ops.emplace_back(right, std::move(a));
  }
  return KrausFamily(std::move(ops));
}

ProjectorFamily occupation_projectors(const HilbertSpec& spec, int cap) {
  if (cap < 1) throw Error(ErrorCode::invalid_argument, "occupation cap must be >= 1");
  const HilbertSpec right = spec.subspec(kRightModes);

  std::map<std::vector<int>, std::vector<Index>> groups;
  for (Index j = 0; j < right.dim(); ++j) {
    std::vector<int> key = right.occupations(j);
    for (int& n : key) n = std::min(n, cap);
    groups[key].push_back(j);
  }

  std::vector<LinearOperator> projectors;
  std::vector<std::string> labels;
  for (const auto& [key, members] : groups) {
    Sparse p(right.dim(), right.dim());
    std::vector<Eigen::Triplet<Complex>> t;
    for (Index j : members) t.emplace_back(j, j, 1.0);
    p.setFromTriplets(t.begin(), t.end());
    projectors.emplace_back(right, std::move(p), hilbert::OperatorFlags{.hermitian = true});

    std::string name;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0) name += ' ';
      name += std::string(label(right.factors()[i].mode)) + "=" + std::to_string(key[i]);
      // the top bucket also holds every count above the cap
      if (key[i] == cap && right.factors()[i].cutoff > cap) name += '+';
    }
    labels.push_back(std::move(name));
  }
  return ProjectorFamily(std::move(projectors), std::move(labels));
}

}  // namespace kalamidas::channels
