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

#include "kalamidas/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kalamidas {

namespace {
constexpr std::array<std::string_view, 6> kLabels = {"a1", "b1", "a2", "b2", "a3", "b3"};
}

std::string_view label(Mode m) { return kLabels[static_cast<std::size_t>(slot(m))]; }

std::optional<Mode> parse_mode(std::string_view text) {
  for (std::size_t i = 0; i < kLabels.size(); ++i) {
    if (kLabels[i] == text) return kAllModes[i];
  }
  return std::nullopt;
}

namespace hilbert {

HilbertSpec::HilbertSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Factor& f = factors_[i];
    if (i > 0 && slot(factors_[i - 1].mode) >= slot(f.mode)) {
      throw Error(ErrorCode::invalid_argument,
                  "modes must be listed once each in slot order (a1, b1, a2, b2, a3, b3)");
    }
    if (f.cutoff < 0) {
      throw Error(ErrorCode::invalid_argument,
                  "cutoff of mode " + std::string(label(f.mode)) + " must be >= 0");
    }
    if (is_left(f.mode) && f.cutoff < 1) {
      throw Error(ErrorCode::invalid_argument,
                  "left mode " + std::string(label(f.mode)) + " needs cutoff >= 1");
    }
  }
  strides_.assign(factors_.size(), 1);
  dim_ = 1;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    strides_[k] = dim_;
    const Index local = factors_[k].cutoff + 1;
    if (dim_ > std::numeric_limits<Index>::max() / local) {
      throw Error(ErrorCode::too_large, "Hilbert space dimension overflows");
    }
    dim_ *= local;
  }
}

HilbertSpec HilbertSpec::full(const std::array<int, 6>& cutoffs) {
  std::vector<Factor> f;
  for (std::size_t i = 0; i < 6; ++i) f.push_back({kAllModes[i], cutoffs[i]});
  return HilbertSpec(std::move(f));
}

HilbertSpec HilbertSpec::uniform(std::span<const Mode> modes, int cutoff) {
  std::vector<Factor> f;
  for (Mode m : modes) f.push_back({m, cutoff});
  std::sort(f.begin(), f.end(),
            [](const Factor& x, const Factor& y) { return slot(x.mode) < slot(y.mode); });
  return HilbertSpec(std::move(f));
}

std::vector<Mode> HilbertSpec::modes() const {
  std::vector<Mode> out;
  out.reserve(factors_.size());
  for (const Factor& f : factors_) out.push_back(f.mode);
  return out;
}

std::optional<std::size_t> HilbertSpec::position(Mode m) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].mode == m) return i;
  }
  return std::nullopt;
}

bool HilbertSpec::contains(const HilbertSpec& sub) const {
  for (const Factor& f : sub.factors_) {
    auto p = position(f.mode);
    if (!p || factors_[*p].cutoff != f.cutoff) return false;
  }
  return true;
}

int HilbertSpec::cutoff(Mode m) const {
  auto p = position(m);
  if (!p) {
    throw Error(ErrorCode::subset_mismatch,
                "mode " + std::string(label(m)) + " is not part of this space");
  }
  return factors_[*p].cutoff;
}

Index HilbertSpec::stride(Mode m) const {
  auto p = position(m);
  if (!p) {
    throw Error(ErrorCode::subset_mismatch,
                "mode " + std::string(label(m)) + " is not part of this space");
  }
  return strides_[*p];
}

Index HilbertSpec::index_of(std::span<const int> occupations) const {
  if (occupations.size() != factors_.size()) {
    throw Error(ErrorCode::dimension_mismatch, "occupation tuple has the wrong length");
  }
  Index index = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (occupations[k] < 0 || occupations[k] > factors_[k].cutoff) {
      throw Error(ErrorCode::invalid_argument,
                  "occupation out of range for mode " + std::string(label(factors_[k].mode)));
    }
    index += occupations[k] * strides_[k];
  }
  return index;
}

std::vector<int> HilbertSpec::occupations(Index index) const {
  if (index < 0 || index >= dim_) {
    throw Error(ErrorCode::invalid_argument, "basis index out of range");
  }
  std::vector<int> occ(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    occ[k] = static_cast<int>(index / strides_[k]);
    index %= strides_[k];
  }
  return occ;
}

int HilbertSpec::occupation(Index index, Mode m) const {
  const std::size_t k = *position(m);
  return static_cast<int>((index / strides_[k]) % (factors_[k].cutoff + 1));
}

HilbertSpec HilbertSpec::subspec(std::span<const Mode> modes) const {
  std::vector<Factor> f;
  for (Mode m : modes) f.push_back({m, cutoff(m)});
  std::sort(f.begin(), f.end(),
            [](const Factor& x, const Factor& y) { return slot(x.mode) < slot(y.mode); });
  return HilbertSpec(std::move(f));
}

HilbertSpec HilbertSpec::complement(const HilbertSpec& sub) const {
  if (!contains(sub)) {
    throw Error(ErrorCode::subset_mismatch, "subspace is not a factor of this space");
  }
  std::vector<Factor> f;
  for (const Factor& x : factors_) {
    if (!sub.contains(x.mode)) f.push_back(x);
  }
  return HilbertSpec(std::move(f));
}

HilbertSpec HilbertSpec::merged(const HilbertSpec& other) const {
  std::vector<Factor> f = factors_;
  for (const Factor& x : other.factors_) {
    auto p = position(x.mode);
    if (p) {
      if (factors_[*p].cutoff != x.cutoff) {
        throw Error(ErrorCode::dimension_mismatch,
                    "cutoff disagreement on mode " + std::string(label(x.mode)));
      }
    } else {
      f.push_back(x);
    }
  }
  std::sort(f.begin(), f.end(),
            [](const Factor& x, const Factor& y) { return slot(x.mode) < slot(y.mode); });
  return HilbertSpec(std::move(f));
}

std::vector<Index> embedding_offsets(const HilbertSpec& parent, const HilbertSpec& sub) {
  if (!parent.contains(sub)) {
    throw Error(ErrorCode::subset_mismatch, "subspace is not a factor of the parent space");
  }
  const auto& f = sub.factors();
  std::vector<Index> parent_strides;
  for (const auto& x : f) parent_strides.push_back(parent.stride(x.mode));

  std::vector<Index> out(static_cast<std::size_t>(sub.dim()));
  std::vector<int> occ(f.size(), 0);
  Index offset = 0;
  for (Index i = 0; i < sub.dim(); ++i) {
    out[static_cast<std::size_t>(i)] = offset;
    // odometer, last factor fastest
    for (std::size_t k = f.size(); k-- > 0;) {
      if (occ[k] < f[k].cutoff) {
        ++occ[k];
        offset += parent_strides[k];
        break;
      }
      offset -= occ[k] * parent_strides[k];
      occ[k] = 0;
    }
  }
  return out;
}

PureState::PureState(HilbertSpec spec, Eigen::VectorXcd amplitudes, double leakage)
    : spec_(std::move(spec)), amplitudes_(std::move(amplitudes)), leakage_(leakage) {
  if (amplitudes_.size() != spec_.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "amplitude vector length does not match the space dimension");
  }
  if (!(leakage_ >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "leakage must be non-negative");
  }
}

Complex PureState::amplitude(std::span<const int> occupations) const {
  return amplitudes_(spec_.index_of(occupations));
}

PureState vacuum(const HilbertSpec& spec) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  v(0) = 1.0;
  return PureState(spec, std::move(v));
}

PureState basis_state(const HilbertSpec& spec, std::span<const int> occupations) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  v(spec.index_of(occupations)) = 1.0;
  return PureState(spec, std::move(v));
}

PureState superpose(std::span<const std::pair<Complex, const PureState*>> terms,
                    double leakage) {
  if (terms.empty()) throw Error(ErrorCode::invalid_argument, "superpose needs at least one term");
  const HilbertSpec& spec = terms.front().second->spec();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  for (const auto& [c, s] : terms) {
    if (!(s->spec() == spec)) throw Error(ErrorCode::dimension_mismatch, "superpose: spec mismatch");
    v += c * s->amplitudes();
  }
  return PureState(spec, std::move(v), leakage);
}

Complex inner(const PureState& x, const PureState& y) {
  if (!(x.spec() == y.spec())) {
    throw Error(ErrorCode::dimension_mismatch, "inner product of states on different spaces");
  }
  return x.amplitudes().dot(y.amplitudes());
}

LinearOperator::LinearOperator(HilbertSpec support, const Eigen::MatrixXcd& matrix,
                               OperatorFlags flags)
    : support_(std::move(support)), flags_(flags) {
  if (matrix.rows() != support_.dim() || matrix.cols() != support_.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "operator matrix does not match its support");
  }
  matrix_ = matrix.sparseView();
  matrix_.makeCompressed();
}

LinearOperator::LinearOperator(HilbertSpec support, Sparse matrix, OperatorFlags flags)
    : support_(std::move(support)), matrix_(std::move(matrix)), flags_(flags) {
  if (matrix_.rows() != support_.dim() || matrix_.cols() != support_.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "operator matrix does not match its support");
  }
  matrix_.makeCompressed();
}

LinearOperator LinearOperator::identity(const HilbertSpec& support) {
  Sparse id(support.dim(), support.dim());
  id.setIdentity();
  return LinearOperator(support, std::move(id), {.hermitian = true, .unitary = true});
}

Eigen::MatrixXcd LinearOperator::dense() const {
  if (dim() > kMaxDenseDim) {
    throw Error(ErrorCode::too_large, "operator too large for a dense matrix");
  }
  return Eigen::MatrixXcd(matrix_);
}

LinearOperator LinearOperator::with_flags(OperatorFlags flags) const {
  LinearOperator out = *this;
  out.flags_ = flags;
  return out;
}

LinearOperator LinearOperator::adjoint() const {
  return LinearOperator(support_, Sparse(matrix_.adjoint()), flags_);
}

LinearOperator ladder(const HilbertSpec& spec, Mode mode, LadderKind kind) {
  const std::array<Mode, 1> m = {mode};
  HilbertSpec local = spec.subspec(m);
  const int c = local.cutoff(mode);
  std::vector<Eigen::Triplet<Complex>> t;
  for (int n = 0; n < c; ++n) {
    const double v = std::sqrt(static_cast<double>(n + 1));
    if (kind == LadderKind::raise) {
      t.emplace_back(n + 1, n, v);
    } else {
      t.emplace_back(n, n + 1, v);
    }
  }
  LinearOperator::Sparse s(c + 1, c + 1);
  s.setFromTriplets(t.begin(), t.end());
  return LinearOperator(std::move(local), std::move(s));
}

LinearOperator number_operator(const HilbertSpec& spec, Mode mode) {
  const std::array<Mode, 1> m = {mode};
  HilbertSpec local = spec.subspec(m);
  const int c = local.cutoff(mode);
  LinearOperator::Sparse s(c + 1, c + 1);
  for (int n = 1; n <= c; ++n) s.insert(n, n) = static_cast<double>(n);
  return LinearOperator(std::move(local), std::move(s), {.hermitian = true});
}

LinearOperator lift(const LinearOperator& op, const HilbertSpec& target) {
  if (op.support() == target) return op;
  const HilbertSpec comp = target.complement(op.support());
  const auto off_s = embedding_offsets(target, op.support());
  const auto off_c = embedding_offsets(target, comp);
  const auto& m = op.matrix();

  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(static_cast<std::size_t>(m.nonZeros()) * off_c.size());
  for (Index j = 0; j < m.outerSize(); ++j) {
    for (LinearOperator::Sparse::InnerIterator it(m, j); it; ++it) {
      const Index row = off_s[static_cast<std::size_t>(it.row())];
      const Index col = off_s[static_cast<std::size_t>(it.col())];
      for (Index c : off_c) t.emplace_back(row + c, col + c, it.value());
    }
  }
  LinearOperator::Sparse s(target.dim(), target.dim());
  s.setFromTriplets(t.begin(), t.end());
  return LinearOperator(target, std::move(s), op.flags());
}

LinearOperator embed(const LinearOperator& op, const HilbertSpec& spec) { return lift(op, spec); }

LinearOperator multiply(const LinearOperator& a, const LinearOperator& b) {
  const HilbertSpec u = a.support().merged(b.support());
  LinearOperator::Sparse p = lift(a, u).matrix() * lift(b, u).matrix();
  return LinearOperator(u, std::move(p));
}

LinearOperator add(const LinearOperator& a, const LinearOperator& b) {
  const HilbertSpec u = a.support().merged(b.support());
  LinearOperator::Sparse s = lift(a, u).matrix() + lift(b, u).matrix();
  return LinearOperator(u, std::move(s),
                        {.hermitian = a.hermitian() && b.hermitian()});
}

LinearOperator scale(Complex s, const LinearOperator& a) {
  LinearOperator::Sparse m = s * a.matrix();
  return LinearOperator(a.support(), std::move(m),
                        {.hermitian = a.hermitian() && s.imag() == 0.0});
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return add(multiply(a, b), scale(-1.0, multiply(b, a)));
}

double max_abs_difference(const LinearOperator& a, const LinearOperator& b) {
  const HilbertSpec u = a.support().merged(b.support());
  const LinearOperator::Sparse d = lift(a, u).matrix() - lift(b, u).matrix();
  double worst = 0.0;
  for (Index j = 0; j < d.outerSize(); ++j) {
    for (LinearOperator::Sparse::InnerIterator it(d, j); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

Eigen::VectorXcd apply_to_vector(const LinearOperator& op, const HilbertSpec& parent,
                                 const Eigen::VectorXcd& amplitudes) {
  if (amplitudes.size() != parent.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "state length does not match its space");
  }
  if (!parent.contains(op.support())) {
    throw Error(ErrorCode::dimension_mismatch,
                "operator support is not a factor of the state's space");
  }
  if (op.support() == parent) return op.matrix() * amplitudes;

  const HilbertSpec comp = parent.complement(op.support());
  const auto off_s = embedding_offsets(parent, op.support());
  const auto off_c = embedding_offsets(parent, comp);
  const Index ds = op.dim();
  const Index dc = comp.dim();

  Eigen::MatrixXcd gathered(ds, dc);
  for (Index c = 0; c < dc; ++c) {
    const Index base = off_c[static_cast<std::size_t>(c)];
    for (Index i = 0; i < ds; ++i) gathered(i, c) = amplitudes(base + off_s[static_cast<std::size_t>(i)]);
  }
  const Eigen::MatrixXcd result = op.matrix() * gathered;
  Eigen::VectorXcd out(parent.dim());
  for (Index c = 0; c < dc; ++c) {
    const Index base = off_c[static_cast<std::size_t>(c)];
    for (Index i = 0; i < ds; ++i) out(base + off_s[static_cast<std::size_t>(i)]) = result(i, c);
  }
  return out;
}

PureState apply(const LinearOperator& op, const PureState& state) {
  Eigen::VectorXcd out = apply_to_vector(op, state.spec(), state.amplitudes());
  double leakage = state.leakage();
  if (op.unitary()) leakage += std::max(0.0, state.norm_squared() - out.squaredNorm());
  return PureState(state.spec(), std::move(out), leakage);
}

double unitarity_defect(const LinearOperator& op) {
  const HilbertSpec& s = op.support();
  int min_cutoff = std::numeric_limits<int>::max();
  for (const auto& f : s.factors()) min_cutoff = std::min(min_cutoff, f.cutoff);
  const int bound = s.num_modes() == 0 ? 0 : min_cutoff / 2;

  const auto& m = op.matrix();
  const LinearOperator::Sparse adj = m.adjoint();
  double worst = 0.0;
  for (Index j = 0; j < s.dim(); ++j) {
    const auto occ = s.occupations(j);
    int total = 0;
    for (int n : occ) total += n;
    if (total > bound) continue;
    Eigen::VectorXcd col = adj * Eigen::VectorXcd(m.col(j));
    col(j) -= 1.0;
    worst = std::max(worst, col.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace hilbert
}  // namespace kalamidas
