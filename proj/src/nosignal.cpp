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

#include "kalamidas/nosignal.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "kalamidas/random.hpp"

namespace kalamidas::nosignal {


DensityOperator::DensityOperator(HilbertSpec spec, Eigen::MatrixXcd matrix, double leakage)
    : spec_(std::move(spec)), matrix_(std::move(matrix)), leakage_(leakage) {
  if (matrix_.rows() != spec_.dim() || matrix_.cols() != spec_.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "density matrix does not match its space");
  }
}

DensityOperator::Health DensityOperator::health() const {
  Health h{};
  h.hermiticity_defect = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd herm = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  h.min_eigenvalue = es.eigenvalues().minCoeff();
  h.trace_defect = std::abs(trace() - (1.0 - leakage_));
  return h;
}

bool DensityOperator::healthy(double tolerance) const {
  const Health h = health();
  return h.hermiticity_defect <= tolerance && h.min_eigenvalue >= -tolerance &&
         h.trace_defect <= tolerance;
}

namespace {

// rho_keep(k, k') = sum_c v[k, c] conj(v[k', c])
void accumulate(const Eigen::VectorXcd& v, const std::vector<Index>& off_keep,
                const std::vector<Index>& off_rest, Eigen::MatrixXcd& rho) {
  const Index dk = static_cast<Index>(off_keep.size());
  const Index dc = static_cast<Index>(off_rest.size());
  Eigen::MatrixXcd m(dc, dk);
  for (Index k = 0; k < dk; ++k) {
    for (Index c = 0; c < dc; ++c) m(c, k) = v(off_keep[k] + off_rest[c]);
  }
  rho += (m.adjoint() * m).transpose();
}

HilbertSpec left_of(const HilbertSpec& spec) { return spec.subspec(kLeftModes); }

}  // namespace

DensityOperator partial_trace(const PureState& state, const HilbertSpec& keep) {
  const auto off_keep = hilbert::embedding_offsets(state.spec(), keep);
  const auto off_rest = hilbert::embedding_offsets(state.spec(), state.spec().complement(keep));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(keep.dim(), keep.dim());
  accumulate(state.amplitudes(), off_keep, off_rest, rho);
  return DensityOperator(keep, std::move(rho), state.leakage());
}

DensityOperator partial_trace(const MixedState& state, const HilbertSpec& keep) {
  const auto off_keep = hilbert::embedding_offsets(state.spec(), keep);
  const auto off_rest = hilbert::embedding_offsets(state.spec(), state.spec().complement(keep));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(keep.dim(), keep.dim());
  for (std::size_t k = 0; k < state.rank(); ++k) {
    accumulate(state.dense_component(k), off_keep, off_rest, rho);
  }
  return DensityOperator(keep, std::move(rho), state.leakage());
}

DensityOperator partial_trace(const DensityOperator& full, const HilbertSpec& keep) {
  const auto off_keep = hilbert::embedding_offsets(full.spec(), keep);
  const auto off_rest = hilbert::embedding_offsets(full.spec(), full.spec().complement(keep));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(keep.dim(), keep.dim());
  for (std::size_t i = 0; i < off_keep.size(); ++i) {
    for (std::size_t j = 0; j < off_keep.size(); ++j) {
      Complex s = 0.0;
      for (Index c : off_rest) s += full.matrix()(off_keep[i] + c, off_keep[j] + c);
      rho(static_cast<Index>(i), static_cast<Index>(j)) = s;
    }
  }
  return DensityOperator(keep, std::move(rho), full.leakage());
}

DensityOperator reduce_left(const PureState& state) {
  return partial_trace(state, left_of(state.spec()));
}
DensityOperator reduce_left(const MixedState& rho) { return partial_trace(rho, left_of(rho.spec())); }
DensityOperator reduce_left(const DensityOperator& rho) {
  return partial_trace(rho, left_of(rho.spec()));
}

Observable::Observable(const LinearOperator& h) : op_(h) {
  for (const auto& f : h.support().factors()) {
    if (!is_left(f.mode)) {
      throw Error(ErrorCode::subset_mismatch, "observables must act on left modes only");
    }
  }
  const double defect = hilbert::max_abs_difference(h, h.adjoint());
  if (defect > 1e-12) {
    throw Error(ErrorCode::not_hermitian, "observable is not hermitian");
  }
  op_ = h.with_flags({.hermitian = true});
}

double expectation(const DensityOperator& rho, const Observable& h) {
  const LinearOperator lifted = hilbert::lift(h.op(), rho.spec());
  const Eigen::MatrixXcd hm = lifted.dense();
  const Complex value = (rho.matrix() * hm).trace();
  const double scale = std::max(1.0, hm.cwiseAbs().maxCoeff());
  if (std::abs(value.imag()) > 1e-10 * scale) {
    throw Error(ErrorCode::not_hermitian, "expectation value has an imaginary part");
  }
  return value.real();
}

double analytic_expectation(const Observable& h) {
  const std::array<int, 2> cut = {1, 1};
  HilbertSpec left = h.op().support();
  if (!(left.contains(Mode::a1) && left.contains(Mode::b1))) {
    // pad the missing left mode with a single-photon ladder
    std::vector<HilbertSpec::Factor> f;
    f.push_back({Mode::a1, left.contains(Mode::a1) ? left.cutoff(Mode::a1) : cut[0]});
    f.push_back({Mode::b1, left.contains(Mode::b1) ? left.cutoff(Mode::b1) : cut[1]});
    left = HilbertSpec(std::move(f));
  }
  const Eigen::MatrixXcd m = hilbert::lift(h.op(), left).dense();

  // |na nb> sits at na * (cb + 1) + nb
  const int cb = left.cutoff(Mode::b1);
  const Index one_a = cb + 1;  // |1 0>
  const Index one_b = 1;       // |0 1>
  Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(m.rows());
  Eigen::VectorXcd minus = Eigen::VectorXcd::Zero(m.rows());
  plus(one_a) = 1.0;
  plus(one_b) = 1.0;
  minus(one_a) = -1.0;
  minus(one_b) = 1.0;
  const Complex value = 0.25 * (plus.dot(m * plus) + minus.dot(m * minus));
  return value.real();
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  if (!(rho.spec() == sigma.spec())) {
    throw Error(ErrorCode::dimension_mismatch, "trace distance between different spaces");
  }
  const Eigen::MatrixXcd d = rho.matrix() - sigma.matrix();
  const Eigen::MatrixXcd herm = 0.5 * (d + d.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double spectral_norm(const Observable& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.op().dense(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Observable random_left_observable(const HilbertSpec& left, std::uint64_t seed) {
  random::Gaussian g(seed);
  const Eigen::MatrixXcd a = random::complex_gaussian(left.dim(), left.dim(), g);
  const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  return Observable(LinearOperator(left, h, {.hermitian = true}));
}

double normalized_gap(const DensityOperator& rho, const DensityOperator& sigma,
                      const Observable& h) {
  const double norm = spectral_norm(h);
  if (norm == 0.0) return 0.0;
  return std::abs(expectation(rho, h) - expectation(sigma, h)) / norm;
}

double signaling_gap(const DensityOperator& rho, const DensityOperator& sigma,
                     std::uint64_t seed, int trials) {
  if (trials < 1) throw Error(ErrorCode::invalid_argument, "signaling_gap needs trials >= 1");
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const auto s = random::derive_seed(seed, random::Stream::observable, static_cast<std::uint64_t>(i));
    worst = std::max(worst, normalized_gap(rho, sigma, random_left_observable(rho.spec(), s)));
  }
  return worst;
}

}  // namespace kalamidas::nosignal
