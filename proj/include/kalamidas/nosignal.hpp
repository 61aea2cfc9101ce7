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

#ifndef KALAMIDAS_NOSIGNAL_HPP
#define KALAMIDAS_NOSIGNAL_HPP

#include <cstdint>

#include "kalamidas/hilbert.hpp"
#include "kalamidas/mixed_state.hpp"

namespace kalamidas::nosignal {

using hilbert::HilbertSpec;
using hilbert::LinearOperator;
using hilbert::MixedState;
using hilbert::PureState;

/// Dense density matrix on a (small) mode subset, typically the left pair.
/// A state reduced from a truncated simulation has trace 1 - leakage.
class DensityOperator {
 public:
  DensityOperator(HilbertSpec spec, Eigen::MatrixXcd matrix, double leakage = 0.0);

  const HilbertSpec& spec() const { return spec_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  double leakage() const { return leakage_; }
  double trace() const { return matrix_.trace().real(); }

  struct Health {
    double hermiticity_defect;  // max |rho - rho^dagger|
    double min_eigenvalue;
    double trace_defect;  // |tr rho - (1 - leakage)|
  };
  Health health() const;
  bool healthy(double tolerance = 1e-10) const;

 private:
  HilbertSpec spec_;
  Eigen::MatrixXcd matrix_;
  double leakage_;
};

DensityOperator partial_trace(const PureState& state, const HilbertSpec& keep);
DensityOperator partial_trace(const MixedState& rho, const HilbertSpec& keep);
DensityOperator partial_trace(const DensityOperator& rho, const HilbertSpec& keep);

/// Trace over a2, b2, a3, b3, keeping (a1, b1).
DensityOperator reduce_left(const PureState& state);
DensityOperator reduce_left(const MixedState& rho);
DensityOperator reduce_left(const DensityOperator& rho);

/// A hermitian operator on left modes (validated to 1e-12).
class Observable {
 public:
  explicit Observable(const LinearOperator& h);

  const LinearOperator& op() const { return op_; }

 private:
  LinearOperator op_;
};

/// Tr(rho h), with h lifted onto rho's modes. Throws not_hermitian when the
/// imaginary residue exceeds 1e-10 relative to the scale of h.
double expectation(const DensityOperator& rho, const Observable& h);

/// 1/4 [<0|(a1 + b1) h (a1^dagger + b1^dagger)|0> + <0|(-a1 + b1) h (-a1^dagger + b1^dagger)|0>]
/// evaluated directly on the two left modes, with no reference to the
/// six-mode simulation.
double analytic_expectation(const Observable& h);

/// 1/2 sum |eig(rho - sigma)|
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

double spectral_norm(const Observable& h);

/// H = (G + G^dagger)/2 for a seeded complex Gaussian G on `left`.
Observable random_left_observable(const HilbertSpec& left, std::uint64_t seed);

/// |<h>_rho - <h>_sigma| / ||h||
double normalized_gap(const DensityOperator& rho, const DensityOperator& sigma,
                      const Observable& h);

/// Max normalized gap over `trials` observables; trial i uses the seed
/// derive_seed(seed, observable, i).
double signaling_gap(const DensityOperator& rho, const DensityOperator& sigma,
                     std::uint64_t seed, int trials);

}  // namespace kalamidas::nosignal

#endif  // KALAMIDAS_NOSIGNAL_HPP
