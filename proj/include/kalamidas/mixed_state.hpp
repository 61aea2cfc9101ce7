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

#ifndef KALAMIDAS_MIXED_STATE_HPP
#define KALAMIDAS_MIXED_STATE_HPP

#include <vector>

#include "kalamidas/hilbert.hpp"

namespace kalamidas::hilbert {

/// One unnormalized term |v><v| of a mixed state. An empty `support` means
/// `values` is a dense vector over the whole space; otherwise values[i]
/// sits at basis index support[i].
struct Component {
  std::vector<Index> support;
  Eigen::VectorXcd values;

  bool is_dense() const { return support.empty(); }
  double norm_squared() const { return values.squaredNorm(); }
};

/// Store `v` on its nonzero entries when that is much smaller than dense.
Component compress(Eigen::VectorXcd v);

/// Full-space density operator in factored form rho = sum_k |v_k><v_k|.
/// Hermiticity and positivity hold by construction; the trace is the summed
/// squared norm of the components.
class MixedState {
 public:
  explicit MixedState(const PureState& pure);
  MixedState(HilbertSpec spec, std::vector<Component> components, double leakage);

  const HilbertSpec& spec() const { return spec_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t rank() const { return components_.size(); }
  double leakage() const { return leakage_; }
  double trace() const;

  Eigen::VectorXcd dense_component(std::size_t k) const;
  /// Explicit matrix; only for spaces within LinearOperator::kMaxDenseDim.
  Eigen::MatrixXcd dense() const;

 private:
  HilbertSpec spec_;
  std::vector<Component> components_;
  double leakage_;
};

/// sum_k A|v_k><v_k|A^dagger for one operator A. Components that vanish
/// exactly are dropped.
MixedState conjugate(const MixedState& rho, const LinearOperator& op);

}  // namespace kalamidas::hilbert

#endif  // KALAMIDAS_MIXED_STATE_HPP
