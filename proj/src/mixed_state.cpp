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

#include "kalamidas/mixed_state.hpp"

namespace kalamidas::hilbert {

Component compress(Eigen::VectorXcd v) {
  Index nnz = 0;
  for (Index i = 0; i < v.size(); ++i) nnz += v(i) != Complex(0.0) ? 1 : 0;
  if (nnz == 0 || nnz * 4 >= v.size()) return {{}, std::move(v)};
  Component c;
  c.support.reserve(static_cast<std::size_t>(nnz));
  c.values.resize(nnz);
  Index k = 0;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != Complex(0.0)) {
      c.support.push_back(i);
      c.values(k++) = v(i);
    }
  }
  return c;
}

MixedState::MixedState(const PureState& pure)
    : spec_(pure.spec()), components_{{{}, pure.amplitudes()}}, leakage_(pure.leakage()) {}

MixedState::MixedState(HilbertSpec spec, std::vector<Component> components, double leakage)
    : spec_(std::move(spec)), components_(std::move(components)), leakage_(leakage) {
  for (const Component& c : components_) {
    const bool ok = c.is_dense() ? c.values.size() == spec_.dim()
                                 : static_cast<Index>(c.support.size()) == c.values.size();
    if (!ok) throw Error(ErrorCode::dimension_mismatch, "mixed-state component has the wrong size");
    for (Index i : c.support) {
      if (i < 0 || i >= spec_.dim()) {
        throw Error(ErrorCode::dimension_mismatch, "mixed-state component index out of range");
      }
    }
  }
  if (!(leakage_ >= 0.0)) throw Error(ErrorCode::invalid_argument, "leakage must be non-negative");
}

double MixedState::trace() const {
  double t = 0.0;
  for (const Component& c : components_) t += c.norm_squared();
  return t;
}

Eigen::VectorXcd MixedState::dense_component(std::size_t k) const {
  const Component& c = components_.at(k);
  if (c.is_dense()) return c.values;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec_.dim());
  for (std::size_t i = 0; i < c.support.size(); ++i) v(c.support[i]) = c.values(static_cast<Index>(i));
  return v;
}

Eigen::MatrixXcd MixedState::dense() const {
  if (spec_.dim() > LinearOperator::kMaxDenseDim) {
    throw Error(ErrorCode::too_large, "mixed state too large for a dense matrix");
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(spec_.dim(), spec_.dim());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const Eigen::VectorXcd v = dense_component(k);
    rho += v * v.adjoint();
  }
  return rho;
}

MixedState conjugate(const MixedState& rho, const LinearOperator& op) {
  std::vector<Component> out;
  out.reserve(rho.rank());
  for (std::size_t k = 0; k < rho.rank(); ++k) {
    Eigen::VectorXcd v = apply_to_vector(op, rho.spec(), rho.dense_component(k));
    if (v.squaredNorm() == 0.0) continue;
    out.push_back(compress(std::move(v)));
  }
  return MixedState(rho.spec(), std::move(out), rho.leakage());
}

}  // namespace kalamidas::hilbert
