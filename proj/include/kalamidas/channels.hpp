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

#ifndef KALAMIDAS_CHANNELS_HPP
#define KALAMIDAS_CHANNELS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kalamidas/hilbert.hpp"
#include "kalamidas/mixed_state.hpp"

namespace kalamidas::channels {

using hilbert::HilbertSpec;
using hilbert::LinearOperator;
using hilbert::MixedState;
using hilbert::PureState;

/// Generalized measurement {A_k} on right modes with sum_k A_k^dagger A_k = I.
class KrausFamily {
 public:
  /// Throws incomplete_family when the completeness defect exceeds `tolerance`.
  explicit KrausFamily(std::vector<LinearOperator> operators, double tolerance = 1e-10);

  const std::vector<LinearOperator>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }
  /// max-abs entry of sum_k A_k^dagger A_k - I
  double completeness_defect() const { return defect_; }

 private:
  std::vector<LinearOperator> operators_;
  double defect_ = 0.0;
};

/// Spectral family {P_k} on right modes: hermitian idempotents summing to I.
/// Pairwise orthogonality follows from those two conditions.
class ProjectorFamily {
 public:
  explicit ProjectorFamily(std::vector<LinearOperator> projectors,
                           std::vector<std::string> labels = {}, double tolerance = 1e-10);

  const std::vector<LinearOperator>& projectors() const { return projectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return projectors_.size(); }
  double completeness_defect() const { return defect_; }

 private:
  std::vector<LinearOperator> projectors_;
  std::vector<std::string> labels_;
  double defect_ = 0.0;
};

/// Throws subset_mismatch unless `op` touches right modes only.
void require_right_support(const LinearOperator& op);

double completeness_defect(const std::vector<LinearOperator>& operators);

PureState apply_right_unitary(const PureState& state, const LinearOperator& u);
MixedState apply_right_unitary(const MixedState& rho, const LinearOperator& u);

/// rho -> sum_k P_k rho P_k
MixedState projective_nonselective(const MixedState& rho, const ProjectorFamily& family);
/// rho -> sum_k A_k rho A_k^dagger
MixedState kraus_nonselective(const MixedState& rho, const KrausFamily& family);

inline constexpr double kProbabilityFloor = 1e-12;

/// One recorded outcome of a right-side projective measurement.
struct SelectiveOutcome {
  double probability = 0.0;
  /// P|psi><psi|P / p; empty when p is at or below the floor.
  std::optional<MixedState> conditional;

  bool null_outcome() const { return !conditional.has_value(); }
};

SelectiveOutcome selective_outcome(const PureState& state, const LinearOperator& projector,
                                   double floor = kProbabilityFloor);

/// Basis indices of the right-mode subspace whose total photon number is at
/// most `photons`. Random channels act nontrivially on this sector.
std::vector<Index> low_photon_sector(const HilbertSpec& right, int photons);

/// Haar unitary on the low-photon sector of all four right modes, identity on
/// its complement. Deterministic in `seed`.
LinearOperator random_right_unitary(const HilbertSpec& spec, std::uint64_t seed,
                                    int sector_photons = 4);

/// k Kraus operators: the blocks of a random (k*m x m) isometry on the
/// low-photon sector, plus sqrt(p_k) times random phases on the complement
/// with sum_k p_k = 1. Complete by construction.
KrausFamily random_kraus(const HilbertSpec& spec, std::uint64_t seed, int k,
                         int sector_photons = 4);

/// Occupation-number measurement of the four right modes. Each mode's count is
/// resolved as 0, 1, ..., cap - 1 or ">= cap"; one projector per nonempty
/// combination, labelled like "a2=1 b2=0 a3=3+ b3=0".
ProjectorFamily occupation_projectors(const HilbertSpec& spec, int cap = 3);

}  // namespace kalamidas::channels

#endif  // KALAMIDAS_CHANNELS_HPP
