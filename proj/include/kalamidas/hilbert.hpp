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

#ifndef KALAMIDAS_HILBERT_HPP
#define KALAMIDAS_HILBERT_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "kalamidas/error.hpp"

namespace kalamidas {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// The six optical modes of the apparatus. The enumerator value is the
/// tensor slot; a1 and b1 are the left (receiver) modes.
enum class Mode : std::uint8_t { a1 = 0, b1, a2, b2, a3, b3 };

inline constexpr std::array<Mode, 6> kAllModes = {Mode::a1, Mode::b1, Mode::a2,
                                                  Mode::b2, Mode::a3, Mode::b3};
inline constexpr std::array<Mode, 2> kLeftModes = {Mode::a1, Mode::b1};
inline constexpr std::array<Mode, 4> kRightModes = {Mode::a2, Mode::b2, Mode::a3,
                                                    Mode::b3};

constexpr int slot(Mode m) { return static_cast<int>(m); }
constexpr bool is_left(Mode m) { return m == Mode::a1 || m == Mode::b1; }

std::string_view label(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

namespace hilbert {

/// Truncated tensor-product Fock space over an ordered subset of the modes.
///
/// Modes are kept in ascending slot order and the basis is row-major over
/// that order: the occupation of the last mode varies fastest. Every mode m
/// contributes a factor of dimension cutoff(m) + 1.
class HilbertSpec {
 public:
  struct Factor {
    Mode mode;
    int cutoff;
    bool operator==(const Factor&) const = default;
  };

  explicit HilbertSpec(std::vector<Factor> factors);

  /// All six modes with the given per-slot cutoffs.
  static HilbertSpec full(const std::array<int, 6>& cutoffs);
  static HilbertSpec uniform(std::span<const Mode> modes, int cutoff);

  const std::vector<Factor>& factors() const { return factors_; }
  std::vector<Mode> modes() const;
  std::size_t num_modes() const { return factors_.size(); }
  Index dim() const { return dim_; }

  bool contains(Mode m) const { return position(m).has_value(); }
  /// True when every factor of `sub` is present here with the same cutoff.
  bool contains(const HilbertSpec& sub) const;
  std::optional<std::size_t> position(Mode m) const;
  int cutoff(Mode m) const;
  Index stride(Mode m) const;

  Index index_of(std::span<const int> occupations) const;
  std::vector<int> occupations(Index index) const;
  int occupation(Index index, Mode m) const;

  HilbertSpec subspec(std::span<const Mode> modes) const;
  /// The factors of this space that are not in `sub`.
  HilbertSpec complement(const HilbertSpec& sub) const;
  /// Union of two specs that agree on the cutoffs of shared modes.
  HilbertSpec merged(const HilbertSpec& other) const;

  bool operator==(const HilbertSpec& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Factor> factors_;
  std::vector<Index> strides_;
  Index dim_ = 1;
};

/// Global offsets (in `parent`) of every local basis index of `sub`, with the
/// remaining modes of `parent` at occupation zero.
std::vector<Index> embedding_offsets(const HilbertSpec& parent, const HilbertSpec& sub);

/// Complex amplitudes over a truncated Fock basis. `leakage` is the squared
/// norm lost to truncation by earlier operations; constructions keep
/// norm^2 + leakage = 1.
class PureState {
 public:
  PureState(HilbertSpec spec, Eigen::VectorXcd amplitudes, double leakage = 0.0);

  const HilbertSpec& spec() const { return spec_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  double leakage() const { return leakage_; }
  double norm_squared() const { return amplitudes_.squaredNorm(); }
  Complex amplitude(std::span<const int> occupations) const;

 private:
  HilbertSpec spec_;
  Eigen::VectorXcd amplitudes_;
  double leakage_;
};

PureState vacuum(const HilbertSpec& spec);
PureState basis_state(const HilbertSpec& spec, std::span<const int> occupations);

/// sum_k c_k |x_k> with an explicitly supplied leakage. All terms must share a spec.
PureState superpose(std::span<const std::pair<Complex, const PureState*>> terms,
                    double leakage);

/// <x|y>, conjugate-linear in x.
Complex inner(const PureState& x, const PureState& y);

struct OperatorFlags {
  bool hermitian = false;
  /// Unitary up to truncation, see unitarity_defect().
  bool unitary = false;
  double unitary_tolerance = 1e-12;
};

/// A complex matrix acting on the factors named by `support()` and as the
/// identity on every other mode of whatever space it is applied to.
/// Storage is sparse column-major; small operators can be read back densely.
class LinearOperator {
 public:
  using Sparse = Eigen::SparseMatrix<Complex>;

  /// Largest support dimension for which dense() is permitted.
  static constexpr Index kMaxDenseDim = 8192;

  LinearOperator(HilbertSpec support, const Eigen::MatrixXcd& matrix,
                 OperatorFlags flags = {});
  LinearOperator(HilbertSpec support, Sparse matrix, OperatorFlags flags = {});

  static LinearOperator identity(const HilbertSpec& support);

  const HilbertSpec& support() const { return support_; }
  Index dim() const { return support_.dim(); }
  const Sparse& matrix() const { return matrix_; }
  Eigen::MatrixXcd dense() const;
  Complex element(Index row, Index col) const { return matrix_.coeff(row, col); }

  const OperatorFlags& flags() const { return flags_; }
  bool hermitian() const { return flags_.hermitian; }
  bool unitary() const { return flags_.unitary; }
  LinearOperator with_flags(OperatorFlags flags) const;

  LinearOperator adjoint() const;

 private:
  HilbertSpec support_;
  Sparse matrix_;
  OperatorFlags flags_;
};

enum class LadderKind { raise, lower };

/// Truncated a^dagger (raise) or a (lower) on `mode`, supported on that mode
/// alone. Raising from n = cutoff gives zero.
LinearOperator ladder(const HilbertSpec& spec, Mode mode, LadderKind kind);
LinearOperator number_operator(const HilbertSpec& spec, Mode mode);

/// Re-express `op` on the larger space `target` (op tensor identity).
LinearOperator lift(const LinearOperator& op, const HilbertSpec& target);
/// Same as lift(); named for the common case of lifting to the full space.
LinearOperator embed(const LinearOperator& op, const HilbertSpec& spec);

/// Operator algebra. Operands with different supports are lifted to the
/// union of their supports first.
LinearOperator multiply(const LinearOperator& a, const LinearOperator& b);
LinearOperator add(const LinearOperator& a, const LinearOperator& b);
LinearOperator scale(Complex s, const LinearOperator& a);
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// Max-abs entry of the difference, after lifting to a common support.
double max_abs_difference(const LinearOperator& a, const LinearOperator& b);

/// Matrix-vector product with implicit identity off the support. When the
/// operator is flagged unitary the norm drop is added to the leakage; the
/// result is never renormalized.
PureState apply(const LinearOperator& op, const PureState& state);

/// Raw form of apply() on an amplitude vector laid out over `parent`.
Eigen::VectorXcd apply_to_vector(const LinearOperator& op, const HilbertSpec& parent,
                                 const Eigen::VectorXcd& amplitudes);

/// Max-abs entry of (M^dagger M - I) over the columns whose occupations sum to
/// at most half the smallest cutoff of the support (the region where a
/// truncated unitary is expected to be exact).
double unitarity_defect(const LinearOperator& op);

}  // namespace hilbert
}  // namespace kalamidas

#endif  // KALAMIDAS_HILBERT_HPP
