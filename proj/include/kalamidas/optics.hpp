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

#ifndef KALAMIDAS_OPTICS_HPP
#define KALAMIDAS_OPTICS_HPP

#include "kalamidas/error.hpp"
#include "kalamidas/hilbert.hpp"

namespace kalamidas::optics {

using hilbert::HilbertSpec;
using hilbert::LinearOperator;
using hilbert::PureState;

/// Lossless two-mode splitter with real amplitudes. In the Heisenberg picture
///   first^dagger  -> t first^dagger + r second^dagger
///   second^dagger -> -r first^dagger + t second^dagger
struct BeamSplitter {
  Mode first;
  Mode second;
  double t;
  double r;
};

/// Validates t^2 + r^2 = 1 (1e-12), 0 <= t <= 1 and |r| <= 1. A negative r is
/// accepted so sign conventions can be swept.
BeamSplitter make_splitter(Mode first, Mode second, double t, double r);

/// The balanced splitter on (a1, b1).
BeamSplitter central_splitter();

LinearOperator beamsplitter_unitary(const HilbertSpec& spec, const BeamSplitter& bs);

/// U op U^dagger.
LinearOperator heisenberg_action(const LinearOperator& u, const LinearOperator& op);

/// Max-abs deviation of U x^dagger U^dagger from its stated linear image, for
/// x = `input` (one of the splitter's modes), over the sub-cutoff sector of a
/// two-mode space with `cutoff` photons per mode.
double heisenberg_residual(const BeamSplitter& bs, Mode input, int cutoff);

/// Smallest cutoff satisfying the adequacy rule ceil(|alpha|^2 + 5|alpha| + 10).
int adequacy_cutoff(Complex alpha);
bool cutoff_adequate(int cutoff, Complex alpha);

/// Tail mass beyond the cutoff tolerated for a column of the adequate sector.
inline constexpr double kSectorTail = 1e-12;

/// Largest n such that the exact D(alpha)|k> keeps all but kSectorTail of its
/// norm inside the cutoff for every k <= n; -1 when even the vacuum does not.
int adequate_sector(int cutoff, Complex alpha);

/// Max-abs entry of D^dagger D - I restricted to the adequate sector of `mode`.
/// Infinite when the sector is empty.
double displacement_unitarity_defect(const HilbertSpec& spec, Mode mode, Complex alpha);

/// exp(alpha a^dagger - conj(alpha) a) on `mode`, restricted to the truncated
/// ladder. The exponential is taken on a padded ladder and projected back, so
/// entries agree with the untruncated operator and the norm lost through the
/// top of the ladder shows up as leakage when applied.
LinearOperator displacement_unitary(const HilbertSpec& spec, Mode mode, Complex alpha,
                                    Diagnostics* diag = nullptr);

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!) on `mode`, vacuum elsewhere. The
/// Poisson tail above the cutoff is recorded as leakage.
PureState coherent_state(const HilbertSpec& spec, Mode mode, Complex alpha,
                         Diagnostics* diag = nullptr);

}  // namespace kalamidas::optics

#endif  // KALAMIDAS_OPTICS_HPP
