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

#include "kalamidas/optics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace kalamidas::optics {

namespace {

bool check_adequacy(const HilbertSpec& spec, Mode mode, Complex alpha, Diagnostics* diag) {
  const int c = spec.cutoff(mode);
  if (cutoff_adequate(c, alpha)) return true;
  if (diag) {
    diag->warn("cutoff " + std::to_string(c) + " on mode " + std::string(label(mode)) +
               " is below the adequacy rule (" + std::to_string(adequacy_cutoff(alpha)) +
               ") for |alpha| = " + std::to_string(std::abs(alpha)) +
               "; accuracy degraded");
  }
  return false;
}

}  // namespace

BeamSplitter make_splitter(Mode first, Mode second, double t, double r) {
  if (first == second) {
    throw Error(ErrorCode::invalid_argument, "beam splitter needs two distinct modes");
  }
  if (!(t >= 0.0 && t <= 1.0) || !(std::abs(r) <= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "beam splitter needs t in [0, 1] and r in [-1, 1]");
  }
  if (std::abs(t * t + r * r - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "beam splitter needs t^2 + r^2 = 1");
  }
  return {first, second, t, r};
}

BeamSplitter central_splitter() {
  return make_splitter(Mode::a1, Mode::b1, std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0);
}

LinearOperator beamsplitter_unitary(const HilbertSpec& spec, const BeamSplitter& bs) {
  const BeamSplitter checked = make_splitter(bs.first, bs.second, bs.t, bs.r);
  const std::array<Mode, 2> pair = {checked.first, checked.second};
  const HilbertSpec local = spec.subspec(pair);
  const int cx = local.cutoff(checked.first);
  const int cy = local.cutoff(checked.second);
  const double theta = std::atan2(checked.r, checked.t);

  auto local_index = [&](int nx, int ny) {
    // local factors are in slot order, which need not be (first, second)
    std::array<int, 2> occ = {nx, ny};
    if (slot(checked.first) > slot(checked.second)) std::swap(occ[0], occ[1]);
    return local.index_of(occ);
  };

  // Generator theta (y^dagger x - x^dagger y) conserves nx + ny, so each total
  // photon number N is exponentiated separately on its complete, untruncated
  // block and then restricted to the kept occupations.
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (int total = 0; total <= cx + cy; ++total) {
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(total + 1, total + 1);
    for (int nx = 0; nx <= total; ++nx) {
      const int ny = total - nx;
      if (nx > 0) gen(nx - 1, nx) += theta * std::sqrt(double(nx) * double(ny + 1));
      if (ny > 0) gen(nx + 1, nx) -= theta * std::sqrt(double(nx + 1) * double(ny));
    }
    const Eigen::MatrixXd block = gen.exp();
    for (int col = std::max(0, total - cy); col <= std::min(total, cx); ++col) {
      for (int row = std::max(0, total - cy); row <= std::min(total, cx); ++row) {
        const double v = block(row, col);
        if (v != 0.0) {
          triplets.emplace_back(local_index(row, total - row), local_index(col, total - col), v);
        }
      }
    }
  }
  LinearOperator::Sparse m(local.dim(), local.dim());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return LinearOperator(local, std::move(m), {.unitary = true, .unitary_tolerance = 1e-12});
}

LinearOperator heisenberg_action(const LinearOperator& u, const LinearOperator& op) {
  if (!u.unitary()) {
    throw Error(ErrorCode::not_unitary, "heisenberg_action needs a unitary");
  }
  return hilbert::multiply(hilbert::multiply(u, op), u.adjoint());
}

double heisenberg_residual(const BeamSplitter& bs, Mode input, int cutoff) {
  if (input != bs.first && input != bs.second) {
    throw Error(ErrorCode::invalid_argument, "input mode is not part of the splitter");
  }
  if (cutoff < 1) throw Error(ErrorCode::invalid_argument, "cutoff must be >= 1");
  const std::array<Mode, 2> pair = {bs.first, bs.second};
  const HilbertSpec spec = HilbertSpec::uniform(pair, cutoff);
  const LinearOperator u = beamsplitter_unitary(spec, bs);
  const auto raise = [&](Mode m) { return hilbert::ladder(spec, m, hilbert::LadderKind::raise); };

  const LinearOperator lhs = heisenberg_action(u, raise(input));
  const bool is_first = input == bs.first;
  const double cx = is_first ? bs.t : -bs.r;
  const double cy = is_first ? bs.r : bs.t;
  const LinearOperator rhs =
      hilbert::add(hilbert::scale(cx, raise(bs.first)), hilbert::scale(cy, raise(bs.second)));

  const HilbertSpec& s = lhs.support();
  const LinearOperator::Sparse diff = lhs.matrix() - hilbert::lift(rhs, s).matrix();
  double worst = 0.0;
  for (Index j = 0; j < diff.outerSize(); ++j) {
    const auto occ = s.occupations(j);
    if (occ[0] + occ[1] > cutoff - 1) continue;
    for (LinearOperator::Sparse::InnerIterator it(diff, j); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

int adequacy_cutoff(Complex alpha) {
  const double a = std::abs(alpha);
  return static_cast<int>(std::ceil(a * a + 5.0 * a + 10.0));
}

bool cutoff_adequate(int cutoff, Complex alpha) { return cutoff >= adequacy_cutoff(alpha); }

namespace {

// exp(alpha a^dagger - alpha* a) on a ladder long enough that the kept
// (c + 1) x (c + 1) block is unaffected by the padding.
Eigen::MatrixXcd padded_displacement(int c, Complex alpha) {
  const int padded = c + adequacy_cutoff(alpha) + 10;
  Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(padded + 1, padded + 1);
  for (int n = 0; n < padded; ++n) {
    const double s = std::sqrt(static_cast<double>(n + 1));
    gen(n + 1, n) = alpha * s;
    gen(n, n + 1) = -std::conj(alpha) * s;
  }
  return gen.exp();
}

}  // namespace

LinearOperator displacement_unitary(const HilbertSpec& spec, Mode mode, Complex alpha,
                                    Diagnostics* diag) {
  check_adequacy(spec, mode, alpha, diag);
  const std::array<Mode, 1> m = {mode};
  const HilbertSpec local = spec.subspec(m);
  const int c = local.cutoff(mode);
  const Eigen::MatrixXcd kept = padded_displacement(c, alpha).topLeftCorner(c + 1, c + 1);
  return LinearOperator(local, kept, {.unitary = true, .unitary_tolerance = 1e-9});
}

int adequate_sector(int cutoff, Complex alpha) {
  if (cutoff < 0) throw Error(ErrorCode::invalid_argument, "cutoff must be >= 0");
  const Eigen::MatrixXcd full = padded_displacement(cutoff, alpha);
  const Index below = cutoff + 1;
  const Index above = full.rows() - below;
  int last = -1;
  for (int n = 0; n <= cutoff; ++n) {
    if (full.col(n).tail(above).squaredNorm() > kSectorTail) break;
    last = n;
  }
  return last;
}

double displacement_unitarity_defect(const HilbertSpec& spec, Mode mode, Complex alpha) {
  const int c = spec.cutoff(mode);
  const int n = adequate_sector(c, alpha);
  if (n < 0) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd d = padded_displacement(c, alpha).topLeftCorner(c + 1, c + 1);
  const Eigen::MatrixXcd g = d.adjoint() * d;
  const Eigen::MatrixXcd block =
      g.topLeftCorner(n + 1, n + 1) - Eigen::MatrixXcd::Identity(n + 1, n + 1);
  return block.cwiseAbs().maxCoeff();
}

PureState coherent_state(const HilbertSpec& spec, Mode mode, Complex alpha, Diagnostics* diag) {
  check_adequacy(spec, mode, alpha, diag);
  const int c = spec.cutoff(mode);
  const Index stride = spec.stride(mode);
  const double mean = std::norm(alpha);

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  Complex amp = std::exp(-0.5 * mean);
  for (int n = 0; n <= c; ++n) {
    if (n > 0) amp *= alpha / std::sqrt(static_cast<double>(n));
    v(n * stride) = amp;
  }

  // Poisson tail beyond the cutoff, summed directly rather than as
  // 1 - (kept mass) to avoid cancellation.
  double term = std::norm(amp);
  double tail = 0.0;
  for (int n = c + 1; n < c + 100000; ++n) {
    term *= mean / n;
    tail += term;
    if (term <= 1e-30 * tail && n > mean) break;
    if (term == 0.0) break;
  }
  return PureState(spec, std::move(v), tail);
}

}  // namespace kalamidas::optics
