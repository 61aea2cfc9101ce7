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

#include "kalamidas/random.hpp"

#include <cmath>
#include <numbers>

namespace kalamidas::random {

std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ static_cast<std::uint64_t>(stream)) ^ index);
}

double Gaussian::uniform_open() {
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double Gaussian::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Gaussian::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Eigen::MatrixXcd complex_gaussian(Eigen::Index rows, Eigen::Index cols, Gaussian& g) {
  Eigen::MatrixXcd m(rows, cols);
  // filled column by column so the draw order is fixed
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = g.next_complex();
  }
  return m;
}

Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& a) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

Eigen::MatrixXcd haar_unitary(Eigen::Index n, std::uint64_t seed) {
  Gaussian g(seed);
  return orthonormal_columns(complex_gaussian(n, n, g));
}

Eigen::MatrixXcd random_isometry(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Gaussian g(seed);
  return orthonormal_columns(complex_gaussian(rows, cols, g));
}

}  // namespace kalamidas::random
