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

#ifndef KALAMIDAS_RANDOM_HPP
#define KALAMIDAS_RANDOM_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace kalamidas::random {

/// Named streams so independent batteries never share a seed.
enum class Stream : std::uint64_t {
  observable = 1,
  right_unitary = 2,
  kraus = 3,
};

/// splitmix64 finalizer over (seed, stream, index). Every random object in the
/// library is a pure function of a derived seed, so trials can be generated
/// in any order.
std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index);

/// Standard normal deviates from mt19937_64 via Box-Muller. Both pieces are
/// fully specified, so sequences are reproducible across standard libraries
/// (std::normal_distribution is not).
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : engine_(seed) {}

  double next();
  std::complex<double> next_complex() {
    const double re = next();
    return {re, next()};
  }

 private:
  double uniform_open();  // (0, 1]
  double uniform();       // [0, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

Eigen::MatrixXcd complex_gaussian(Eigen::Index rows, Eigen::Index cols, Gaussian& g);

/// Q factor of a thin QR with the phases of R's diagonal folded back in.
Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& a);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal folded back into Q.
Eigen::MatrixXcd haar_unitary(Eigen::Index n, std::uint64_t seed);

/// Random rows x cols isometry (V^dagger V = I), rows >= cols.
Eigen::MatrixXcd random_isometry(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);

}  // namespace kalamidas::random

#endif  // KALAMIDAS_RANDOM_HPP
