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

// Reference computations for the tests. These deliberately avoid the
// library: indexing, amplitudes and traces are recomputed from scratch.

#ifndef KALAMIDAS_TESTS_ORACLES_HPP
#define KALAMIDAS_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// Mixed-radix index with the last mode fastest.
inline long index_of(const std::vector<int>& cutoffs, const std::vector<int>& occ) {
  long idx = 0;
  for (std::size_t k = 0; k < cutoffs.size(); ++k) idx = idx * (cutoffs[k] + 1) + occ[k];
  return idx;
}

inline std::vector<int> occupations(const std::vector<int>& cutoffs, long idx) {
  std::vector<int> occ(cutoffs.size());
  for (std::size_t k = cutoffs.size(); k-- > 0;) {
    occ[k] = static_cast<int>(idx % (cutoffs[k] + 1));
    idx /= cutoffs[k] + 1;
  }
  return occ;
}

inline long dimension(const std::vector<int>& cutoffs) {
  long d = 1;
  for (int c : cutoffs) d *= c + 1;
  return d;
}

// e^{-|b|^2/2} b^n / sqrt(n!), via logs so large n stays finite.
inline cd coherent_amplitude(cd beta, int n) {
  if (n < 0) return 0.0;
  const double mag2 = std::norm(beta);
  if (n == 0) return std::exp(-0.5 * mag2);
  if (beta == 0.0) return 0.0;
  const double logmag = -0.5 * mag2 + n * std::log(std::abs(beta)) - 0.5 * std::lgamma(n + 1.0);
  return std::polar(std::exp(logmag), n * std::arg(beta));
}

// Taylor series of exp for a 2x2 matrix, with scaling and squaring.
inline Eigen::Matrix2cd expm2(const Eigen::Matrix2cd& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  const Eigen::Matrix2cd s = a / std::pow(2.0, squarings);
  Eigen::Matrix2cd term = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * s / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// Reduced density matrix of the first `left` modes, summing over the rest
// one basis pair at a time.
inline Eigen::MatrixXcd partial_trace_first(const std::vector<int>& cutoffs, int left,
                                            const Eigen::VectorXcd& psi) {
  std::vector<int> lc(cutoffs.begin(), cutoffs.begin() + left);
  std::vector<int> rc(cutoffs.begin() + left, cutoffs.end());
  const long dl = dimension(lc);
  const long dr = dimension(rc);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dl, dl);
  for (long i = 0; i < dl; ++i) {
    for (long j = 0; j < dl; ++j) {
      cd acc = 0.0;
      for (long k = 0; k < dr; ++k) {
        std::vector<int> oi = occupations(lc, i);
        std::vector<int> oj = occupations(lc, j);
        const std::vector<int> ok = occupations(rc, k);
        oi.insert(oi.end(), ok.begin(), ok.end());
        oj.insert(oj.end(), ok.begin(), ok.end());
        acc += psi(index_of(cutoffs, oi)) * std::conj(psi(index_of(cutoffs, oj)));
      }
      rho(i, j) = acc;
    }
  }
  return rho;
}

// Amplitudes of
//   1/2 [(a1+ + b1+)(t a2+ + r a3+) + e^{i phi}(-a1+ + b1+)(t b2+ + r b3+)] |C>
// with |C> the product of coherent states beta = (-r alpha, t alpha,
// -r alpha, t alpha) on (a2, a3, b2, b3); alpha = 0 gives the bare state.
// Mode order is a1 b1 a2 b2 a3 b3.
inline Eigen::VectorXcd evolved_direct(const std::vector<int>& cutoffs, cd alpha, double t,
                                       double r, double phi) {
  enum { A1, B1, A2, B2, A3, B3 };
  std::array<cd, 6> beta{0.0, 0.0, -r * alpha, -r * alpha, t * alpha, t * alpha};
  const cd e = std::polar(1.0, phi);
  struct Term {
    cd c;
    int left;
    int right;
  };
  const Term terms[] = {
      {0.5 * t, A1, A2},      {0.5 * r, A1, A3},      {0.5 * t, B1, A2},
      {0.5 * r, B1, A3},      {-0.5 * e * t, A1, B2}, {-0.5 * e * r, A1, B3},
      {0.5 * e * t, B1, B2},  {0.5 * e * r, B1, B3},
  };
  const long dim = dimension(cutoffs);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  for (long idx = 0; idx < dim; ++idx) {
    const std::vector<int> n = occupations(cutoffs, idx);
    cd amp = 0.0;
    for (const Term& term : terms) {
      if (!(n[term.left] == 1 && n[term.left == A1 ? B1 : A1] == 0)) continue;
      cd v = term.c;
      for (int m = A2; m <= B3; ++m) {
        if (m == term.right) {
          v *= std::sqrt(static_cast<double>(n[m])) * coherent_amplitude(beta[m], n[m] - 1);
        } else {
          v *= coherent_amplitude(beta[m], n[m]);
        }
      }
      amp += v;
    }
    psi(idx) = amp;
  }
  return psi;
}

}  // namespace oracle

#endif  // KALAMIDAS_TESTS_ORACLES_HPP
