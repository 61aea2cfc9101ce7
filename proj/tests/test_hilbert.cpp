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

#include <random>
#include <set>

#include "doctest.h"
#include "kalamidas/hilbert.hpp"
#include "oracles.hpp"

using namespace kalamidas;
using namespace kalamidas::hilbert;

namespace {

HilbertSpec spec_of(const std::vector<int>& cutoffs) {
  std::vector<HilbertSpec::Factor> f;
  for (std::size_t k = 0; k < cutoffs.size(); ++k) f.push_back({kAllModes[k], cutoffs[k]});
  return HilbertSpec(f);
}

Eigen::VectorXcd random_vector(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (Index i = 0; i < n; ++i) v(i) = {g(rng), g(rng)};
  return v;
}

}  // namespace

TEST_CASE("mode labels round-trip") {
  for (Mode m : kAllModes) CHECK(parse_mode(label(m)) == m);
  CHECK_FALSE(parse_mode("c1").has_value());
  CHECK(is_left(Mode::b1));
  CHECK_FALSE(is_left(Mode::a2));
}

TEST_CASE("index_of matches the mixed-radix oracle on random specs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> cutoffs(6);
    for (int k = 0; k < 6; ++k) cutoffs[k] = 1 + static_cast<int>(rng() % 4);
    const HilbertSpec s = spec_of(cutoffs);
    REQUIRE(s.dim() == oracle::dimension(cutoffs));
    for (int probe = 0; probe < 40; ++probe) {
      const long idx = static_cast<long>(rng() % s.dim());
      const auto occ = oracle::occupations(cutoffs, idx);
      CHECK(s.index_of(occ) == idx);
      CHECK(s.occupations(idx) == occ);
      CHECK(s.occupation(idx, Mode::b2) == occ[3]);
    }
  }
}

TEST_CASE("occupation indexing is a bijection") {
  for (int c : {2, 3}) {
    const HilbertSpec s = HilbertSpec::uniform(kAllModes, c);
    CHECK(s.dim() == (c == 2 ? 729 : 4096));
    std::set<std::vector<int>> seen;
    for (Index i = 0; i < s.dim(); ++i) {
      const auto occ = s.occupations(i);
      CHECK(s.index_of(occ) == i);
      seen.insert(occ);
    }
    CHECK(static_cast<Index>(seen.size()) == s.dim());
  }
}

TEST_CASE("spec construction rejects bad factor lists") {
  using F = HilbertSpec::Factor;
  CHECK_THROWS_AS(HilbertSpec({F{Mode::a2, 2}, F{Mode::a1, 2}}), Error);
  CHECK_THROWS_AS(HilbertSpec({F{Mode::a2, -1}}), Error);
  CHECK_THROWS_AS(HilbertSpec({F{Mode::a1, 0}}), Error);
  const HilbertSpec s = HilbertSpec::uniform(kAllModes, 2);
  const std::vector<int> too_short = {0, 0};
  CHECK_THROWS_AS(s.index_of(too_short), Error);
  const std::vector<int> too_high = {0, 0, 3, 0, 0, 0};
  CHECK_THROWS_AS(s.index_of(too_high), Error);
}

TEST_CASE("subspec, complement and merge") {
  const HilbertSpec s = HilbertSpec::full({1, 1, 2, 3, 4, 5});
  const HilbertSpec left = s.subspec(kLeftModes);
  const HilbertSpec right = s.complement(left);
  CHECK(left.dim() == 4);
  CHECK(right.dim() == 3 * 4 * 5 * 6);
  CHECK(left.merged(right) == s);
  CHECK(s.contains(right));
  CHECK_FALSE(left.contains(right));
  CHECK(s.stride(Mode::b3) == 1);
  CHECK(s.stride(Mode::a3) == 6);
}

TEST_CASE("embedding offsets place the complement at vacuum") {
  const HilbertSpec s = HilbertSpec::full({1, 1, 2, 2, 2, 2});
  const std::array<Mode, 2> pair = {Mode::b1, Mode::a3};
  const HilbertSpec sub = s.subspec(pair);
  const auto off = embedding_offsets(s, sub);
  REQUIRE(static_cast<Index>(off.size()) == sub.dim());
  for (Index j = 0; j < sub.dim(); ++j) {
    const auto local = sub.occupations(j);
    const std::vector<int> full = {0, local[0], 0, 0, local[1], 0};
    CHECK(off[j] == s.index_of(full));
  }
}

TEST_CASE("ladder operators follow the truncated Fock rules") {
  const std::array<Mode, 1> m = {Mode::a2};
  const HilbertSpec s = HilbertSpec::uniform(m, 5);
  const LinearOperator up = ladder(s, Mode::a2, LadderKind::raise);
  const LinearOperator down = ladder(s, Mode::a2, LadderKind::lower);
  for (int n = 0; n < 5; ++n) {
    CHECK(std::abs(up.element(n + 1, n) - std::sqrt(n + 1.0)) < 1e-15);
    CHECK(std::abs(down.element(n, n + 1) - std::sqrt(n + 1.0)) < 1e-15);
  }
  // a^dagger on the top level vanishes
  for (int k = 0; k <= 5; ++k) CHECK(up.element(k, 5) == Complex(0.0));
  CHECK(max_abs_difference(down, up.adjoint()) == 0.0);

  // [a, a^dagger] = I except the top level, where it is -cutoff
  const Eigen::MatrixXcd c = commutator(down, up).dense();
  for (int n = 0; n < 5; ++n) CHECK(std::abs(c(n, n) - 1.0) < 1e-14);
  CHECK(std::abs(c(5, 5) + 5.0) < 1e-14);

  const LinearOperator num = number_operator(s, Mode::a2);
  CHECK(num.hermitian());
  CHECK(max_abs_difference(num, multiply(up, down)) < 1e-14);
}

TEST_CASE("apply agrees with the dense lifted matrix") {
  std::mt19937_64 rng(11);
  const HilbertSpec s = HilbertSpec::full({1, 1, 2, 1, 2, 1});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Mode> modes;
    for (Mode m : kAllModes) {
      if (rng() % 2) modes.push_back(m);
    }
    if (modes.empty()) modes.push_back(Mode::a2);
    const HilbertSpec sub = s.subspec(modes);
    const Eigen::MatrixXcd local =
        Eigen::MatrixXcd::NullaryExpr(sub.dim(), sub.dim(), [&] {
          std::normal_distribution<double> g;
          return Complex(g(rng), g(rng));
        });
    const LinearOperator op(sub, local);
    const Eigen::MatrixXcd full = embed(op, s).dense();
    // brute-force lift: out(i) = sum_j op(i_sub, j_sub) in(j) when the
    // complement occupations agree
    Eigen::MatrixXcd brute = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
    for (Index i = 0; i < s.dim(); ++i) {
      for (Index j = 0; j < s.dim(); ++j) {
        const auto oi = s.occupations(i);
        const auto oj = s.occupations(j);
        std::vector<int> si, sj;
        bool same = true;
        for (int k = 0; k < 6; ++k) {
          if (sub.contains(kAllModes[k])) {
            si.push_back(oi[k]);
            sj.push_back(oj[k]);
          } else if (oi[k] != oj[k]) {
            same = false;
          }
        }
        if (same) brute(i, j) = local(sub.index_of(si), sub.index_of(sj));
      }
    }
    CHECK((full - brute).cwiseAbs().maxCoeff() < 1e-13);

    const PureState psi(s, random_vector(s.dim(), rng));
    const PureState out = apply(op, psi);
    CHECK((out.amplitudes() - brute * psi.amplitudes()).norm() < 1e-11);
  }
}

TEST_CASE("operator algebra matches dense products") {
  std::mt19937_64 rng(5);
  const HilbertSpec s = HilbertSpec::full({1, 1, 2, 2, 1, 1});
  const std::array<Mode, 2> p1 = {Mode::a1, Mode::a2};
  const std::array<Mode, 2> p2 = {Mode::a2, Mode::b3};
  auto random_op = [&](const HilbertSpec& sub) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(sub.dim(), sub.dim());
    for (Index i = 0; i < m.size(); ++i) m.data()[i] = {g(rng), g(rng)};
    return LinearOperator(sub, m);
  };
  const LinearOperator a = random_op(s.subspec(p1));
  const LinearOperator b = random_op(s.subspec(p2));
  const Eigen::MatrixXcd da = embed(a, s).dense();
  const Eigen::MatrixXcd db = embed(b, s).dense();
  CHECK((embed(multiply(a, b), s).dense() - da * db).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((embed(add(a, b), s).dense() - (da + db)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((embed(commutator(a, b), s).dense() - (da * db - db * da)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((embed(scale({0.0, 2.0}, a), s).dense() - Complex(0.0, 2.0) * da).cwiseAbs().maxCoeff() <
        1e-13);
  CHECK(multiply(a, b).support().num_modes() == 3);
}

TEST_CASE("unitary then adjoint restores the state") {
  std::mt19937_64 rng(3);
  const HilbertSpec s = HilbertSpec::full({1, 1, 2, 2, 2, 2});
  const std::array<Mode, 2> pair = {Mode::a2, Mode::b3};
  const HilbertSpec sub = s.subspec(pair);
  const Eigen::MatrixXcd q = random_vector(sub.dim() * sub.dim(), rng)
                                 .reshaped(sub.dim(), sub.dim())
                                 .householderQr()
                                 .householderQ();
  const LinearOperator u(sub, q, {.unitary = true});
  CHECK(unitarity_defect(u) < 1e-13);
  Eigen::VectorXcd v = random_vector(s.dim(), rng);
  v.normalize();
  const PureState psi(s, v);
  const PureState back = apply(u.adjoint(), apply(u, psi));
  CHECK((back.amplitudes() - v).norm() < 1e-12);
  CHECK(back.leakage() < 1e-12);
}

TEST_CASE("truncation loss is booked as leakage and never renormalized") {
  const std::array<Mode, 1> m = {Mode::a2};
  const HilbertSpec s = HilbertSpec::uniform(m, 3);
  // flagged unitary but kills |3>: the dropped mass must appear as leakage
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(4, 4);
  d(3, 3) = 0.0;
  const LinearOperator p(s, d, {.unitary = true});
  Eigen::VectorXcd v(4);
  v << 0.6, 0.0, 0.0, 0.8;
  const PureState out = apply(p, PureState(s, v));
  CHECK(out.norm_squared() == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(out.leakage() == doctest::Approx(0.64).epsilon(1e-15));
  // without the flag nothing is booked
  const PureState plain = apply(p.with_flags({}), PureState(s, v));
  CHECK(plain.leakage() == 0.0);
}

TEST_CASE("vacuum, basis states and superposition") {
  const HilbertSpec s = HilbertSpec::full({1, 1, 1, 1, 1, 1});
  const PureState vac = vacuum(s);
  CHECK(vac.amplitudes()(0) == Complex(1.0));
  const std::vector<int> o1 = {1, 0, 1, 0, 0, 0};
  const std::vector<int> o2 = {0, 1, 0, 1, 0, 0};
  const PureState x = basis_state(s, o1);
  const PureState y = basis_state(s, o2);
  const double h = 1.0 / std::sqrt(2.0);
  const std::pair<Complex, const PureState*> terms[] = {{h, &x}, {Complex(0, h), &y}};
  const PureState sup = superpose(terms, 0.0);
  CHECK(sup.norm_squared() == doctest::Approx(1.0));
  CHECK(std::abs(sup.amplitude(o2) - Complex(0, h)) < 1e-16);
  CHECK(std::abs(inner(x, sup) - h) < 1e-16);
  CHECK(std::abs(inner(sup, y) - Complex(0, -h)) < 1e-16);

  const PureState other = vacuum(HilbertSpec::full({1, 1, 1, 1, 1, 2}));
  const std::pair<Complex, const PureState*> bad[] = {{1.0, &x}, {1.0, &other}};
  CHECK_THROWS_AS(superpose(bad, 0.0), Error);
  CHECK_THROWS_AS(inner(x, other), Error);
}

TEST_CASE("dense readback is refused for large supports") {
  const HilbertSpec big = HilbertSpec::full({1, 1, 8, 8, 8, 8});
  const LinearOperator id = LinearOperator::identity(big);
  try {
    (void)id.dense();
    FAIL("dense() should throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}
