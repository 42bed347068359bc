// Copyright 2026 The mipt-dqite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mipt/dense/density.hpp"
#include "mipt/error.hpp"
#include "mipt/stabilizer/clifford2q.hpp"
#include "mipt/stabilizer/gf2.hpp"
#include "mipt/stabilizer/pauli_string.hpp"
#include "mipt/stabilizer/tableau.hpp"
#include "oracles.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace mipt {
namespace {

using testing::embed;
using testing::pauli2;

Eigen::MatrixXcd pauli_matrix_of(const PauliString& p) {
  const int n = static_cast<int>(p.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, pauli2(p.label(static_cast<std::size_t>(q))));
    m = next;
  }
  return m * std::pow(std::complex<double>(0, 1), p.phase());
}

Eigen::MatrixXcd local_pauli_matrix(LocalPauli p) {
  const char l0 = "IXZY"[(p.bits & 1) | ((p.bits >> 1) & 1) << 1];
  const char l1 = "IXZY"[((p.bits >> 2) & 1) | ((p.bits >> 3) & 1) << 1];
  Eigen::MatrixXcd m(4, 4);
  // Local index b0 + 2 b1, so qubit 1 is the slow index.
  m = Eigen::kroneckerProduct(pauli2(l1), pauli2(l0));
  return p.sign ? Eigen::MatrixXcd(-m) : m;
}

TEST(PauliString, ParseAndPrintRoundTrip) {
  for (const char* s : {"+XIZ", "-iYY", "+IIII", "+iZ"}) EXPECT_EQ(PauliString::parse(s).str(), s);
  EXPECT_EQ(PauliString::parse("ZZ").str(), "+ZZ");
  EXPECT_THROW(PauliString::parse("+XQ"), InvalidArgument);
}

TEST(PauliString, SingleQubitProductsCarryPhases) {
  EXPECT_EQ((PauliString::parse("X") * PauliString::parse("Y")).str(), "+iZ");
  EXPECT_EQ((PauliString::parse("Y") * PauliString::parse("X")).str(), "-iZ");
  EXPECT_EQ((PauliString::parse("Z") * PauliString::parse("X")).str(), "+iY");
  EXPECT_EQ((PauliString::parse("Y") * PauliString::parse("Y")).str(), "+I");
}

TEST(PauliString, ProductMatchesMatrixProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    PauliString a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      a.set(static_cast<std::size_t>(q), "IXYZ"[rng() % 4]);
      b.set(static_cast<std::size_t>(q), "IXYZ"[rng() % 4]);
    }
    a.set_phase(static_cast<int>(rng() % 4));
    const Eigen::MatrixXcd expect = pauli_matrix_of(a) * pauli_matrix_of(b);
    EXPECT_LT((pauli_matrix_of(a * b) - expect).norm(), 1e-12);
    const Eigen::MatrixXcd comm = pauli_matrix_of(a) * pauli_matrix_of(b) - pauli_matrix_of(b) * pauli_matrix_of(a);
    EXPECT_EQ(a.commutes(b), comm.norm() < 1e-12);
  }
}

TEST(PauliString, WideStringsUseSeveralWords) {
  PauliString a(130), b(130);
  a.set(0, 'X');
  a.set(129, 'Z');
  b.set(129, 'X');
  EXPECT_FALSE(a.commutes(b));
  EXPECT_EQ(a.weight(), 2U);
  b.set(0, 'Z');
  EXPECT_TRUE(a.commutes(b));
}

TEST(Gf2, RankMatchesNaiveElimination) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 40;
    const std::size_t cols = 1 + rng() % 150;
    const double density = (rng() % 100) / 100.0;
    BitMatrix m(rows, cols);
    std::vector<std::vector<bool>> naive(rows, std::vector<bool>(cols));
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const bool v = bit(rng);
        m.set(r, c, v);
        naive[r][c] = v;
      }
    }
    // Duplicate rows to force dependencies.
    if (rows > 2) {
      for (std::size_t c = 0; c < cols; ++c) {
        m.set(rows - 1, c, m.get(0, c) != m.get(1, c));
        naive[rows - 1][c] = naive[0][c] != naive[1][c];
      }
    }
    EXPECT_EQ(rank_gf2(m), testing::naive_rank(naive));
  }
}

TEST(Gf2, IdentityHasFullRank) {
  BitMatrix m(100, 100);
  for (std::size_t i = 0; i < 100; ++i) m.set(i, i, true);
  EXPECT_EQ(rank_gf2(m), 100U);
  EXPECT_EQ(rank_gf2(BitMatrix(5, 70)), 0U);
}

TEST(Clifford2Q, GroupHasCanonicalOrder) {
  const auto& g = Clifford2QGroup::instance();
  ASSERT_EQ(g.size(), Clifford2QGroup::kOrder);
  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    std::vector<std::uint8_t> key;
    for (const auto& im : g[i].images) {
      key.push_back(im.bits);
      key.push_back(im.sign);
    }
    EXPECT_TRUE(seen.insert(key).second);
    EXPECT_EQ(g.index_of(g[i].images), i);
    EXPECT_EQ(g.index_of_word(g[i].word), i);
  }
  const auto& id = g[g.identity_index()];
  EXPECT_TRUE(id.word.empty());
  EXPECT_EQ(id.images[0].bits, 0b0001);
  EXPECT_EQ(id.images[1].bits, 0b0010);
  EXPECT_EQ(id.images[2].bits, 0b0100);
  EXPECT_EQ(id.images[3].bits, 0b1000);
}

TEST(Clifford2Q, UnitaryConjugatesGeneratorsToImages) {
  const auto& g = Clifford2QGroup::instance();
  std::mt19937_64 rng(3);
  const std::array<LocalPauli, 4> gens{LocalPauli{0b0001, 0}, LocalPauli{0b0010, 0}, LocalPauli{0b0100, 0},
                                       LocalPauli{0b1000, 0}};
  for (int trial = 0; trial < 300; ++trial) {
    const auto& c = g[static_cast<std::uint32_t>(rng() % g.size())];
    const Eigen::Matrix4cd u = c.unitary();
    EXPECT_TRUE(is_unitary(u, 1e-12));
    for (int k = 0; k < 4; ++k) {
      const Eigen::MatrixXcd lhs = u * local_pauli_matrix(gens[static_cast<std::size_t>(k)]) * u.adjoint();
      EXPECT_LT((lhs - local_pauli_matrix(c.images[static_cast<std::size_t>(k)])).norm(), 1e-12);
    }
    for (std::uint8_t bits = 0; bits < 16; ++bits) {
      const Eigen::MatrixXcd lhs = u * local_pauli_matrix(LocalPauli{bits, 0}) * u.adjoint();
      EXPECT_LT((lhs - local_pauli_matrix(c.table[bits])).norm(), 1e-12);
    }
  }
}

TEST(Clifford2Q, CacheTextRoundTrips) {
  const Clifford2QGroup built = Clifford2QGroup::build();
  const std::string text = built.to_cache_text();
  const Clifford2QGroup loaded = Clifford2QGroup::from_cache_text(text);
  ASSERT_EQ(loaded.size(), built.size());
  for (std::uint32_t i = 0; i < built.size(); i += 97) {
    EXPECT_EQ(loaded[i].word, built[i].word);
    EXPECT_EQ(loaded[i].images, built[i].images);
  }
  EXPECT_THROW(Clifford2QGroup::from_cache_text("{"), MalformedInput);
  EXPECT_THROW(Clifford2QGroup::from_cache_text(R"({"format_version":1,"order":3,"words":[]})"), MalformedInput);
}

TEST(StabilizerTableau, InitialStateIsAllZeros) {
  StabilizerTableau t(5);
  for (int q = 0; q < 5; ++q) {
    EXPECT_TRUE(t.is_deterministic_z(q));
    std::mt19937_64 rng(1);
    const auto r = measure_z(t, q, rng);
    EXPECT_EQ(r.outcome, 0);
    EXPECT_EQ(r.born_p, 1.0);
  }
  EXPECT_TRUE(t.check_invariants());
  EXPECT_THROW(force_z(t, 0, 1), ImpossibleOutcome);
}

TEST(StabilizerTableau, RandomOutcomeIsFairAndRepeatable) {
  int ones = 0;
  const int trials = 4000;
  for (int s = 0; s < trials; ++s) {
    StabilizerTableau t(2);
    t.h(0);
    std::mt19937_64 rng(static_cast<std::uint64_t>(s));
    const auto r = measure_z(t, 0, rng);
    EXPECT_EQ(r.born_p, 0.5);
    ones += r.outcome;
    const auto again = measure_z(t, 0, rng);
    EXPECT_EQ(again.outcome, r.outcome);
    EXPECT_EQ(again.born_p, 1.0);
  }
  // Binomial(4000, 1/2): 5 standard deviations is about 158.
  EXPECT_NEAR(ones, trials / 2, 160);
}

TEST(StabilizerTableau, BellPairEntropies) {
  StabilizerTableau t(4);
  t.h(0);
  t.cx(0, 1);
  EXPECT_DOUBLE_EQ(entropy(t, Subsystem({0}, 4)), 1.0);
  EXPECT_DOUBLE_EQ(entropy(t, Subsystem({0, 1}, 4)), 0.0);
  EXPECT_DOUBLE_EQ(mutual_info(t, Subsystem({0}, 4), Subsystem({1}, 4)), 2.0);
  EXPECT_DOUBLE_EQ(mutual_info(t, Subsystem({0}, 4), Subsystem({2, 3}, 4)), 0.0);
  EXPECT_THROW(mutual_info(t, Subsystem({0, 1}, 4), Subsystem({1}, 4)), InvalidArgument);
}

TEST(StabilizerTableau, DisjointRegionsOfProductStateHaveZeroMutualInfo) {
  StabilizerTableau t(16);
  for (int q = 0; q < 16; q += 2) t.h(q);
  for (int q = 1; q < 16; q += 3) t.s(q);
  EXPECT_EQ(mutual_info(t, Subsystem({0, 1, 2}, 16), Subsystem({5, 9, 12, 15}, 16)), 0.0);
}

TEST(StabilizerTableau, RejectsBadGateArguments) {
  StabilizerTableau t(3);
  EXPECT_THROW(apply_clifford_2q(t, Clifford2QGroup::kOrder, 0, 1), InvalidArgument);
  EXPECT_THROW(apply_clifford_2q(t, 0, 1, 1), InvalidArgument);
  EXPECT_THROW(t.h(3), InvalidArgument);
}

// Evolves a tableau and a dense state through the same random Clifford
// circuit with measurements and compares stabilizers and entropies.
TEST(StabilizerTableau, AgreesWithDenseOracle) {
  const auto& group = Clifford2QGroup::instance();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    StabilizerTableau tab(n);
    StateVector psi(n);
    for (int step = 0; step < 40; ++step) {
      const int kind = static_cast<int>(rng() % 6);
      const int q0 = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      int q1 = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      if (q1 >= q0) ++q1;
      if (kind <= 2) {
        const auto idx = static_cast<std::uint32_t>(rng() % group.size());
        apply_clifford_2q(tab, idx, q0, q1);
        apply_2q_unitary(psi, group[idx].unitary(), q0, q1);
      } else if (kind == 3) {
        tab.h(q0);
        Eigen::Matrix2cd h;
        h << 1, 1, 1, -1;
        apply_local_matrix(psi, h / std::sqrt(2.0), Subsystem({q0}, n));
      } else if (kind == 4) {
        tab.cx(q0, q1);
        Eigen::Matrix4cd cx = Eigen::Matrix4cd::Zero();
        cx(0, 0) = cx(2, 2) = 1;
        cx(1, 3) = cx(3, 1) = 1;
        apply_2q_unitary(psi, cx, q0, q1);
      } else {
        const double p1 = born_probability(psi, q0, 1);
        const auto r = measure_z(tab, q0, rng);
        if (r.born_p == 1.0) {
          EXPECT_NEAR(r.outcome == 1 ? p1 : 1.0 - p1, 1.0, 1e-10);
        } else {
          EXPECT_NEAR(p1, 0.5, 1e-10);
        }
        project_z(psi, q0, r.outcome);
      }
    }
    ASSERT_TRUE(tab.check_invariants());
    for (int i = 0; i < n; ++i) EXPECT_NEAR(pauli_expectation(psi, tab.stabilizer(i)), 1.0, 1e-10);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<int> region;
      for (int q = 0; q < n; ++q) {
        if (rng() % 2) region.push_back(q);
      }
      if (region.empty()) continue;
      EXPECT_NEAR(entropy(tab, Subsystem(region, n)), testing::schmidt_entropy(psi, region), 1e-9);
    }
  }
}

}  // namespace
}  // namespace mipt
