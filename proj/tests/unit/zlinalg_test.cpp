// Copyright 2026 The tropfan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "tropfan/exterior.hpp"
#include "tropfan/zlinalg.hpp"

namespace tropfan {
namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Determinantal divisors: gcd of all k x k minors, by cofactor expansion.
Integer det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) sub(i - 1, kk++) = m(i, k);
    Integer t = m(0, j) * det_cofactor(sub);
    d += (j % 2 == 0) ? t : Integer(-t);
  }
  return d;
}

std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  std::vector<Integer> out;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(det_cofactor(sub)).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g);
  }
  return out;
}

bool is_unimodular_matrix(const IntMatrix& m) {
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

TEST(Snf, IdentityIsFixed) {
  SmithForm s = snf(IntMatrix::identity(2));
  EXPECT_EQ(s.D, IntMatrix::identity(2));
}

TEST(Snf, DiagonalTwoThree) {
  SmithForm s = snf(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(Snf, ZeroMatrix) {
  SmithForm s = snf(IntMatrix(2, 3));
  EXPECT_TRUE(s.D.is_zero());
  EXPECT_EQ(s.rank, 0u);
}

TEST(Snf, RandomMatricesAgreeWithMinorGcds) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -6, 6);
    SmithForm s = snf(m);
    ASSERT_EQ(s.U * m * s.V, s.D);
    ASSERT_TRUE(is_unimodular_matrix(s.U));
    ASSERT_TRUE(is_unimodular_matrix(s.V));
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) { ASSERT_EQ(s.D(i, j), 0); }
    std::vector<Integer> diag = s.diagonal();
    std::vector<Integer> dd = determinantal_divisors(m);
    ASSERT_EQ(diag.size(), dd.size());
    Integer prod = 1;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      ASSERT_GT(diag[k], 0);
      if (k > 0) { ASSERT_EQ(diag[k] % diag[k - 1], 0); }
      prod *= diag[k];
      ASSERT_EQ(prod, dd[k]);
    }
    ASSERT_EQ(invariant_factors(m), diag);
  }
}

TEST(Cokernel, TorsionExample) {
  AbGroup g = cokernel_group(IntMatrix{{1, 1, -2}, {0, -3, 3}});
  EXPECT_EQ(g.to_string(), "Z x Z/3Z");
}

TEST(Cokernel, NoRelations) {
  IntMatrix m;
  m.set_cols_if_empty(2);
  EXPECT_EQ(cokernel_group(m).to_string(), "Z^2");
}

TEST(Cokernel, UnimodularRelationsKillEverything) {
  EXPECT_TRUE(cokernel_group(IntMatrix::identity(2)).is_trivial());
}

TEST(Cokernel, CoordinatesRespectRelations) {
  IntMatrix rel{{1, 1, -2}, {0, -3, 3}};
  Cokernel c(rel, 3);
  for (std::size_t i = 0; i < rel.rows(); ++i) EXPECT_TRUE(c.is_zero(rel.row(i)));
  IntVector x{1, -1, 0};
  EXPECT_FALSE(c.is_zero(x));
  IntVector x3{3, -3, 0};
  EXPECT_TRUE(c.is_zero(x3));
  EXPECT_EQ(c.coordinates(x).size(), 2u);
}

TEST(AbGroupText, Rendering) {
  EXPECT_EQ(AbGroup{}.to_string(), "0");
  EXPECT_EQ((AbGroup{1, {}}).to_string(), "Z");
  EXPECT_EQ((AbGroup{3, {2}}).to_string(), "Z^3 x Z/2Z");
  EXPECT_EQ(abgroup_from_cyclic(1, {6, 1, 4, -1}).to_string(), "Z x Z/2Z x Z/12Z");
}

TEST(KernelBasis, IdentityHasNoKernel) {
  EXPECT_EQ(kernel_basis(IntMatrix::identity(3)).rows(), 0u);
}

TEST(KernelBasis, ZeroRowHasFullKernel) {
  IntMatrix k = kernel_basis(IntMatrix(1, 3));
  EXPECT_EQ(k.rows(), 3u);
}

TEST(KernelBasis, RandomKernelsAreSaturatedAndComplete) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix m = random_matrix(rng, 2, 5, -3, 3);
    IntMatrix k = kernel_basis(m);
    ASSERT_EQ(k.rows(), 5 - rank(m));
    ASSERT_TRUE((m * k.transpose()).is_zero());
    if (k.rows() > 0) {
      // Saturated: the basis has trivial cokernel torsion.
      ASSERT_TRUE(cokernel_group(k).is_free());
    }
  }
}

TEST(Saturation, Examples) {
  Saturation a = saturate(Sublattice::from_generators(IntMatrix{{1, 0}, {0, 3}}));
  EXPECT_EQ(a.index, 3);
  EXPECT_EQ(a.lattice, Sublattice::full(2));
  Saturation b = saturate(Sublattice::from_generators(IntMatrix{{1, 0}}));
  EXPECT_EQ(b.index, 1);
  EXPECT_EQ(b.lattice.basis, (IntMatrix{{1, 0}}));
  Saturation c = saturate(Sublattice::from_generators(IntMatrix{{2, 0}, {0, 2}}));
  EXPECT_EQ(c.index, 4);
}

TEST(Hnf, ShapeInvariants) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    IntMatrix h = hnf(m);
    int last = -1;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t piv = 0;
      while (piv < h.cols() && h(i, piv) == 0) ++piv;
      ASSERT_LT(piv, h.cols());
      ASSERT_GT(static_cast<int>(piv), last);
      ASSERT_GT(h(i, piv), 0);
      for (std::size_t r = 0; r < i; ++r) {
        ASSERT_GE(h(r, piv), 0);
        ASSERT_LT(h(r, piv), h(i, piv));
      }
      last = static_cast<int>(piv);
    }
    // Same row lattice: every row of m has integral coordinates in h.
    for (std::size_t i = 0; i < m.rows(); ++i) ASSERT_TRUE(row_coordinates(h, m.row(i)).has_value());
    ASSERT_EQ(h.rows(), rank(m));
  }
}

TEST(Solve, IntegralSolutionsSatisfyTheSystem) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4, -4, 4);
    IntVector x0 = random_matrix(rng, 4, 1, -3, 3).col_vector(0);
    IntVector b = mul(a, x0);
    auto x = solve_integral(a, b);
    ASSERT_TRUE(x.has_value());
    ASSERT_EQ(mul(a, *x), b);
  }
  EXPECT_FALSE(solve_integral(IntMatrix{{2}}, IntVector{1}).has_value());
  EXPECT_TRUE(solve(to_rational(IntMatrix{{2}}), RatVector{1}).has_value());
}

TEST(Unimodular, CompletionHasPrescribedColumn) {
  IntVector v{6, 10, 15};
  IntMatrix u = complete_to_unimodular(v);
  EXPECT_TRUE(is_unimodular_matrix(u));
  EXPECT_EQ(u.col_vector(0), v);
  EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(3));
}

TEST(LatticeQuotient, IndexThree) {
  AbGroup g = lattice_quotient(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 3}});
  EXPECT_EQ(g.to_string(), "Z/3Z");
}

}  // namespace
}  // namespace tropfan
