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

namespace tropfan {
namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> dist(-3, 3);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

IntVector random_vector(std::mt19937& rng, std::size_t n) {
  return random_matrix(rng, 1, n).row_vector(0);
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

TEST(Subsets, LexicographicOrderAndIndex) {
  const auto& s = subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (Subset{0, 1}));
  EXPECT_EQ(s.back(), (Subset{2, 3}));
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(subset_index(4, s[i]), i);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 4), 0u);
}

TEST(ShuffleSign, Basics) {
  EXPECT_EQ(shuffle_sign({0}, {1}), 1);
  EXPECT_EQ(shuffle_sign({1}, {0}), -1);
  EXPECT_EQ(shuffle_sign({0, 2}, {1}), -1);
  EXPECT_EQ(shuffle_sign({0}, {0}), 0);
}

TEST(Compound, CauchyBinet) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4);
    IntMatrix b = random_matrix(rng, 4, 3);
    for (std::size_t p = 0; p <= 3; ++p)
      ASSERT_EQ(compound(a * b, p), compound(a, p) * compound(b, p));
  }
}

TEST(Compound, TopPowerIsDeterminant) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 3);
    IntMatrix c = compound(a, 3);
    ASSERT_EQ(c(0, 0), determinant(a));
  }
}

TEST(WedgeRows, MatchesCompoundOfRows) {
  std::mt19937 rng(4);
  IntMatrix m = random_matrix(rng, 2, 4);
  IntVector w = wedge_rows(m);
  // Coordinate I is the minor on columns I.
  for (const auto& cols : subsets(4, 2)) {
    Integer minor = m(0, cols[0]) * m(1, cols[1]) - m(0, cols[1]) * m(1, cols[0]);
    EXPECT_EQ(w[subset_index(4, cols)], minor);
  }
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  std::mt19937 rng(9);
  const std::size_t n = 4;
  for (int trial = 0; trial < 30; ++trial) {
    IntVector a = random_vector(rng, n);
    IntVector b = random_vector(rng, n);
    IntVector c = random_vector(rng, binomial(n, 2));
    auto ab = wedge(a, 1, b, 1, n);
    auto ba = wedge(b, 1, a, 1, n);
    for (std::size_t i = 0; i < ab.size(); ++i) ASSERT_EQ(ab[i], -ba[i]);
    ASSERT_EQ(wedge(ab, 2, c, 2, n), wedge(a, 1, wedge(b, 1, c, 2, n), 3, n));
    ASSERT_EQ(wedge(c, 2, a, 1, n), wedge(a, 1, c, 2, n));
  }
}

TEST(Contraction, FormContractionIsAdjointToWedge) {
  std::mt19937 rng(12);
  const std::size_t n = 4;
  for (int trial = 0; trial < 30; ++trial) {
    IntVector alpha = random_vector(rng, binomial(n, 3));
    IntVector v = random_vector(rng, n);
    IntVector u = random_vector(rng, binomial(n, 2));
    IntVector k = contract_form(alpha, 3, v, 1, n);
    ASSERT_EQ(dot(k, u), dot(alpha, wedge(v, 1, u, 2, n)));
  }
}

TEST(Contraction, VectorContractionIsAdjointToFormWedge) {
  std::mt19937 rng(13);
  const std::size_t n = 4;
  for (int trial = 0; trial < 30; ++trial) {
    IntVector w = random_vector(rng, binomial(n, 3));
    IntVector alpha = random_vector(rng, n);
    IntVector beta = random_vector(rng, binomial(n, 2));
    IntVector c = contract_vector(w, 3, alpha, 1, n);
    ASSERT_EQ(dot(beta, c), dot(wedge(alpha, 1, beta, 2, n), w));
  }
}

TEST(Contraction, DegreeZeroAndFullDegree) {
  const std::size_t n = 2;
  IntVector alpha{5};  // e1*^e2*
  IntVector one{1};
  EXPECT_EQ(contract_form(alpha, 2, one, 0, n), alpha);
  IntVector e12{1};
  EXPECT_EQ(contract_form(alpha, 2, e12, 2, n), (IntVector{5}));
  // Contracting the dual of e1^e2 by e1 gives the functional e2*.
  IntVector e1{1, 0};
  EXPECT_EQ(contract_form(IntVector{1}, 2, e1, 1, n), (IntVector{0, 1}));
}

}  // namespace
}  // namespace tropfan
