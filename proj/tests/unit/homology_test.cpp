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

#include "fixtures.hpp"
#include "tropfan/homology.hpp"

namespace tropfan {
namespace {

using namespace tropfan::testing;

std::vector<std::string> strings(const std::vector<AbGroup>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(g.to_string());
  return out;
}

bool is_zero_vector(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

struct Built {
  explicit Built(FanData d) : fan(d), comp(fan), sheaf(comp) {}
  Fan fan;
  Compactification comp;
  Sheaf sheaf;
};

std::vector<AbGroup> comp_groups(const Sheaf& s, int p, Coefficients c = Coefficients::kZ) {
  return groups(build_complex(s, Space::kCompactification, p, Variant::kCohomology), c);
}

TEST(CubeGroups, CubeCompactificationCohomology) {
  Built b(cube());
  using V = std::vector<std::string>;
  EXPECT_EQ(strings(comp_groups(b.sheaf, 0)), (V{"Z", "0", "0"}));
  EXPECT_EQ(strings(comp_groups(b.sheaf, 1)), (V{"0", "Z^5", "0"}));
  EXPECT_EQ(strings(comp_groups(b.sheaf, 2)), (V{"0", "Z^2", "Z"}));
}

TEST(CubeGroups, CubeCompactSupportCohomologyOfTheFan) {
  Built b(cube());
  using V = std::vector<std::string>;
  auto hc = [&](int p) {
    return strings(groups(build_complex(b.sheaf, Space::kFan, p, Variant::kCompactSupport), Coefficients::kZ));
  };
  EXPECT_EQ(hc(0), (V{"0", "0", "Z^5"}));
  EXPECT_EQ(hc(1), (V{"0", "0", "Z^3 x Z/2Z"}));
  EXPECT_EQ(hc(2), (V{"0", "Z^2", "Z"}));
}

TEST(Examples, DeltaH11IsZ) {
  Built b(delta());
  EXPECT_EQ(comp_groups(b.sheaf, 1)[1].to_string(), "Z");
}

TEST(Examples, Sigma3H12IsThreeTorsion) {
  Built b(sigma3());
  EXPECT_EQ(comp_groups(b.sheaf, 1)[2].to_string(), "Z/3Z");
  EXPECT_EQ(comp_groups(b.sheaf, 1, Coefficients::kQ)[2].to_string(), "0");
}

TEST(Examples, SquareIsContractible) {
  Built b(cone2());
  EXPECT_EQ(strings(comp_groups(b.sheaf, 0)), (std::vector<std::string>{"Z", "0", "0"}));
}

TEST(Examples, P2CompactSupportRanks) {
  Built b(p2());
  GradedComplex c = build_complex(b.sheaf, Space::kFan, 0, Variant::kCompactSupport);
  ASSERT_EQ(c.degrees(), 3);
  EXPECT_EQ(c.size(0), 1u);
  EXPECT_EQ(c.size(1), 3u);
  EXPECT_EQ(c.size(2), 3u);
}

TEST(Complexes, DifferentialSquaresToZeroEverywhere) {
  for (const auto& fx : all_fixtures()) {
    Built b(fx.make());
    for (int p = 0; p <= b.fan.dim(); ++p) {
      for (Space sp : {Space::kFan, Space::kCompactification})
        for (Variant v : {Variant::kCohomology, Variant::kHomology, Variant::kBorelMoore,
                          Variant::kCompactSupport}) {
          GradedComplex c = build_complex(b.sheaf, sp, p, v);
          EXPECT_NO_THROW(check_complex(c)) << fx.name;
          for (int q = 0; q + 1 < c.degrees(); ++q) {
            if (c.cohomological) {
              EXPECT_TRUE((c.maps[q + 1] * c.maps[q]).is_zero()) << fx.name;
            }
          }
        }
    }
  }
}

TEST(Complexes, BrokenComplexIsDetected) {
  GradedComplex c;
  c.labels = {{BasisLabel{}}, {BasisLabel{}}, {BasisLabel{}}};
  c.maps = {IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix(0, 1)};
  EXPECT_THROW(check_complex(c), InternalError);
}

TEST(Complexes, HomologyIsTheTransposeOfCohomology) {
  for (const auto& fx : all_fixtures()) {
    Built b(fx.make());
    for (int p = 0; p <= b.fan.dim(); ++p) {
      GradedComplex co = build_complex(b.sheaf, Space::kCompactification, p, Variant::kCohomology);
      GradedComplex ho = build_complex(b.sheaf, Space::kCompactification, p, Variant::kHomology);
      ASSERT_EQ(co.degrees(), ho.degrees());
      for (int q = 0; q + 1 < co.degrees(); ++q)
        EXPECT_EQ(co.maps[q].transpose(), ho.maps[q + 1]) << fx.name;
    }
  }
}

// H^q = Hom(H_q, Z) + Ext(H_{q-1}, Z): free ranks agree and the torsion of
// H^q is the torsion of H_{q-1}.
TEST(Complexes, UniversalCoefficients) {
  for (const auto& fx : all_fixtures()) {
    Built b(fx.make());
    for (int p = 0; p <= b.fan.dim(); ++p)
      for (auto [co_v, ho_v] : {std::pair{Variant::kCohomology, Variant::kHomology},
                                std::pair{Variant::kCompactSupport, Variant::kBorelMoore}}) {
        for (Space sp : {Space::kCompactification, Space::kFan}) {
          if (sp == Space::kCompactification && co_v != Variant::kCohomology) continue;
          auto h_up = groups(build_complex(b.sheaf, sp, p, co_v), Coefficients::kZ);
          auto h_down = groups(build_complex(b.sheaf, sp, p, ho_v), Coefficients::kZ);
          ASSERT_EQ(h_up.size(), h_down.size());
          for (std::size_t q = 0; q < h_up.size(); ++q) {
            EXPECT_EQ(h_up[q].free_rank, h_down[q].free_rank) << fx.name << " p" << p << " q" << q;
            std::vector<Integer> prev = q == 0 ? std::vector<Integer>{} : h_down[q - 1].torsion;
            EXPECT_EQ(h_up[q].torsion, prev) << fx.name << " p" << p << " q" << q;
          }
          auto h_q = groups(build_complex(b.sheaf, sp, p, co_v), Coefficients::kQ);
          for (std::size_t q = 0; q < h_up.size(); ++q) {
            EXPECT_EQ(h_q[q].free_rank, h_up[q].free_rank);
            EXPECT_TRUE(h_q[q].torsion.empty());
          }
        }
      }
  }
}

TEST(ClassSection, BoundariesHaveZeroCoordinates) {
  Built b(cube());
  GradedComplex c = build_complex(b.sheaf, Space::kCompactification, 1, Variant::kCohomology);
  ClassSection s(c, 1);
  EXPECT_EQ(s.group().to_string(), "Z^5");
  IntMatrix d0 = c.maps[0];
  for (std::size_t j = 0; j < d0.cols(); ++j) {
    IntVector boundary = d0.col_vector(j);
    ASSERT_TRUE(s.is_cycle(boundary));
    for (const auto& x : s.coordinates(boundary)) EXPECT_EQ(x, 0);
  }
  auto gens = s.free_generators();
  ASSERT_EQ(gens.size(), 5u);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IntVector coords = s.free_coordinates(gens[i]);
    for (std::size_t k = 0; k < coords.size(); ++k) EXPECT_EQ(coords[k], i == k ? 1 : 0);
  }
}

TEST(Cubical, DeltaDegreeOne) {
  Built b(delta());
  GradedComplex c = cubical_complex(b.sheaf, 1, Coefficients::kZ);
  EXPECT_EQ(c.size(0), 2u);
  EXPECT_EQ(c.size(1), 3u);
  EXPECT_EQ(groups(c, Coefficients::kZ)[1].to_string(), "Z");
}

TEST(Cubical, DegreeZeroIsAPoint) {
  Built b(p2());
  auto g = groups(cubical_complex(b.sheaf, 0, Coefficients::kZ), Coefficients::kZ);
  EXPECT_EQ(g[0].to_string(), "Z");
  for (std::size_t q = 1; q < g.size(); ++q) EXPECT_TRUE(g[q].is_trivial());
}

TEST(Cubical, SingleConeHasNoH11) {
  Built b(cone2());
  EXPECT_TRUE(groups(cubical_complex(b.sheaf, 1, Coefficients::kZ), Coefficients::kZ)[1].is_trivial());
}

TEST(Cubical, IntegralModeNeedsUnimodularity) {
  Built b(sigma3());
  EXPECT_THROW(cubical_complex(b.sheaf, 1, Coefficients::kZ), DomainError);
  EXPECT_NO_THROW(cubical_complex(b.sheaf, 1, Coefficients::kQ));
}

TEST(Cubical, AgreesWithCellularCohomology) {
  for (const auto& fx : all_fixtures()) {
    Built b(fx.make());
    const Coefficients coeff = is_unimodular(b.fan).all ? Coefficients::kZ : Coefficients::kQ;
    for (int p = 0; p <= b.fan.dim(); ++p) {
      GradedComplex cub = cubical_complex(b.sheaf, p, coeff);
      EXPECT_NO_THROW(check_complex(cub));
      auto g1 = groups(cub, coeff);
      auto g2 = comp_groups(b.sheaf, p, coeff);
      for (std::size_t q = 0; q < g2.size(); ++q) {
        AbGroup a = q < g1.size() ? g1[q] : AbGroup{};
        EXPECT_EQ(a, g2[q]) << fx.name << " p" << p << " q" << q;
      }
    }
  }
}

TEST(DoubleComplex, SquareDegreeOne) {
  Built b(cone2());
  DoubleComplex dc = fine_double_complex(b.sheaf, 1);
  GradedComplex cell = build_complex(b.sheaf, Space::kCompactification, 1, Variant::kCohomology);
  EXPECT_EQ(dc.total.maps, cell.maps);
}

TEST(DoubleComplex, TotalComplexIsCellularOnAllFixtures) {
  for (const auto& fx : all_fixtures()) {
    Built b(fx.make());
    for (int p = 0; p <= b.fan.dim(); ++p) {
      DoubleComplex dc = fine_double_complex(b.sheaf, p);
      GradedComplex cell = build_complex(b.sheaf, Space::kCompactification, p, Variant::kCohomology);
      EXPECT_EQ(groups(dc.total, Coefficients::kZ), groups(cell, Coefficients::kZ)) << fx.name;
      for (std::size_t k = 0; k < dc.horizontal.size(); ++k)
        EXPECT_EQ(dc.horizontal[k] + dc.vertical[k], cell.maps[k]) << fx.name;
    }
  }
}

// A row of fixed sedentarity tau is the compact-support complex of the star
// fan at tau.
TEST(DoubleComplex, RowsAreCompactSupportComplexesOfStars) {
  for (const auto& fx : all_fixtures()) {
    Built b(fx.make());
    for (int p = 0; p <= b.fan.dim(); ++p) {
      DoubleComplex dc = fine_double_complex(b.sheaf, p);
      for (std::size_t t = 0; t < b.fan.num_cones(); ++t) {
        const ConeId tau = static_cast<ConeId>(t);
        StarFan st = star_fan(b.fan, tau);
        Compactification sc(*st.fan);
        Sheaf ss(sc);
        if (p > st.fan->dim()) continue;
        auto row = groups(dc.row(b.sheaf, tau), Coefficients::kZ);
        auto star = groups(build_complex(ss, Space::kFan, p, Variant::kCompactSupport), Coefficients::kZ);
        EXPECT_EQ(row, star) << fx.name << " tau " << t << " p " << p;
      }
    }
  }
}

RatVector random_values(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-3, 3);
  RatVector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

Cochain random_cochain(const CompCohomology& coh, std::mt19937& rng, int p, int q) {
  Cochain c = coh.zero(p, q);
  c.values = random_values(rng, c.values.size());
  return c;
}

TEST(Cup, UnitIsNeutral) {
  Built b(p2());
  CompCohomology coh(b.sheaf);
  Cochain one = coh.zero(0, 0);
  for (auto& x : one.values) x = 1;
  std::mt19937 rng(1);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      Cochain a = random_cochain(coh, rng, p, q);
      EXPECT_EQ(coh.cup(one, a).values, a.values);
      EXPECT_EQ(coh.cup(a, one).values, a.values);
    }
}

Cochain combine(const Cochain& a, const Cochain& b, int sign) {
  Cochain c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += sign * b.values[i];
  return c;
}

TEST(Cup, LeibnizRule) {
  for (auto make : {p2, delta, cone2, u23, cube}) {
    Built b(make());
    CompCohomology coh(b.sheaf);
    std::mt19937 rng(7);
    const int d = b.fan.dim();
    for (int pa = 0; pa <= d; ++pa)
      for (int pb = 0; pa + pb <= d; ++pb)
        for (int qa = 0; qa <= d; ++qa)
          for (int qb = 0; qa + qb + 1 <= d; ++qb) {
            Cochain a = random_cochain(coh, rng, pa, qa);
            Cochain bb = random_cochain(coh, rng, pb, qb);
            Cochain lhs = coh.differential(coh.cup(a, bb));
            Cochain rhs = combine(coh.cup(coh.differential(a), bb), coh.cup(a, coh.differential(bb)),
                                  qa % 2 == 0 ? 1 : -1);
            EXPECT_EQ(lhs.values, rhs.values) << b.fan.name() << " (" << pa << "," << qa << ") x ("
                                              << pb << "," << qb << ")";
          }
  }
}

TEST(Cup, Associative) {
  Built b(u23());
  CompCohomology coh(b.sheaf);
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain x = random_cochain(coh, rng, 0, 0);
    Cochain y = random_cochain(coh, rng, 1, 0);
    Cochain z = random_cochain(coh, rng, 0, 1);
    EXPECT_EQ(coh.cup(coh.cup(x, y), z).values, coh.cup(x, coh.cup(y, z)).values);
  }
  Built c(cube());
  CompCohomology cc(c.sheaf);
  for (int trial = 0; trial < 5; ++trial) {
    Cochain x = random_cochain(cc, rng, 1, 0);
    Cochain y = random_cochain(cc, rng, 0, 1);
    Cochain z = random_cochain(cc, rng, 1, 1);
    EXPECT_EQ(cc.cup(cc.cup(x, y), z).values, cc.cup(x, cc.cup(y, z)).values);
  }
}

TEST(Cap, FundamentalCycleOfDelta) {
  Built b(delta());
  Weights w = *b.fan.weights();
  IntVector fc = fundamental_cycle(b.sheaf, w);
  GradedComplex bm = build_complex(b.sheaf, Space::kFan, 1, Variant::kBorelMoore);
  for (int r = 0; r < 3; ++r) {
    const FaceId f = b.comp.find_face(0, b.fan.ray_cone(r));
    const int off = bm.offset(1, f);
    ASSERT_GE(off, 0);
    IntVector coords = b.sheaf.integral_coordinates(1, f, b.fan.ray(r));
    for (std::size_t i = 0; i < coords.size(); ++i) EXPECT_EQ(fc[off + i], coords[i]);
  }
  // A cycle: the Borel-Moore boundary vanishes.
  EXPECT_TRUE(bm.out_map(1).rows() == 0 || is_zero_vector(mul(bm.out_map(1), fc)));
}

TEST(Cap, WithTheUnitIsTheFundamentalCycle) {
  for (auto make : {p2, delta, u23, cube}) {
    Built b(make());
    Weights w = fixture_weights(b.fan);
    EXPECT_EQ(cap(b.sheaf, w, 0, RatVector{1}), to_rational(fundamental_cycle(b.sheaf, w)));
  }
}

TEST(Cap, UnbalancedWeightsAreRejected) {
  Built b(cone2());
  EXPECT_THROW(fundamental_cycle(b.sheaf, unit_weights(b.fan)), DomainError);
}

TEST(Cap, P2DegreeOneGivesABorelMooreCycle) {
  Built b(p2());
  Weights w = unit_weights(b.fan);
  RatVector c = cap(b.sheaf, w, 1, RatVector{1, 0});
  GradedComplex bm = build_complex(b.sheaf, Space::kFan, 1, Variant::kBorelMoore);
  ASSERT_EQ(c.size(), bm.size(2));
  RatVector boundary = mul(to_rational(bm.out_map(2)), c);
  for (const auto& x : boundary) EXPECT_EQ(x, 0);
}

}  // namespace
}  // namespace tropfan
