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

#include <algorithm>

#include "fixtures.hpp"
#include "tropfan/fan.hpp"

namespace tropfan {
namespace {

using namespace tropfan::testing;

TEST(Validate, P2PassesAllChecks) {
  Diagnostics d = validate(p2(), ValidationLevel::kGeometric);
  EXPECT_TRUE(d.ok());
  EXPECT_TRUE(d.geometric_checked);
  EXPECT_TRUE(d.geometric_ok);
}

TEST(Validate, NonPrimitiveRay) {
  FanData d = p2();
  d.rays[0] = {2, 0};
  Diagnostics r = validate(d, ValidationLevel::kCombinatorial);
  EXPECT_FALSE(r.primitive);
  EXPECT_FALSE(r.ok());
  EXPECT_THROW(Fan{d}, InputError);
}

TEST(Validate, OverlappingCones) {
  FanData d;
  d.rank = 2;
  d.rays = {{1, 0}, {1, 2}, {1, 1}, {0, 1}};
  d.maximal_cones = {{0, 1}, {2, 3}};
  Diagnostics r = validate(d, ValidationLevel::kGeometric);
  EXPECT_FALSE(r.geometric_ok);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(validate(d, ValidationLevel::kCombinatorial).ok());
}

TEST(Validate, MalformedShapesThrow) {
  FanData d = p2();
  d.rays[1] = {0, 1, 0};
  EXPECT_THROW(validate(d, ValidationLevel::kCombinatorial), InputError);
}

TEST(Fan, ConeOrderingAndFaces) {
  Fan f(p2());
  ASSERT_EQ(f.num_cones(), 7u);
  EXPECT_TRUE(f.cone(0).empty());
  EXPECT_EQ(f.cones_of_dim(1).size(), 3u);
  EXPECT_EQ(f.cones_of_dim(2).size(), 3u);
  for (int k = 1; k <= 2; ++k)
    for (ConeId c : f.cones_of_dim(k))
      for (ConeId t : f.faces_codim1(c)) {
        EXPECT_EQ(f.cone_dim(t), k - 1);
        EXPECT_TRUE(f.contains(c, t));
      }
  EXPECT_EQ(f.join(f.ray_cone(0), f.ray_cone(1)), f.find_cone({0, 1}));
  EXPECT_EQ(f.complement(f.find_cone({0, 1}), f.ray_cone(0)), f.ray_cone(1));
  Fan d(delta());
  EXPECT_EQ(d.join(d.ray_cone(0), d.ray_cone(1)), -1);
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(is_unimodular(Fan(p2())).all);
  EXPECT_TRUE(is_unimodular(Fan(delta())).all);
  Fan s(sigma3());
  UnimodularityReport r = is_unimodular(s);
  EXPECT_FALSE(r.all);
  ConeId bad = s.find_cone({0, 1});
  EXPECT_FALSE(r.per_cone[bad]);
  EXPECT_EQ(s.geometry(bad).multiplicity, 3);
  for (const auto& fx : all_fixtures())
    if (fx.name != "SIGMA3") { EXPECT_TRUE(is_unimodular(Fan(fx.make())).all) << fx.name; }
}

TEST(Saturated, Examples) {
  EXPECT_FALSE(is_saturated_at(Fan(delta()), 0));
  EXPECT_TRUE(is_saturated_at(Fan(p2()), 0));
  Fan c(cube());
  for (std::size_t k = 0; k < c.num_cones(); ++k) EXPECT_TRUE(is_saturated_at(c, static_cast<ConeId>(k)));
  EXPECT_TRUE(is_saturated(c));
}

TEST(StarFan, P2AtARay) {
  Fan f(p2());
  StarFan s = star_fan(f, f.ray_cone(0));
  ASSERT_EQ(s.fan->rank(), 1u);
  ASSERT_EQ(s.fan->num_rays(), 2u);
  std::vector<Integer> coords{s.fan->ray(0)[0], s.fan->ray(1)[0]};
  std::sort(coords.begin(), coords.end());
  EXPECT_EQ(coords, (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(s.fan->facets().size(), 2u);
}

TEST(StarFan, AtTheOriginIsTheFan) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    StarFan s = star_fan(f, 0);
    EXPECT_EQ(s.fan->num_cones(), f.num_cones()) << fx.name;
    EXPECT_EQ(s.fan->rank(), f.rank()) << fx.name;
    for (std::size_t r = 0; r < f.num_rays(); ++r) EXPECT_EQ(s.ray_multiplicity[r], 1) << fx.name;
  }
}

TEST(StarFan, FullConeGivesTrivialFan) {
  Fan f(cone2());
  StarFan s = star_fan(f, f.find_cone({0, 1}));
  EXPECT_EQ(s.fan->rank(), 0u);
  EXPECT_EQ(s.fan->num_cones(), 1u);
}

TEST(Balanced, Examples) {
  Fan d(delta());
  EXPECT_TRUE(is_balanced(d, *d.weights()));
  EXPECT_FALSE(is_balanced(d, Weights{1, 1, 2}));
  Fan c(cube());
  EXPECT_TRUE(is_balanced(c, unit_weights(c)));
  Fan k(k4());
  EXPECT_TRUE(is_balanced(k, unit_weights(k)));
  Fan c2(cone2());
  EXPECT_FALSE(is_balanced(c2, unit_weights(c2)));
}

TEST(UnitNormal, Examples) {
  Fan f(p2());
  EXPECT_EQ(f.unit_normal(0, f.ray_cone(0)), (IntVector{1, 0}));

  Fan c(cone2());
  ConeId rho = c.ray_cone(0);
  ConeId sigma = c.find_cone({0, 1});
  IntVector n = c.unit_normal(rho, sigma);
  ASSERT_EQ(n.size(), 1u);
  // The class of e2 in N^rho; the other ray points into the cone.
  IntVector e2_image = mul(IntVector{0, 1}, c.geometry(rho).projection);
  EXPECT_EQ(n, e2_image);

  Fan s(sigma3());
  ConeId r0 = s.ray_cone(0);
  ConeId big = s.find_cone({0, 1});
  IntVector u = s.unit_normal(r0, big);
  IntVector lift = s.unit_normal_lift(r0, big);
  EXPECT_EQ(mul(lift, s.geometry(r0).projection), u);
  EXPECT_EQ(lift[1], -1);
  IntVector other = mul(IntVector{1, -3}, s.geometry(r0).projection);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(other[0], 3 * u[0]);
}

TEST(UnitNormal, LiftsAndPrimitivityOnAllFixtures) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    for (std::size_t c = 1; c < f.num_cones(); ++c)
      for (ConeId t : f.faces_codim1(static_cast<ConeId>(c))) {
        IntVector u = f.unit_normal(t, static_cast<ConeId>(c));
        EXPECT_EQ(content(u), 1) << fx.name;
        EXPECT_EQ(mul(f.unit_normal_lift(t, static_cast<ConeId>(c)), f.geometry(t).projection), u)
            << fx.name;
      }
  }
}

TEST(Geometry, ProjectionAndLiftAreInverse) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    for (std::size_t c = 0; c < f.num_cones(); ++c) {
      const ConeGeometry& g = f.geometry(static_cast<ConeId>(c));
      EXPECT_EQ(g.lift * g.projection, IntMatrix::identity(f.rank() - g.rays.size())) << fx.name;
      EXPECT_TRUE((g.ray_matrix * g.projection).is_zero()) << fx.name;
    }
  }
}

TEST(Rebase, CubeRaysSpanTheirLattice) {
  FanData d = cube();
  IntMatrix rays = IntMatrix::from_rows(d.rays, d.rank);
  EXPECT_EQ(saturate(Sublattice::from_generators(rays)).index, 1);
  EXPECT_EQ(Sublattice::from_generators(rays), Sublattice::full(3));
}

}  // namespace
}  // namespace tropfan
