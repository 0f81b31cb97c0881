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
#include <map>
#include <tuple>

#include "fixtures.hpp"
#include "tropfan/compactify.hpp"

namespace tropfan {
namespace {

using namespace tropfan::testing;

TEST(Faces, CountIsSumOverConesOfPowersOfTwo) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    Compactification c(f);
    std::size_t expected = 0;
    for (std::size_t k = 0; k < f.num_cones(); ++k) expected += std::size_t{1} << f.cone_dim(static_cast<ConeId>(k));
    EXPECT_EQ(c.num_faces(), expected) << fx.name;
    std::size_t by_dim = 0;
    for (int q = 0; q <= c.dim(); ++q) by_dim += c.faces_of_dim(q).size();
    EXPECT_EQ(by_dim, expected) << fx.name;
  }
}

TEST(Faces, SquareAndTriangleCounts) {
  Fan f(cone2());
  Compactification c(f);
  EXPECT_EQ(c.num_faces(), 9u);
  EXPECT_EQ(c.faces_of_dim(0).size(), 4u);
  EXPECT_EQ(c.faces_of_dim(1).size(), 4u);
  EXPECT_EQ(c.faces_of_dim(2).size(), 1u);

  Fan d(delta());
  Compactification cd(d);
  EXPECT_EQ(cd.num_faces(), 7u);
  EXPECT_EQ(cd.faces_of_dim(0).size(), 4u);
  EXPECT_EQ(cd.faces_of_dim(1).size(), 3u);
}

TEST(Faces, OrderedByDimensionThenTauThenSigma) {
  Fan f(p2());
  Compactification c(f);
  for (std::size_t i = 1; i < c.num_faces(); ++i) {
    const CompFace& a = c.face(static_cast<FaceId>(i - 1));
    const CompFace& b = c.face(static_cast<FaceId>(i));
    EXPECT_TRUE(std::tie(a.dim, a.tau, a.sigma) < std::tie(b.dim, b.tau, b.sigma));
  }
}

TEST(FaceSign, SquareExamples) {
  Fan f(cone2());
  Compactification c(f);
  const ConeId rho = f.ray_cone(0);
  const FaceId vertex = c.find_face(0, 0);
  const FaceId edge = c.find_face(0, rho);
  const FaceId inf = c.find_face(rho, rho);
  EXPECT_EQ(c.face_sign(vertex, edge), 1);
  EXPECT_EQ(c.face_sign(inf, edge), -1);
  EXPECT_THROW(c.face_sign(edge, vertex), InputError);
}

// Every interval of length two in the face poset of a cubical complex is a
// diamond, and the signs must anticommute around it.
TEST(FaceSign, BoundarySquaresToZeroOnAllFixtures) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    Compactification c(f);
    for (std::size_t e = 0; e < c.num_faces(); ++e) {
      const FaceId eta = static_cast<FaceId>(e);
      std::map<FaceId, int> sum;
      std::map<FaceId, int> paths;
      for (const Cover& d : c.covers(eta)) {
        EXPECT_EQ(d.sign * d.sign, 1);
        for (const Cover& g : c.covers(d.gamma)) {
          sum[g.gamma] += d.sign * g.sign;
          paths[g.gamma] += 1;
        }
      }
      for (const auto& [g, s] : sum) {
        EXPECT_EQ(s, 0) << fx.name << " faces " << g << " < " << eta;
        EXPECT_EQ(paths[g], 2) << fx.name;
      }
    }
  }
}

TEST(FaceSign, CoversAndCofacesAgree) {
  Fan f(cube());
  Compactification c(f);
  for (std::size_t e = 0; e < c.num_faces(); ++e)
    for (const Cover& d : c.covers(static_cast<FaceId>(e))) {
      const auto& up = c.cofaces(d.gamma);
      EXPECT_NE(std::find(up.begin(), up.end(), static_cast<FaceId>(e)), up.end());
      EXPECT_EQ(c.face(d.gamma).dim + 1, c.face(static_cast<FaceId>(e)).dim);
      EXPECT_TRUE(c.is_face_of(d.gamma, static_cast<FaceId>(e)));
    }
}

TEST(TangentLattice, Examples) {
  Fan f(cone2());
  Compactification c(f);
  const ConeId rho = f.ray_cone(0);
  const ConeId sigma = f.find_cone({0, 1});
  EXPECT_EQ(c.tangent_lattice(c.find_face(0, sigma)).rows(), 2u);
  EXPECT_EQ(c.tangent_lattice(c.find_face(sigma, sigma)).rows(), 0u);
  IntMatrix t = c.tangent_lattice(c.find_face(rho, sigma));
  ASSERT_EQ(t.rows(), 1u);
  IntVector e2 = mul(IntVector{0, 1}, f.geometry(rho).projection);
  EXPECT_TRUE(t.row_vector(0) == e2 || t.row_vector(0) == IntVector{-e2[0]});
}

TEST(TangentLattice, RankIsFaceDimension) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    Compactification c(f);
    for (std::size_t i = 0; i < c.num_faces(); ++i)
      EXPECT_EQ(static_cast<int>(c.tangent_lattice(static_cast<FaceId>(i)).rows()),
                c.face(static_cast<FaceId>(i)).dim)
          << fx.name;
  }
}

TEST(WedgeRatio, Basics) {
  EXPECT_EQ(wedge_ratio(IntVector{2, 4}, IntVector{1, 2}), 2);
  EXPECT_EQ(wedge_ratio_sign(IntVector{-3, 0}, IntVector{1, 0}), -1);
}

}  // namespace
}  // namespace tropfan
