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

#include "fixtures.hpp"
#include "tropfan/sheaf.hpp"

namespace tropfan {
namespace {

using namespace tropfan::testing;

// SF_p(tau, sigma) from its definition: the span of the p-th exterior powers
// of the images in N^tau of N_eta over all cones eta containing sigma.
IntMatrix sf_oracle(const Fan& f, const CompFace& face, int p) {
  const std::size_t m = f.rank() - static_cast<std::size_t>(f.cone_dim(face.tau));
  IntMatrix gens(0, binomial(m, static_cast<std::size_t>(p)));
  for (ConeId eta : f.star(face.sigma)) {
    IntMatrix lat = f.image_lattice(face.tau, eta);
    for (const auto& rows : subsets(lat.rows(), static_cast<std::size_t>(p))) {
      IntMatrix sub(0, m);
      for (int r : rows) sub.append_row(lat.row_vector(r));
      gens.append_row(p == 0 ? IntVector{1} : wedge_rows(sub));
    }
  }
  return hnf(gens);
}

TEST(Sf, DeltaOriginHasIndexThree) {
  Fan f(delta());
  Compactification c(f);
  Sheaf s(c);
  EXPECT_EQ(s.basis(1, c.find_face(0, 0)), (IntMatrix{{1, 0}, {0, 3}}));
}

TEST(Sf, DegreeZeroIsZ) {
  Fan f(p2());
  Compactification c(f);
  Sheaf s(c);
  for (std::size_t i = 0; i < c.num_faces(); ++i)
    EXPECT_EQ(s.basis(0, static_cast<FaceId>(i)), (IntMatrix{{1}}));
}

TEST(Sf, P2TopDegree) {
  Fan f(p2());
  Compactification c(f);
  Sheaf s(c);
  EXPECT_EQ(s.basis(2, c.find_face(0, 0)), (IntMatrix{{1}}));
}

TEST(Sf, MatchesDefinitionOnAllFixtures) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    Compactification c(f);
    Sheaf s(c);
    for (std::size_t i = 0; i < c.num_faces(); ++i) {
      const CompFace& face = c.face(static_cast<FaceId>(i));
      for (int p = 0; p <= f.dim(); ++p) {
        IntMatrix b = s.basis(p, static_cast<FaceId>(i));
        IntMatrix o = sf_oracle(f, face, p);
        EXPECT_EQ(b.rows(), o.rows()) << fx.name;
        if (o.rows() > 0) { EXPECT_EQ(b, o) << fx.name << " face " << i << " p " << p; }
      }
    }
  }
}

TEST(Restriction, SquareProjectionKillsFirstVector) {
  Fan f(cone2());
  Compactification c(f);
  Sheaf s(c);
  const ConeId rho = f.ray_cone(0);
  const ConeId sigma = f.find_cone({0, 1});
  const IntMatrix& r = s.restriction(1, c.find_face(rho, sigma), c.find_face(0, sigma));
  ASSERT_EQ(r.rows(), 2u);
  ASSERT_EQ(r.cols(), 1u);
  EXPECT_EQ(r(0, 0), 0);
  EXPECT_EQ(abs(r(1, 0)), 1);
}

TEST(Restriction, ToAPointIsZero) {
  Fan f(delta());
  Compactification c(f);
  Sheaf s(c);
  const ConeId rho = f.ray_cone(0);
  const IntMatrix& r = s.restriction(1, c.find_face(rho, rho), c.find_face(0, rho));
  EXPECT_EQ(r.rows(), s.rank(1, c.find_face(0, rho)));
  EXPECT_EQ(r.cols(), 0u);
}

TEST(Restriction, SameSedentarityIsInclusion) {
  Fan f(p2());
  Compactification c(f);
  Sheaf s(c);
  for (int p = 0; p <= 2; ++p) {
    const FaceId ray = c.find_face(0, f.ray_cone(0));
    const FaceId origin = c.find_face(0, 0);
    EXPECT_EQ(s.restriction(p, origin, ray) * s.basis(p, origin), s.basis(p, ray));
  }
}

TEST(Restriction, IsTransitive) {
  for (const auto& fx : all_fixtures()) {
    Fan f(fx.make());
    Compactification c(f);
    Sheaf s(c);
    for (std::size_t e = 0; e < c.num_faces(); ++e)
      for (const Cover& d : c.covers(static_cast<FaceId>(e)))
        for (const Cover& g : c.covers(d.gamma))
          for (int p = 0; p <= f.dim(); ++p) {
            const IntMatrix direct = s.restriction(p, g.gamma, static_cast<FaceId>(e));
            const IntMatrix composed = s.restriction(p, d.gamma, static_cast<FaceId>(e)) *
                                       s.restriction(p, g.gamma, d.gamma);
            EXPECT_EQ(direct, composed) << fx.name;
          }
  }
}

TEST(Contract, Examples) {
  Fan f(p2());
  Compactification c(f);
  Sheaf s(c);
  const FaceId o = c.find_face(0, 0);
  RatVector alpha{3, -2};
  EXPECT_EQ(s.contract(1, o, alpha, 0, RatVector{1}), alpha);
  // p = k gives the scalar alpha(nu).
  EXPECT_EQ(s.contract(1, o, alpha, 1, RatVector{1, 1}), (RatVector{1}));
  // Dual of e1 ^ e2 contracted by e1 is the functional e2*.
  EXPECT_EQ(s.contract(2, o, RatVector{1}, 1, RatVector{1, 0}), (RatVector{0, 1}));
}

TEST(Forms, ExtendThenRestrictIsIdentity) {
  Fan f(delta());
  Compactification c(f);
  Sheaf s(c);
  const FaceId o = c.find_face(0, 0);
  RatVector alpha{1, Rational(2, 3)};
  EXPECT_EQ(s.restrict_form(1, o, s.extend_form(1, o, alpha)), alpha);
}

}  // namespace
}  // namespace tropfan
