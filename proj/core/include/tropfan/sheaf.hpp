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

#pragma once

// Coefficient lattices SF_p(delta) inside the p-th exterior power of N^tau,
// their duals SF^p(delta) (stored as values on the SF_p basis), restriction
// maps along faces and contractions.

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "tropfan/compactify.hpp"

namespace tropfan {

class Sheaf {
 public:
  explicit Sheaf(const Compactification& comp);

  const Compactification& comp() const { return *comp_; }
  const Fan& fan() const { return comp_->fan(); }

  // Ambient rank of N^tau for the face.
  std::size_t ambient(FaceId f) const;
  // HNF basis rows of SF_p(f) in the wedge-monomial basis of the p-th
  // exterior power of N^tau. Zero rows for p out of range.
  const IntMatrix& basis(int p, FaceId f) const;
  std::size_t rank(int p, FaceId f) const { return basis(p, f).rows(); }

  // Matrix R of size rank(p, delta) x rank(p, gamma): row j holds the
  // coordinates of the image of the j-th basis vector of SF_p(delta) in
  // SF_p(gamma). Pulls back dual elements as alpha_delta = R alpha_gamma.
  const IntMatrix& restriction(int p, FaceId gamma, FaceId delta) const;

  // Coordinates in the SF_p(f) basis of a multivector (nullopt if outside
  // the rational span).
  std::optional<RatVector> coordinates(int p, FaceId f, const RatVector& w) const;
  // Integral coordinates; throws InternalError when w is not in SF_p(f).
  IntVector integral_coordinates(int p, FaceId f, const IntVector& w) const;

  // A functional on the full exterior power agreeing with alpha on SF_p(f).
  RatVector extend_form(int p, FaceId f, const RatVector& alpha) const;
  // Values on the SF_p(f) basis of a functional given in monomial coordinates.
  RatVector restrict_form(int p, FaceId f, const RatVector& form) const;

  // Contraction of alpha in SF^p(f) by nu (monomial coordinates, degree k):
  // the element u -> alpha(nu ^ u) of SF^{p-k}(f).
  RatVector contract(int p, FaceId f, const RatVector& alpha, int k,
                     const RatVector& nu) const;

 private:
  const RatMatrix& extension(int p, FaceId f) const;

  const Compactification* comp_;
  std::vector<std::vector<IntMatrix>> bases_;  // [face][p]
  mutable std::mutex mu_;
  mutable std::map<std::tuple<int, FaceId, FaceId>, IntMatrix> restriction_cache_;
  mutable std::map<std::pair<int, FaceId>, RatMatrix> extension_cache_;
};

}  // namespace tropfan
