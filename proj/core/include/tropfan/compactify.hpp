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

// Face poset of the canonical compactification: faces are pairs (tau, sigma)
// of cones with tau <= sigma, of dimension |sigma| - |tau| and sedentarity
// tau. Geometry is carried in the star-fan coordinates of N^tau.

#include <vector>

#include "tropfan/fan.hpp"

namespace tropfan {

using FaceId = int;

struct CompFace {
  ConeId tau = 0;
  ConeId sigma = 0;
  int dim = 0;
};

enum class CoverKind { kSameSedentarity, kSedentarityDrop };

// gamma covered by the face that owns this record.
struct Cover {
  FaceId gamma = 0;
  int sign = 0;
  CoverKind kind = CoverKind::kSameSedentarity;
  int ray = 0;  // ray removed from sigma, or added to tau
};

class Compactification {
 public:
  explicit Compactification(const Fan& fan);

  const Fan& fan() const { return *fan_; }
  std::size_t num_faces() const { return faces_.size(); }
  const CompFace& face(FaceId f) const { return faces_[f]; }
  FaceId find_face(ConeId tau, ConeId sigma) const;  // -1 when not a face
  int dim() const { return fan_->dim(); }
  const std::vector<FaceId>& faces_of_dim(int q) const;

  // Faces gamma with gamma covered by delta, ordered by face id.
  const std::vector<Cover>& covers(FaceId delta) const { return covers_[delta]; }
  // Faces delta covering gamma.
  const std::vector<FaceId>& cofaces(FaceId gamma) const { return cofaces_[gamma]; }
  // Throws InputError when gamma is not covered by delta.
  int face_sign(FaceId gamma, FaceId delta) const;
  bool is_face_of(FaceId gamma, FaceId delta) const;

  // Basis of the tangent lattice of a face in the star coordinates of N^tau.
  IntMatrix tangent_lattice(FaceId f) const;

 private:
  int compute_sign(const CompFace& gamma, const CompFace& delta, CoverKind kind) const;

  const Fan* fan_;
  std::vector<CompFace> faces_;
  std::vector<std::vector<FaceId>> by_dim_;
  std::vector<std::vector<FaceId>> index_;  // [tau][sigma] -> face
  std::vector<std::vector<Cover>> covers_;
  std::vector<std::vector<FaceId>> cofaces_;
};

// Sign of w / v for two top multivectors of the same rational subspace.
int wedge_ratio_sign(const IntVector& w, const IntVector& v);
Rational wedge_ratio(const IntVector& w, const IntVector& v);

}  // namespace tropfan
