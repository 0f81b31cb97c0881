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

// Rational simplicial fans: cones as sorted ray-index sets, per-cone lattice
// data, star fans, unit normals and the orientation conventions used by the
// compactification.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropfan/exterior.hpp"
#include "tropfan/zlinalg.hpp"

namespace tropfan {

using ConeId = int;
using Weights = std::vector<Integer>;  // aligned with Fan::facets()

// Raw fan description as read from input, before validation.
struct FanData {
  std::string name;
  std::size_t rank = 0;
  std::vector<IntVector> rays;
  std::vector<Subset> maximal_cones;
  std::optional<Weights> weights;       // aligned with maximal_cones
  std::optional<RatVector> ray_values;  // conewise linear function
};

enum class ValidationLevel { kCombinatorial, kGeometric };

struct Diagnostics {
  std::vector<std::string> issues;
  bool primitive = true;
  bool simplicial = true;
  bool well_indexed = true;
  bool distinct_rays = true;
  bool geometric_checked = false;
  bool geometric_ok = true;

  bool ok() const { return issues.empty(); }
};

// Throws InputError for malformed shapes; other problems are reported.
Diagnostics validate(const FanData& data, ValidationLevel level);

// Re-expresses the rays in an HNF basis of the lattice they generate.
FanData rebase_to_ray_span(const FanData& data);

struct ConeGeometry {
  Subset rays;
  IntMatrix ray_matrix;   // |rays| x n
  IntMatrix basis;        // oriented basis of N_sigma, |rays| x n
  Integer multiplicity;   // [N_sigma : span of rays]
  IntMatrix projection;   // n x (n - k): x -> x * projection is N -> N^sigma
  IntMatrix lift;         // (n - k) x n, lift * projection = I
};

class Fan {
 public:
  // Validates combinatorially; throws InputError on any issue.
  explicit Fan(const FanData& data);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_rays() const { return rays_.size(); }
  const IntVector& ray(int r) const { return rays_[r]; }
  int dim() const { return dim_; }
  bool is_pure() const;

  // Cones sorted by (dimension, lexicographic ray set); cone 0 is the origin.
  std::size_t num_cones() const { return cones_.size(); }
  const Subset& cone(ConeId c) const { return cones_[c]; }
  int cone_dim(ConeId c) const { return static_cast<int>(cones_[c].size()); }
  ConeId find_cone(const Subset& rays) const;  // -1 when absent
  ConeId ray_cone(int r) const { return ray_cone_[r]; }
  const std::vector<ConeId>& cones_of_dim(int k) const;
  const std::vector<ConeId>& facets() const { return facets_; }  // maximal cones
  bool is_maximal(ConeId c) const { return is_maximal_[c]; }
  int facet_position(ConeId c) const;  // index into facets(), -1 if not maximal

  // Codimension-one faces and cofaces.
  const std::vector<ConeId>& faces_codim1(ConeId c) const { return down_[c]; }
  const std::vector<ConeId>& cofaces_codim1(ConeId c) const { return up_[c]; }
  // All cones containing c (including c).
  const std::vector<ConeId>& star(ConeId c) const { return star_[c]; }
  bool contains(ConeId big, ConeId small) const;
  // Smallest cone containing both, -1 when none.
  ConeId join(ConeId a, ConeId b) const;
  // Cone spanned by the rays of big not in small (always a face of big).
  ConeId complement(ConeId big, ConeId small) const;

  const ConeGeometry& geometry(ConeId c) const { return geometry_[c]; }
  // Matrix of N^small -> N^big for small <= big, in star bases.
  IntMatrix quotient_map(ConeId small, ConeId big) const;

  // Primitive generator of the image of N_big in N^small for small a facet
  // of big (the unit normal class).
  IntVector unit_normal(ConeId small, ConeId big) const;
  // A vector of N_big mapping to unit_normal(small, big).
  IntVector unit_normal_lift(ConeId small, ConeId big) const;

  // Basis (rows, in star coordinates of N^small) of the image of N_big.
  IntMatrix image_lattice(ConeId small, ConeId big) const;

  // nu^small_big = image of nu_{big \ small} in N^small, as a multivector in
  // the wedge-monomial basis.
  IntVector orientation(ConeId small, ConeId big) const;

  const FanData& data() const { return data_; }
  // Input weights re-indexed to facets(), when present.
  std::optional<Weights> weights() const;

 private:
  void build_geometry();

  FanData data_;
  std::string name_;
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Subset> cones_;
  std::map<Subset, ConeId> index_;
  std::vector<ConeId> ray_cone_;
  std::vector<std::vector<ConeId>> by_dim_;
  std::vector<ConeId> facets_;
  std::vector<bool> is_maximal_;
  std::vector<std::vector<ConeId>> down_, up_, star_;
  std::vector<ConeGeometry> geometry_;
  int dim_ = 0;
};

struct UnimodularityReport {
  std::vector<bool> per_cone;
  bool all = true;
};

UnimodularityReport is_unimodular(const Fan& fan);
bool is_saturated_at(const Fan& fan, ConeId c);
bool is_saturated(const Fan& fan);

// Throws DomainError for a non-pure fan.
bool is_balanced(const Fan& fan, const Weights& w);
Weights unit_weights(const Fan& fan);

struct StarFan {
  std::unique_ptr<Fan> fan;
  ConeId center = 0;
  IntMatrix projection;           // N -> N^center
  std::vector<ConeId> ray_source;  // star ray -> cone of the original fan
  std::vector<Integer> ray_multiplicity;
  std::vector<ConeId> cone_source;  // star cone -> cone of the original fan
  std::optional<Weights> weights;   // induced weights when given
};

StarFan star_fan(const Fan& fan, ConeId c,
                 const std::optional<Weights>& weights = std::nullopt);

// Conewise linear function given by its values on the rays.
using ConewiseLinear = RatVector;

}  // namespace tropfan
