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

// Tropical (co)chain complexes of a fan and of its canonical
// compactification, the cubical complex, the fine double complex, cup and
// cap products, and extraction of (co)homology groups.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tropfan/sheaf.hpp"

namespace tropfan {

enum class Space { kFan, kCompactification };
enum class Variant { kCohomology, kHomology, kBorelMoore, kCompactSupport };
enum class Coefficients { kZ, kQ };

struct BasisLabel {
  FaceId face = 0;  // or a cone id for the cubical complex
  int index = 0;
};

struct GradedComplex {
  bool cohomological = true;
  int p = 0;
  std::vector<std::vector<BasisLabel>> labels;  // per degree
  // Cohomological: maps[q] : C^q -> C^{q+1}. Homological: maps[q] : C_q -> C_{q-1}.
  std::vector<IntMatrix> maps;

  int degrees() const { return static_cast<int>(labels.size()); }
  std::size_t size(int q) const;
  // Map leaving degree q and map arriving in degree q (possibly empty).
  IntMatrix out_map(int q) const;
  IntMatrix in_map(int q) const;
  // Offset of a face block within degree q, -1 when absent.
  int offset(int q, FaceId face) const;
};

GradedComplex build_complex(const Sheaf& sheaf, Space space, int p, Variant variant);

// Throws InternalError when some composite of consecutive maps is nonzero.
void check_complex(const GradedComplex& c);

std::vector<AbGroup> groups(const GradedComplex& c, Coefficients coeff);

// Homology of a complex in one degree with class coordinates.
class ClassSection {
 public:
  ClassSection(const GradedComplex& c, int q);

  const AbGroup& group() const { return coker_.group(); }
  bool is_cycle(const IntVector& v) const;
  // Torsion coordinates first (reduced), then free coordinates.
  IntVector coordinates(const IntVector& cycle) const;
  IntVector free_coordinates(const IntVector& cycle) const;
  // Free coordinates of a rational cycle (classes over Q).
  RatVector free_coordinates(const RatVector& cycle) const;
  std::vector<IntVector> free_generators() const;
  std::vector<IntVector> torsion_generators() const;

 private:
  std::size_t ambient_ = 0;
  IntMatrix out_;
  IntMatrix kernel_;  // HNF rows
  Cokernel coker_;
};

// Cohomological complex with degree-q module the sum over q-cones sigma of
// SF^{p-q}(infinity_sigma).
GradedComplex cubical_complex(const Sheaf& sheaf, int p, Coefficients coeff);

// Fine double complex: cell (a, b) holds the faces (tau, sigma) with
// |sigma| = a and |tau| = -b.
struct DoubleComplex {
  int p = 0;
  int dim = 0;
  std::map<std::pair<int, int>, std::vector<FaceId>> cells;
  // Horizontal (same sedentarity) and vertical (sedentarity drop) pieces as
  // maps between total degrees, laid out like the cellular complex.
  std::vector<IntMatrix> horizontal;
  std::vector<IntMatrix> vertical;
  GradedComplex total;

  // Row of fixed sedentarity tau, as a cohomological complex indexed by
  // |sigma| - |tau|.
  GradedComplex row(const Sheaf& sheaf, ConeId tau) const;
};

// Builds the double complex from star-fan data and combinatorial signs and
// asserts that its total complex equals the cellular cochain complex.
DoubleComplex fine_double_complex(const Sheaf& sheaf, int p);

// Element of C^{p,q}(compactification), coordinates in build_complex order.
struct Cochain {
  int p = 0;
  int q = 0;
  RatVector values;
};

// Cellular cochain complexes of the compactification for every p.
class CompCohomology {
 public:
  explicit CompCohomology(const Sheaf& sheaf);

  const Sheaf& sheaf() const { return *sheaf_; }
  int max_p() const { return static_cast<int>(complexes_.size()) - 1; }
  const GradedComplex& complex(int p) const;
  const ClassSection& section(int p, int q) const;

  Cochain zero(int p, int q) const;
  RatVector component(const Cochain& a, FaceId f) const;
  void set_component(Cochain& a, FaceId f, const RatVector& v) const;
  Cochain differential(const Cochain& a) const;
  Cochain cup(const Cochain& a, const Cochain& b) const;
  // Cup coefficient for tau <= sigma <= eta.
  Rational cup_coefficient(ConeId tau, ConeId sigma, ConeId eta) const;

 private:
  const Sheaf* sheaf_;
  std::vector<GradedComplex> complexes_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ClassSection>> sections_;
};

// Borel-Moore chain on the fan: coefficient w(eta) nu_eta on each facet.
// Throws DomainError when the weights are not balanced.
IntVector fundamental_cycle(const Sheaf& sheaf, const Weights& w);
// Cap product of alpha in SF^k(origin) with the fundamental cycle, an element
// of C^BM_{d-k,d}(fan).
RatVector cap(const Sheaf& sheaf, const Weights& w, int k, const RatVector& alpha);

}  // namespace tropfan
