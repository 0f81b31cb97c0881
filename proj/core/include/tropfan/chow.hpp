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

// Chow groups of simplicial fans through the localization presentation,
// products by ray reduction, Minkowski weights, the cycle class map and the
// maps psi : H^{p,p}(compactification) -> A^p and its inverse.

#include <vector>

#include "tropfan/homology.hpp"

namespace tropfan {

// Generators x_sigma for sigma of dimension k. Over Q, x_sigma is the class
// mult(sigma) times the product of the ray classes of sigma.
struct ChowPresentation {
  int degree = 0;
  Coefficients coeff = Coefficients::kZ;
  std::vector<ConeId> generators;
  IntMatrix relations;  // rows indexed by (tau, j), columns by generators
  AbGroup group;
  Cokernel section;

  int index_of(ConeId sigma) const;  // -1 when not a generator
};

// Z coefficients require a unimodular fan in degrees >= 2.
ChowPresentation chow_group(const Fan& fan, int k, Coefficients coeff);

struct ChowClass {
  int degree = 0;
  RatVector coeffs;  // over the generators of that degree
};

ChowClass chow_zero(const Fan& fan, int k);
ChowClass chow_generator(const Fan& fan, ConeId sigma);
ChowClass operator+(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a, const ChowClass& b);
ChowClass operator*(const Rational& c, const ChowClass& a);

// Normal form: Z torsion-then-free coordinates of an integral class, or free
// coordinates over Q.
RatVector chow_canonical(const ChowPresentation& pres, const ChowClass& c);
bool chow_equal(const ChowPresentation& pres, const ChowClass& a, const ChowClass& b);

ChowClass chow_multiply(const Fan& fan, const ChowClass& a, const ChowClass& b,
                        Coefficients coeff);

// Sum of xi_sigma omega(sigma) over facets; DomainError for unbalanced omega.
Rational degree_map(const Fan& fan, const Weights& omega, const ChowClass& xi);

// Rows (tau, j) x columns sigma: coordinate j of e^tau_sigma.
IntMatrix balancing_matrix(const Fan& fan, int p);
// Basis rows of MW_p, entries over cones_of_dim(p).
IntMatrix minkowski_weights(const Fan& fan, int p);
Rational chow_mw_pairing(const Fan& fan, const ChowClass& xi, const IntVector& w);

struct CycleClass {
  IntVector chain;        // in the homology complex of the compactification
  IntVector coordinates;  // torsion then free
  AbGroup group;
};
// DomainError when w is not balanced.
CycleClass cycle_class(const Sheaf& sheaf, int p, const IntVector& w);

// a -> sum over p-cones of a_sigma(nu_sigma) / mult(sigma) x_sigma.
ChowClass psi(const CompCohomology& coh, const Cochain& a);
Cochain psi_inverse(const CompCohomology& coh, ConeId sigma, Coefficients coeff);

}  // namespace tropfan
