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

// Verifiers for the structural theorems: the Chow/cohomology comparison,
// Poincare duality, the homology-manifold criterion, the explicit duality
// map and the two ampleness tests.

#include <string>
#include <vector>

#include "tropfan/chow.hpp"
#include "tropfan/lp.hpp"

namespace tropfan {

enum class Verdict { kTrue, kFalse, kNotApplicable };
std::string to_string(Verdict v);

// Map A^p -> H^{p,p} induced by psi_inverse on generators.
struct MapAnalysis {
  Coefficients coeff = Coefficients::kZ;
  bool well_defined = false;
  AbGroup kernel;
  AbGroup cokernel;

  bool surjective() const { return cokernel.free_rank == 0 && cokernel.torsion.empty(); }
  bool injective() const { return kernel.free_rank == 0 && kernel.torsion.empty(); }
};
MapAnalysis psi_inverse_map(const CompCohomology& coh, int p, Coefficients coeff);

struct Theorem1Report {
  bool unimodular = false;
  bool saturated = false;
  std::vector<std::vector<AbGroup>> cohomology;  // [p][q] over Z
  std::vector<AbGroup> chow;                     // over Z when defined, else Q
  std::vector<Coefficients> chow_coeff;
  std::vector<std::optional<MapAnalysis>> psi_z;
  std::vector<MapAnalysis> psi_q;
  std::vector<std::string> psi_status;
  std::vector<std::pair<int, int>> vanishing_failures;
  int ring_checks = 0;
  int ring_failures = 0;
  int round_trip_checks = 0;
  int round_trip_failures = 0;

  bool vanishing() const { return vanishing_failures.empty(); }
};
Theorem1Report theorem1_report(const Fan& fan);

struct PdReport {
  Verdict verdict = Verdict::kNotApplicable;
  std::string reason;
  std::vector<AbGroup> chow;
  std::vector<Integer> gram_determinants;  // per k, absolute values
};
// Over Q torsion is ignored and Gram matrices need only be nonsingular.
PdReport chow_pd_check(const Fan& fan, const Weights& omega,
                       Coefficients coeff = Coefficients::kZ);

struct FaceManifoldReport {
  ConeId cone = 0;
  Verdict pd = Verdict::kNotApplicable;
  bool vanishing = true;
  std::string witness;
};
struct ManifoldReport {
  bool holds = true;
  std::vector<FaceManifoldReport> faces;
};
ManifoldReport homology_manifold_check(const Fan& fan, const Weights& omega,
                                       Coefficients coeff);

// Weight of dimension d - p with w(sigma) = sum over facets eta of
// omega(eta) a_{(sigma, eta)}(nu^sigma_eta). DomainError when unbalanced.
RatVector pd_map(const CompCohomology& coh, const Weights& omega, const Cochain& a);

struct AmpleReport {
  bool holds = true;
  std::vector<bool> per_cone;
};
AmpleReport is_ample(const Fan& fan, const ConewiseLinear& f);

struct KleimanReport {
  bool holds = true;
  std::vector<Verdict> per_cone;  // kNotApplicable: no effective curve
  std::vector<std::optional<Rational>> minima;
};
KleimanReport kleiman_check(const Fan& fan, const ConewiseLinear& f);

}  // namespace tropfan
