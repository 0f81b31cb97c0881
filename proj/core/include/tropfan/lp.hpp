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

// Exact feasibility and minimization over rational polyhedra by
// Fourier-Motzkin elimination. Every answer carries a certificate: a point
// for feasible systems, nonnegative multipliers deriving a contradiction for
// infeasible ones.

#include <optional>
#include <vector>

#include "tropfan/zlinalg.hpp"

namespace tropfan {

enum class Relation { kEqual, kGreaterEqual, kGreater };

// coeffs . x + constant  (=, >=, >)  0
struct LinearConstraint {
  RatVector coeffs;
  Rational constant;
  Relation relation = Relation::kGreaterEqual;
};

struct LpCertificate {
  bool feasible = false;
  RatVector point;        // when feasible
  RatVector multipliers;  // when infeasible, one per input constraint
};

LpCertificate lp_feasible(const std::vector<LinearConstraint>& constraints,
                          std::size_t variables);

// Re-checks a certificate by direct substitution.
bool verify_certificate(const std::vector<LinearConstraint>& constraints,
                        std::size_t variables, const LpCertificate& cert);

// x with eqs x = 0 and strict x > 0 componentwise.
LpCertificate strict_lp_feasible(const RatMatrix& eqs, const RatMatrix& strict);
// Constraints matching strict_lp_feasible, for certificate verification.
std::vector<LinearConstraint> strict_system(const RatMatrix& eqs,
                                            const RatMatrix& strict);

enum class LpStatus { kInfeasible, kUnbounded, kOptimal };

struct LpMinimum {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;     // infimum when kOptimal
  bool attained = false;
  RatVector point;    // a minimizer when attained
};

// inf objective . x over the constraint set.
LpMinimum lp_minimize(const RatVector& objective,
                      const std::vector<LinearConstraint>& constraints,
                      std::size_t variables);

}  // namespace tropfan
