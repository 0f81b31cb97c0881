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

// Exterior powers of Z^n in the wedge-monomial basis e_I, I ranging over the
// sorted p-subsets of {0..n-1} in lexicographic order.

#include <cstddef>
#include <vector>

#include "tropfan/zlinalg.hpp"

namespace tropfan {

using Subset = std::vector<int>;

// All sorted p-subsets of {0..n-1}, lexicographic.
const std::vector<Subset>& subsets(std::size_t n, std::size_t p);
std::size_t binomial(std::size_t n, std::size_t p);
// Position of a sorted subset in subsets(n, |s|).
std::size_t subset_index(std::size_t n, const Subset& s);

// Sign of the permutation sorting the concatenation a ++ b (disjoint sets),
// 0 if they intersect.
int shuffle_sign(const Subset& a, const Subset& b);

// Matrix of the induced map on p-th exterior powers for x -> x * A,
// of shape C(rows, p) x C(cols, p).
IntMatrix compound(const IntMatrix& a, std::size_t p);

// Coordinates of v_0 ^ ... ^ v_{k-1} for the rows of m.
IntVector wedge_rows(const IntMatrix& m);
RatVector wedge_rows(const RatMatrix& m);

// Product of multivectors (or of forms in the dual monomial basis)
// a in degree p, b in degree q, ambient dimension n.
template <typename T>
std::vector<T> wedge(const std::vector<T>& a, std::size_t p,
                     const std::vector<T>& b, std::size_t q, std::size_t n);

// Contraction of a form alpha of degree p by a multivector v of degree k:
// the form u -> alpha(v ^ u) of degree p - k.
template <typename T>
std::vector<T> contract_form(const std::vector<T>& alpha, std::size_t p,
                             const std::vector<T>& v, std::size_t k,
                             std::size_t n);

// Interior product of a multivector w of degree p by a form alpha of degree
// k: sum over I of sgn(I, J) alpha_I w_{I u J} in coordinate J.
template <typename T>
std::vector<T> contract_vector(const std::vector<T>& w, std::size_t p,
                               const std::vector<T>& alpha, std::size_t k,
                               std::size_t n);

}  // namespace tropfan
