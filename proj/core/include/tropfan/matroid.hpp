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

// Matroids given by uniform parameters, graphs or explicit bases, their
// lattices of flats and Bergman fans.

#include <string>
#include <utility>
#include <vector>

#include "tropfan/fan.hpp"

namespace tropfan {

class Matroid {
 public:
  static Matroid uniform(std::size_t n, std::size_t r);
  // Cycle matroid; ground set = edges in the given order.
  static Matroid graphic(std::size_t vertices,
                         const std::vector<std::pair<int, int>>& edges);
  // Checks equal cardinality and the basis-exchange axiom.
  static Matroid from_bases(std::size_t ground, std::vector<Subset> bases);

  std::size_t ground_size() const { return n_; }
  std::size_t rank() const { return r_; }
  std::size_t rank(const Subset& s) const;
  Subset closure(const Subset& s) const;
  bool has_loops() const;
  const std::string& kind() const { return kind_; }

 private:
  enum class Kind { kUniform, kGraphic, kBases };
  Kind type_ = Kind::kUniform;
  std::string kind_;
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::size_t vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Subset> bases_;
};

struct Flat {
  Subset elements;
  std::size_t rank = 0;
};

// All flats sorted by (rank, elements).
std::vector<Flat> flats(const Matroid& m);

// Fan over chains of proper nonempty flats in Z^n / Z(1,...,1), written in
// coordinates dropping the last ground element. Weights are all 1.
// Throws DomainError for matroids with loops.
FanData bergman_fan(const Matroid& m);

}  // namespace tropfan
