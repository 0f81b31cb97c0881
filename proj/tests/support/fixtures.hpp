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

// Fan fixtures shared by the unit tests, the acceptance suite and the
// benchmarks.

#include <string>
#include <vector>

#include "tropfan/fan.hpp"

namespace tropfan::testing {

FanData p2();
FanData delta();   // three rays, weights 1
FanData sigma3();  // two-dimensional cones over the rays of delta()
FanData cube();    // one-skeleton of the cube, ray-span lattice
FanData cone2();
FanData u23();
FanData u24();
FanData u34();
FanData k4();

struct NamedFixture {
  std::string name;
  FanData (*make)();
};
std::vector<NamedFixture> all_fixtures();

// Weights of the data when present, else all 1.
Weights fixture_weights(const Fan& fan);

// Absolute path of a file in data/fixtures.
std::string fixture_path(const std::string& file);

}  // namespace tropfan::testing
