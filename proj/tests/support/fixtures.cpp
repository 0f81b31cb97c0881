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

#include "fixtures.hpp"

#include "tropfan/matroid.hpp"

namespace tropfan::testing {

namespace {

FanData named(FanData d, const std::string& name) {
  d.name = name;
  return d;
}

}  // namespace

FanData p2() {
  FanData d;
  d.name = "P2";
  d.rank = 2;
  d.rays = {{1, 0}, {0, 1}, {-1, -1}};
  d.maximal_cones = {{0, 1}, {0, 2}, {1, 2}};
  return d;
}

FanData delta() {
  FanData d;
  d.name = "DELTA";
  d.rank = 2;
  d.rays = {{1, 0}, {1, -3}, {-2, 3}};
  d.maximal_cones = {{0}, {1}, {2}};
  d.weights = Weights{1, 1, 1};
  return d;
}

FanData sigma3() {
  FanData d = delta();
  d.name = "SIGMA3";
  d.maximal_cones = {{0, 1}, {0, 2}, {1, 2}};
  d.weights.reset();
  return d;
}

FanData cube() {
  FanData d;
  d.name = "CUBE";
  d.rank = 3;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) d.rays.push_back({a, b, c});
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      int diff = 0;
      for (int k = 0; k < 3; ++k) diff += d.rays[i][k] != d.rays[j][k];
      if (diff == 1) d.maximal_cones.push_back({i, j});
    }
  return rebase_to_ray_span(d);
}

FanData cone2() {
  FanData d;
  d.name = "CONE2";
  d.rank = 2;
  d.rays = {{1, 0}, {0, 1}};
  d.maximal_cones = {{0, 1}};
  return d;
}

FanData u23() { return named(bergman_fan(Matroid::uniform(3, 2)), "U23"); }
FanData u24() { return named(bergman_fan(Matroid::uniform(4, 2)), "U24"); }
FanData u34() { return named(bergman_fan(Matroid::uniform(4, 3)), "U34"); }

FanData k4() {
  return named(bergman_fan(Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})),
               "K4");
}

std::vector<NamedFixture> all_fixtures() {
  return {{"P2", p2},       {"DELTA", delta}, {"SIGMA3", sigma3},
          {"CUBE", cube},   {"CONE2", cone2}, {"U23", u23},
          {"U24", u24},     {"U34", u34},     {"K4", k4}};
}

Weights fixture_weights(const Fan& fan) {
  auto w = fan.weights();
  return w ? *w : unit_weights(fan);
}

std::string fixture_path(const std::string& file) {
  return std::string(TROPFAN_FIXTURE_DIR) + "/" + file;
}

}  // namespace tropfan::testing
