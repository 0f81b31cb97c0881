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

// JSON input files: fans, matroids and conewise linear functions. Errors are
// InputError messages prefixed with a JSON pointer.

#include <string>

#include "json.hpp"
#include "tropfan/fan.hpp"
#include "tropfan/matroid.hpp"

namespace tropfan::cli {

using nlohmann::json;

struct FanFile {
  FanData data;
  std::string lattice = "ambient";  // or "ray-span"
};

FanFile parse_fan(const json& j);
json fan_to_json(const FanFile& f);

// Parses, validates and applies the lattice choice.
FanData prepare_fan(const FanFile& f);

Matroid parse_matroid(const json& j);

// Either {"ray_values": [...]} or a bare array of rationals.
RatVector parse_function(const json& j);

Rational parse_rational(const json& j, const std::string& pointer);
std::string format_rational(const Rational& q);

json read_json_file(const std::string& path);

}  // namespace tropfan::cli
