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

// Plain-text and JSON rendering of (p,q) group tables.

#include <string>
#include <vector>

#include "json.hpp"
#include "tropfan/zlinalg.hpp"

namespace tropfan::cli {

// Inverse of AbGroup::to_string: "0", "Z", "Z^3", "Z/2Z", joined by " x ".
AbGroup parse_group(const std::string& s);

struct GroupTable {
  std::string title;
  std::string space;
  std::string variant;
  std::string coeff;
  std::vector<std::vector<AbGroup>> cells;  // [p][q]
};

std::string render_text(const GroupTable& t);
nlohmann::json table_to_json(const GroupTable& t);
GroupTable table_from_json(const nlohmann::json& j);

// Left-aligned columns separated by two spaces.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace tropfan::cli
