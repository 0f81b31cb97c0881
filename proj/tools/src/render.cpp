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

#include "tropfan/cli/render.hpp"

#include <algorithm>
#include <sstream>

#include "tropfan/errors.hpp"

namespace tropfan::cli {

namespace {

Integer parse_positive(const std::string& s, const std::string& whole) {
  Integer v;
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || v.set_str(s, 10) != 0 || v <= 0)
    throw InputError("malformed group \"" + whole + "\"");
  return v;
}

}  // namespace

AbGroup parse_group(const std::string& s) {
  AbGroup g;
  if (s == "0") return g;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(" x ", pos);
    std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part == "Z") {
      g.free_rank += 1;
    } else if (part.rfind("Z^", 0) == 0) {
      g.free_rank += parse_positive(part.substr(2), s).get_ui();
    } else if (part.rfind("Z/", 0) == 0 && part.size() > 3 && part.back() == 'Z') {
      Integer d = parse_positive(part.substr(2, part.size() - 3), s);
      if (d < 2) throw InputError("malformed group \"" + s + "\"");
      g.torsion.push_back(d);
    } else {
      throw InputError("malformed group \"" + s + "\"");
    }
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  for (std::size_t i = 1; i < g.torsion.size(); ++i)
    if (g.torsion[i] % g.torsion[i - 1] != 0)
      throw InputError("torsion factors of \"" + s + "\" do not form a divisibility chain");
  return g;
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

std::string render_text(const GroupTable& t) {
  std::size_t qs = 0;
  for (const auto& row : t.cells) qs = std::max(qs, row.size());
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"p\\q"};
  for (std::size_t q = 0; q < qs; ++q) head.push_back(std::to_string(q));
  rows.push_back(head);
  for (std::size_t p = 0; p < t.cells.size(); ++p) {
    std::vector<std::string> r{std::to_string(p)};
    for (std::size_t q = 0; q < qs; ++q)
      r.push_back(q < t.cells[p].size() ? t.cells[p][q].to_string() : "0");
    rows.push_back(r);
  }
  return t.title + "\n" + render_columns(rows);
}

nlohmann::json table_to_json(const GroupTable& t) {
  nlohmann::json j;
  j["title"] = t.title;
  j["space"] = t.space;
  j["variant"] = t.variant;
  j["coeff"] = t.coeff;
  j["groups"] = nlohmann::json::array();
  for (const auto& row : t.cells) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& g : row) r.push_back(g.to_string());
    j["groups"].push_back(r);
  }
  return j;
}

GroupTable table_from_json(const nlohmann::json& j) {
  GroupTable t;
  try {
    t.title = j.at("title").get<std::string>();
    t.space = j.at("space").get<std::string>();
    t.variant = j.at("variant").get<std::string>();
    t.coeff = j.at("coeff").get<std::string>();
    for (const auto& row : j.at("groups")) {
      std::vector<AbGroup> r;
      for (const auto& g : row) r.push_back(parse_group(g.get<std::string>()));
      t.cells.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("table: ") + e.what());
  }
  return t;
}

}  // namespace tropfan::cli
