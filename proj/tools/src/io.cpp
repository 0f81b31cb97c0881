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

#include "tropfan/cli/io.hpp"

#include <fstream>

#include "tropfan/errors.hpp"

namespace tropfan::cli {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& msg) {
  throw InputError((pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

const json& field(const json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) fail(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(pointer + "/" + key, "missing field");
  return *it;
}

Integer parse_integer(const json& j, const std::string& pointer) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) fail(pointer, "not an integer");
    return v;
  }
  fail(pointer, "expected an integer");
}

std::size_t parse_count(const json& j, const std::string& pointer) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(pointer, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& array(const json& j, const std::string& pointer) {
  if (!j.is_array()) fail(pointer, "expected an array");
  return j;
}

Subset parse_index_set(const json& j, const std::string& pointer) {
  Subset s;
  const json& a = array(j, pointer);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    if (!a[i].is_number_integer()) fail(p, "expected an index");
    s.push_back(a[i].get<int>());
  }
  return s;
}

}  // namespace

Rational parse_rational(const json& j, const std::string& pointer) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(parse_integer(j, pointer));
  if (!j.is_string()) fail(pointer, "expected a rational string \"a/b\"");
  std::string s = j.get<std::string>();
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(pointer, "malformed rational \"" + s + "\"");
  if (q.get_den() == 0) fail(pointer, "zero denominator");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

FanFile parse_fan(const json& j) {
  FanFile f;
  if (!j.is_object()) fail("", "expected an object");
  f.data.name = j.value("name", std::string("fan"));
  f.data.rank = parse_count(field(j, "rank", ""), "/rank");
  const json& rays = array(field(j, "rays", ""), "/rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string p = "/rays/" + std::to_string(i);
    const json& r = array(rays[i], p);
    if (r.size() != f.data.rank) fail(p, "ray length differs from rank");
    IntVector v;
    for (std::size_t k = 0; k < r.size(); ++k)
      v.push_back(parse_integer(r[k], p + "/" + std::to_string(k)));
    f.data.rays.push_back(v);
  }
  const json& cones = array(field(j, "maximal_cones", ""), "/maximal_cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string p = "/maximal_cones/" + std::to_string(i);
    Subset s = parse_index_set(cones[i], p);
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k] < 0 || static_cast<std::size_t>(s[k]) >= rays.size())
        fail(p + "/" + std::to_string(k), "ray index out of range");
    f.data.maximal_cones.push_back(s);
  }
  if (j.contains("lattice")) {
    const json& l = j["lattice"];
    if (!l.is_string() || (l != "ambient" && l != "ray-span"))
      fail("/lattice", "expected \"ambient\" or \"ray-span\"");
    f.lattice = l.get<std::string>();
  }
  if (j.contains("weights")) {
    const json& w = array(j["weights"], "/weights");
    if (w.size() != cones.size()) fail("/weights", "length differs from maximal_cones");
    Weights ws;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string p = "/weights/" + std::to_string(i);
      Integer v = parse_integer(w[i], p);
      if (v == 0) fail(p, "weights must be nonzero");
      ws.push_back(v);
    }
    f.data.weights = ws;
  }
  if (j.contains("ray_values")) {
    const json& v = array(j["ray_values"], "/ray_values");
    if (v.size() != rays.size()) fail("/ray_values", "length differs from rays");
    RatVector vals;
    for (std::size_t i = 0; i < v.size(); ++i)
      vals.push_back(parse_rational(v[i], "/ray_values/" + std::to_string(i)));
    f.data.ray_values = vals;
  }
  return f;
}

json fan_to_json(const FanFile& f) {
  json j;
  j["name"] = f.data.name;
  j["rank"] = f.data.rank;
  j["lattice"] = f.lattice;
  j["rays"] = json::array();
  for (const auto& r : f.data.rays) {
    json row = json::array();
    for (const auto& x : r) {
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    j["rays"].push_back(row);
  }
  j["maximal_cones"] = f.data.maximal_cones;
  if (f.data.weights) {
    j["weights"] = json::array();
    for (const auto& w : *f.data.weights) j["weights"].push_back(w.get_si());
  }
  if (f.data.ray_values) {
    j["ray_values"] = json::array();
    for (const auto& v : *f.data.ray_values) j["ray_values"].push_back(format_rational(v));
  }
  return j;
}

FanData prepare_fan(const FanFile& f) {
  Diagnostics d = validate(f.data, ValidationLevel::kCombinatorial);
  if (!d.ok()) {
    std::string msg = "invalid fan:";
    for (const auto& s : d.issues) msg += " " + s + ";";
    throw InputError(msg);
  }
  return f.lattice == "ray-span" ? rebase_to_ray_span(f.data) : f.data;
}

Matroid parse_matroid(const json& j) {
  const json& t = field(j, "type", "");
  if (!t.is_string()) fail("/type", "expected a string");
  const std::string type = t.get<std::string>();
  if (type == "uniform") {
    const std::size_t n = parse_count(field(j, "n", ""), "/n");
    const std::size_t r = parse_count(field(j, "r", ""), "/r");
    if (r > n) fail("/r", "rank exceeds ground set size");
    return Matroid::uniform(n, r);
  }
  if (type == "graphic") {
    const std::size_t v = parse_count(field(j, "vertices", ""), "/vertices");
    const json& e = array(field(j, "edges", ""), "/edges");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string p = "/edges/" + std::to_string(i);
      Subset s = parse_index_set(e[i], p);
      if (s.size() != 2) fail(p, "an edge has two endpoints");
      for (int x : s)
        if (x < 0 || static_cast<std::size_t>(x) >= v) fail(p, "vertex out of range");
      edges.emplace_back(s[0], s[1]);
    }
    return Matroid::graphic(v, edges);
  }
  if (type == "bases") {
    const std::size_t n = parse_count(field(j, "ground", ""), "/ground");
    const json& b = array(field(j, "bases", ""), "/bases");
    std::vector<Subset> bases;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Subset s = parse_index_set(b[i], "/bases/" + std::to_string(i));
      for (int x : s)
        if (x < 0 || static_cast<std::size_t>(x) >= n)
          fail("/bases/" + std::to_string(i), "element out of range");
      bases.push_back(s);
    }
    return Matroid::from_bases(n, bases);
  }
  fail("/type", "unknown matroid type \"" + type + "\"");
}

RatVector parse_function(const json& j) {
  std::string base;
  const json* a = &j;
  if (j.is_object()) {
    a = &field(j, "ray_values", "");
    base = "/ray_values";
  }
  array(*a, base);
  RatVector out;
  for (std::size_t i = 0; i < a->size(); ++i)
    out.push_back(parse_rational((*a)[i], base + "/" + std::to_string(i)));
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace tropfan::cli
