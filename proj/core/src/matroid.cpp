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

#include "tropfan/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropfan {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

Subset set_minus(const Subset& a, const Subset& b) {
  Subset d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return d;
}

}  // namespace

Matroid Matroid::uniform(std::size_t n, std::size_t r) {
  if (r > n) throw InputError("uniform matroid needs r <= n");
  Matroid m;
  m.type_ = Kind::kUniform;
  m.kind_ = "uniform";
  m.n_ = n;
  m.r_ = r;
  return m;
}

Matroid Matroid::graphic(std::size_t vertices,
                         const std::vector<std::pair<int, int>>& edges) {
  Matroid m;
  m.type_ = Kind::kGraphic;
  m.kind_ = "graphic";
  m.vertices_ = vertices;
  for (const auto& [a, b] : edges)
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertices ||
        static_cast<std::size_t>(b) >= vertices)
      throw InputError("edge endpoint out of range");
  m.edges_ = edges;
  m.n_ = edges.size();
  Subset all(m.n_);
  std::iota(all.begin(), all.end(), 0);
  m.r_ = m.rank(all);
  return m;
}

Matroid Matroid::from_bases(std::size_t ground, std::vector<Subset> bases) {
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  for (auto& b : bases) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw InputError("basis with repeated element");
    for (int e : b)
      if (e < 0 || static_cast<std::size_t>(e) >= ground)
        throw InputError("basis element out of range");
    if (b.size() != bases.front().size())
      throw InputError("bases have different cardinalities");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  std::set<Subset> index(bases.begin(), bases.end());
  for (const auto& b1 : bases)
    for (const auto& b2 : bases)
      for (int x : set_minus(b1, b2)) {
        bool found = false;
        for (int y : set_minus(b2, b1)) {
          Subset c = b1;
          c.erase(std::find(c.begin(), c.end(), x));
          c.insert(std::lower_bound(c.begin(), c.end(), y), y);
          if (index.count(c)) {
            found = true;
            break;
          }
        }
        if (!found) throw InputError("bases violate the exchange axiom");
      }
  Matroid m;
  m.type_ = Kind::kBases;
  m.kind_ = "bases";
  m.n_ = ground;
  m.r_ = bases.front().size();
  m.bases_ = std::move(bases);
  return m;
}

std::size_t Matroid::rank(const Subset& s) const {
  switch (type_) {
    case Kind::kUniform:
      return std::min(s.size(), r_);
    case Kind::kGraphic: {
      UnionFind uf(vertices_);
      std::size_t r = 0;
      for (int e : s)
        if (uf.unite(edges_[e].first, edges_[e].second)) ++r;
      return r;
    }
    case Kind::kBases: {
      Subset sorted = s;
      std::sort(sorted.begin(), sorted.end());
      std::size_t best = 0;
      for (const auto& b : bases_) {
        Subset common;
        std::set_intersection(b.begin(), b.end(), sorted.begin(), sorted.end(),
                              std::back_inserter(common));
        best = std::max(best, common.size());
      }
      return best;
    }
  }
  return 0;
}

Subset Matroid::closure(const Subset& s) const {
  const std::size_t rs = rank(s);
  Subset out;
  for (std::size_t e = 0; e < n_; ++e) {
    Subset t = s;
    if (std::find(t.begin(), t.end(), static_cast<int>(e)) == t.end())
      t.push_back(static_cast<int>(e));
    if (rank(t) == rs) out.push_back(static_cast<int>(e));
  }
  return out;
}

bool Matroid::has_loops() const {
  for (std::size_t e = 0; e < n_; ++e)
    if (rank(Subset{static_cast<int>(e)}) == 0) return true;
  return false;
}

std::vector<Flat> flats(const Matroid& m) {
  const std::size_t n = m.ground_size();
  if (n > 20) throw DomainError("flat enumeration limited to ground sets of size 20");
  std::set<Subset> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Subset s;
    for (std::size_t e = 0; e < n; ++e)
      if (mask & (std::size_t{1} << e)) s.push_back(static_cast<int>(e));
    found.insert(m.closure(s));
  }
  std::vector<Flat> out;
  for (const auto& f : found) out.push_back({f, m.rank(f)});
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  });
  return out;
}

FanData bergman_fan(const Matroid& m) {
  if (m.has_loops()) throw DomainError("Bergman fan of a matroid with loops");
  const std::size_t n = m.ground_size();
  const std::size_t r = m.rank();
  FanData data;
  data.name = "bergman";
  data.rank = n == 0 ? 0 : n - 1;

  std::vector<Flat> proper;
  for (auto& f : flats(m))
    if (!f.elements.empty() && f.rank < r) proper.push_back(f);
  for (const auto& f : proper) {
    IntVector v(data.rank);
    const bool has_last = std::binary_search(f.elements.begin(), f.elements.end(),
                                             static_cast<int>(n - 1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const bool in = std::binary_search(f.elements.begin(), f.elements.end(),
                                         static_cast<int>(i));
      v[i] = has_last ? (in ? 0 : -1) : (in ? 1 : 0);
    }
    data.rays.push_back(v);
  }
  // Maximal chains of proper flats, built rank by rank.
  std::vector<Subset> chains;
  std::vector<int> cur;
  auto extend = [&](auto&& self, std::size_t rank) -> void {
    if (rank == r) {
      chains.push_back(Subset(cur.begin(), cur.end()));
      return;
    }
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if (proper[i].rank != rank) continue;
      if (!cur.empty()) {
        const auto& prev = proper[cur.back()].elements;
        if (!std::includes(proper[i].elements.begin(), proper[i].elements.end(),
                           prev.begin(), prev.end()))
          continue;
      }
      cur.push_back(static_cast<int>(i));
      self(self, rank + 1);
      cur.pop_back();
    }
  };
  if (r >= 1) extend(extend, 1);
  for (auto& c : chains) std::sort(c.begin(), c.end());
  data.maximal_cones = chains;
  data.weights = Weights(chains.size(), Integer(1));
  return data;
}

}  // namespace tropfan
