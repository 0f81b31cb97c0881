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

#include "tropfan/exterior.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace tropfan {

namespace {

void enumerate(std::size_t n, std::size_t p, std::size_t start, Subset& cur,
               std::vector<Subset>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (p - cur.size()) <= n; ++i) {
    cur.push_back(static_cast<int>(i));
    enumerate(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

Subset set_minus(const Subset& a, const Subset& b) {
  Subset d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return d;
}

}  // namespace

const std::vector<Subset>& subsets(std::size_t n, std::size_t p) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<Subset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Subset> out;
  if (p <= n) {
    Subset cur;
    enumerate(n, p, 0, cur, out);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::size_t binomial(std::size_t n, std::size_t p) {
  if (p > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= p; ++i) r = r * (n - p + i) / i;
  return r;
}

std::size_t subset_index(std::size_t n, const Subset& s) {
  // Rank in lexicographic order: count subsets preceding s.
  const std::size_t p = s.size();
  std::size_t idx = 0;
  int prev = -1;
  for (std::size_t k = 0; k < p; ++k) {
    for (int v = prev + 1; v < s[k]; ++v)
      idx += binomial(n - static_cast<std::size_t>(v) - 1, p - k - 1);
    prev = s[k];
  }
  return idx;
}

int shuffle_sign(const Subset& a, const Subset& b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b) {
      if (x == y) return 0;
      if (x > y) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

IntMatrix compound(const IntMatrix& a, std::size_t p) {
  const auto& rs = subsets(a.rows(), p);
  const auto& cs = subsets(a.cols(), p);
  IntMatrix c(rs.size(), cs.size());
  IntMatrix minor(p, p);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = 0; v < p; ++v) minor(u, v) = a(rs[i][u], cs[j][v]);
      c(i, j) = determinant(minor);
    }
  return c;
}

IntVector wedge_rows(const IntMatrix& m) {
  IntMatrix c = compound(m, m.rows());
  return c.row_vector(0);
}

RatVector wedge_rows(const RatMatrix& m) {
  // Clear denominators row by row, then rescale.
  IntMatrix im(m.rows(), m.cols());
  Rational scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * l;
      im(i, j) = x.get_num();
    }
    scale /= l;
  }
  IntVector w = wedge_rows(im);
  RatVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = scale * w[i];
  return out;
}

template <typename T>
std::vector<T> wedge(const std::vector<T>& a, std::size_t p,
                     const std::vector<T>& b, std::size_t q, std::size_t n) {
  const auto& ps = subsets(n, p);
  const auto& qs = subsets(n, q);
  if (a.size() != ps.size() || b.size() != qs.size())
    throw InputError("wedge: coordinate length mismatch");
  std::vector<T> out(binomial(n, p + q));
  if (p + q > n) return out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (b[j] == 0) continue;
      int s = shuffle_sign(ps[i], qs[j]);
      if (s == 0) continue;
      std::size_t k = subset_index(n, set_union(ps[i], qs[j]));
      T term = a[i] * b[j];
      if (s > 0)
        out[k] += term;
      else
        out[k] -= term;
    }
  }
  return out;
}

template <typename T>
std::vector<T> contract_form(const std::vector<T>& alpha, std::size_t p,
                             const std::vector<T>& v, std::size_t k,
                             std::size_t n) {
  if (k > p) throw InputError("contract: degree mismatch");
  const auto& ks = subsets(n, k);
  const auto& js = subsets(n, p - k);
  if (alpha.size() != binomial(n, p) || v.size() != ks.size())
    throw InputError("contract: coordinate length mismatch");
  std::vector<T> out(js.size());
  for (std::size_t j = 0; j < js.size(); ++j)
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (v[i] == 0) continue;
      int s = shuffle_sign(ks[i], js[j]);
      if (s == 0) continue;
      T term = v[i] * alpha[subset_index(n, set_union(ks[i], js[j]))];
      if (s > 0)
        out[j] += term;
      else
        out[j] -= term;
    }
  return out;
}

template <typename T>
std::vector<T> contract_vector(const std::vector<T>& w, std::size_t p,
                               const std::vector<T>& alpha, std::size_t k,
                               std::size_t n) {
  if (k > p) throw InputError("contract: degree mismatch");
  const auto& ks = subsets(n, k);
  const auto& ps = subsets(n, p);
  if (w.size() != ps.size() || alpha.size() != ks.size())
    throw InputError("contract: coordinate length mismatch");
  std::vector<T> out(binomial(n, p - k));
  for (std::size_t m = 0; m < ps.size(); ++m) {
    if (w[m] == 0) continue;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!std::includes(ps[m].begin(), ps[m].end(), ks[i].begin(), ks[i].end()))
        continue;
      Subset rest = set_minus(ps[m], ks[i]);
      int s = shuffle_sign(ks[i], rest);
      T term = alpha[i] * w[m];
      std::size_t j = subset_index(n, rest);
      if (s > 0)
        out[j] += term;
      else
        out[j] -= term;
    }
  }
  return out;
}

template IntVector wedge(const IntVector&, std::size_t, const IntVector&,
                         std::size_t, std::size_t);
template RatVector wedge(const RatVector&, std::size_t, const RatVector&,
                         std::size_t, std::size_t);
template IntVector contract_form(const IntVector&, std::size_t, const IntVector&,
                                 std::size_t, std::size_t);
template RatVector contract_form(const RatVector&, std::size_t, const RatVector&,
                                 std::size_t, std::size_t);
template IntVector contract_vector(const IntVector&, std::size_t,
                                   const IntVector&, std::size_t, std::size_t);
template RatVector contract_vector(const RatVector&, std::size_t,
                                   const RatVector&, std::size_t, std::size_t);

}  // namespace tropfan
