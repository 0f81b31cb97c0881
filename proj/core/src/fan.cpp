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

#include "tropfan/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tropfan/lp.hpp"

namespace tropfan {

namespace {

IntMatrix rows_matrix(const std::vector<IntVector>& vs, std::size_t n) {
  IntMatrix m(0, n);
  for (const auto& v : vs) m.append_row(v);
  return m;
}

bool cone_order(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string describe(const Subset& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

// True when cone(a) and cone(b) share a point outside cone(a n b).
bool overlap_beyond_common_face(const std::vector<IntVector>& rays, std::size_t n,
                                const Subset& a, const Subset& b) {
  Subset common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  const std::size_t na = a.size(), nb = b.size(), vars = na + nb;
  std::vector<LinearConstraint> cs;
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint c;
    c.coeffs.assign(vars, Rational(0));
    for (std::size_t i = 0; i < na; ++i) c.coeffs[i] = rays[a[i]][j];
    for (std::size_t i = 0; i < nb; ++i) c.coeffs[na + i] = -Rational(rays[b[i]][j]);
    c.relation = Relation::kEqual;
    cs.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < vars; ++i) {
    LinearConstraint c;
    c.coeffs.assign(vars, Rational(0));
    c.coeffs[i] = 1;
    cs.push_back(std::move(c));
  }
  LinearConstraint escape;
  escape.coeffs.assign(vars, Rational(0));
  for (std::size_t i = 0; i < na; ++i)
    if (!std::binary_search(common.begin(), common.end(), a[i])) escape.coeffs[i] = 1;
  escape.relation = Relation::kGreater;
  cs.push_back(std::move(escape));
  LpCertificate cert = lp_feasible(cs, vars);
  check_internal(verify_certificate(cs, vars, cert), "fan overlap certificate");
  return cert.feasible;
}

}  // namespace

Diagnostics validate(const FanData& data, ValidationLevel level) {
  Diagnostics d;
  const std::size_t n = data.rank;
  for (std::size_t i = 0; i < data.rays.size(); ++i)
    if (data.rays[i].size() != n)
      throw InputError("ray " + std::to_string(i) + " has length " +
                       std::to_string(data.rays[i].size()) + ", expected " +
                       std::to_string(n));
  if (data.weights && data.weights->size() != data.maximal_cones.size())
    throw InputError("weights must align with maximal_cones");
  if (data.ray_values && data.ray_values->size() != data.rays.size())
    throw InputError("ray_values must align with rays");

  for (std::size_t i = 0; i < data.rays.size(); ++i) {
    Integer g = content(data.rays[i]);
    if (g != 1) {
      d.primitive = false;
      d.issues.push_back("ray " + std::to_string(i) +
                         (g == 0 ? " is zero" : " is not primitive (gcd " + g.get_str() + ")"));
    }
  }
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < data.rays.size(); ++i)
    if (!seen.insert(data.rays[i]).second) {
      d.distinct_rays = false;
      d.issues.push_back("ray " + std::to_string(i) + " duplicates an earlier ray");
    }

  std::set<Subset> listed;
  for (std::size_t c = 0; c < data.maximal_cones.size(); ++c) {
    Subset s = data.maximal_cones[c];
    bool ok = true;
    for (int r : s)
      if (r < 0 || static_cast<std::size_t>(r) >= data.rays.size()) ok = false;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) ok = false;
    if (!ok) {
      d.well_indexed = false;
      d.issues.push_back("cone " + std::to_string(c) + " has invalid ray indices");
      continue;
    }
    if (!listed.insert(s).second) {
      d.well_indexed = false;
      d.issues.push_back("cone " + std::to_string(c) + " is listed twice");
      continue;
    }
    std::vector<IntVector> rs;
    for (int r : s) rs.push_back(data.rays[r]);
    if (rank(rows_matrix(rs, n)) != s.size()) {
      d.simplicial = false;
      d.issues.push_back("cone " + describe(s) + " is not simplicial");
    }
  }
  for (const auto& a : listed)
    for (const auto& b : listed)
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        d.well_indexed = false;
        d.issues.push_back("cone " + describe(a) + " is not maximal");
      }
  if (data.weights)
    for (std::size_t i = 0; i < data.weights->size(); ++i)
      if ((*data.weights)[i] == 0)
        d.issues.push_back("weight of cone " + std::to_string(i) + " is zero");

  if (level == ValidationLevel::kGeometric && d.ok()) {
    d.geometric_checked = true;
    std::vector<Subset> cones(listed.begin(), listed.end());
    for (std::size_t i = 0; i < cones.size(); ++i)
      for (std::size_t j = i + 1; j < cones.size(); ++j) {
        if (overlap_beyond_common_face(data.rays, n, cones[i], cones[j]) ||
            overlap_beyond_common_face(data.rays, n, cones[j], cones[i])) {
          d.geometric_ok = false;
          d.issues.push_back("cones " + describe(cones[i]) + " and " +
                             describe(cones[j]) + " overlap");
        }
      }
  }
  return d;
}

FanData rebase_to_ray_span(const FanData& data) {
  IntMatrix basis = hnf(rows_matrix(data.rays, data.rank));
  FanData out = data;
  out.rank = basis.rows();
  for (auto& r : out.rays) {
    auto c = row_coordinates(basis, r);
    check_internal(c.has_value(), "ray outside its own span");
    r = *c;
  }
  return out;
}

Fan::Fan(const FanData& data) : data_(data), name_(data.name), rank_(data.rank) {
  Diagnostics d = validate(data, ValidationLevel::kCombinatorial);
  if (!d.ok()) throw InputError("invalid fan: " + d.issues.front());
  rays_ = data.rays;

  std::set<Subset> all;
  all.insert(Subset{});
  for (auto s : data.maximal_cones) {
    std::sort(s.begin(), s.end());
    const std::size_t k = s.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      Subset sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      all.insert(sub);
    }
  }
  cones_.assign(all.begin(), all.end());
  std::sort(cones_.begin(), cones_.end(), cone_order);
  for (std::size_t c = 0; c < cones_.size(); ++c) index_[cones_[c]] = static_cast<ConeId>(c);

  ray_cone_.assign(rays_.size(), -1);
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    auto it = index_.find(Subset{static_cast<int>(r)});
    if (it != index_.end()) ray_cone_[r] = it->second;
  }

  dim_ = static_cast<int>(cones_.back().size());
  by_dim_.assign(dim_ + 1, {});
  for (std::size_t c = 0; c < cones_.size(); ++c)
    by_dim_[cones_[c].size()].push_back(static_cast<ConeId>(c));

  const std::size_t nc = cones_.size();
  down_.assign(nc, {});
  up_.assign(nc, {});
  star_.assign(nc, {});
  for (std::size_t c = 0; c < nc; ++c) {
    const Subset& s = cones_[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Subset f = s;
      f.erase(f.begin() + static_cast<long>(i));
      ConeId fc = index_.at(f);
      down_[c].push_back(fc);
      up_[fc].push_back(static_cast<ConeId>(c));
    }
  }
  for (auto& v : down_) std::sort(v.begin(), v.end());
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (std::size_t big = 0; big < nc; ++big)
    for (std::size_t small = 0; small < nc; ++small)
      if (std::includes(cones_[big].begin(), cones_[big].end(),
                        cones_[small].begin(), cones_[small].end()))
        star_[small].push_back(static_cast<ConeId>(big));

  is_maximal_.assign(nc, false);
  for (std::size_t c = 0; c < nc; ++c)
    if (up_[c].empty()) {
      is_maximal_[c] = true;
      facets_.push_back(static_cast<ConeId>(c));
    }
  build_geometry();
}

void Fan::build_geometry() {
  const std::size_t n = rank_;
  geometry_.resize(cones_.size());
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    ConeGeometry& g = geometry_[c];
    g.rays = cones_[c];
    const std::size_t k = g.rays.size();
    g.ray_matrix = IntMatrix(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) g.ray_matrix(i, j) = rays_[g.rays[i]][j];

    if (k == 0) {
      g.basis = IntMatrix(0, n);
      g.multiplicity = 1;
      g.projection = IntMatrix::identity(n);
      g.lift = IntMatrix::identity(n);
      continue;
    }
    // Saturation of the ray span.
    SmithForm s = snf(g.ray_matrix);
    IntMatrix vinv = unimodular_inverse(s.V);
    IntMatrix basis = hnf(vinv.block(0, 0, k, n));
    // Orientation: rays have positive determinant in the chosen basis.
    IntMatrix coords(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto c_i = row_coordinates(basis, g.ray_matrix.row(i));
      check_internal(c_i.has_value(), "ray outside its cone lattice");
      for (std::size_t j = 0; j < k; ++j) coords(i, j) = (*c_i)[j];
    }
    Integer det = determinant(coords);
    check_internal(det != 0, "degenerate cone");
    if (det < 0) {
      for (std::size_t j = 0; j < n; ++j) basis(0, j) = -basis(0, j);
      det = -det;
    }
    g.basis = basis;
    g.multiplicity = det;

    SmithForm sb = snf(basis);
    for (std::size_t i = 0; i < k; ++i)
      check_internal(sb.D(i, i) == 1, "cone lattice basis not saturated");
    g.projection = sb.V.block(0, k, n, n - k);
    g.lift = unimodular_inverse(sb.V).block(k, 0, n - k, n);
  }
}

std::optional<Weights> Fan::weights() const {
  if (!data_.weights) return std::nullopt;
  Weights w(facets_.size());
  for (std::size_t i = 0; i < data_.maximal_cones.size(); ++i)
    w[facet_position(find_cone(data_.maximal_cones[i]))] = (*data_.weights)[i];
  return w;
}

bool Fan::is_pure() const {
  for (ConeId f : facets_)
    if (cone_dim(f) != dim_) return false;
  return true;
}

ConeId Fan::find_cone(const Subset& rays) const {
  Subset s = rays;
  std::sort(s.begin(), s.end());
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<ConeId>& Fan::cones_of_dim(int k) const {
  static const std::vector<ConeId> empty;
  if (k < 0 || k > dim_) return empty;
  return by_dim_[k];
}

int Fan::facet_position(ConeId c) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), c);
  if (it == facets_.end() || *it != c) return -1;
  return static_cast<int>(it - facets_.begin());
}

bool Fan::contains(ConeId big, ConeId small) const {
  return std::includes(cones_[big].begin(), cones_[big].end(),
                       cones_[small].begin(), cones_[small].end());
}

ConeId Fan::join(ConeId a, ConeId b) const {
  Subset u;
  std::set_union(cones_[a].begin(), cones_[a].end(), cones_[b].begin(),
                 cones_[b].end(), std::back_inserter(u));
  return find_cone(u);
}

ConeId Fan::complement(ConeId big, ConeId small) const {
  Subset d;
  std::set_difference(cones_[big].begin(), cones_[big].end(), cones_[small].begin(),
                      cones_[small].end(), std::back_inserter(d));
  ConeId c = find_cone(d);
  check_internal(c >= 0, "complement is not a cone");
  return c;
}

IntMatrix Fan::quotient_map(ConeId small, ConeId big) const {
  if (!contains(big, small)) throw InputError("quotient_map: cones not nested");
  return geometry_[small].lift * geometry_[big].projection;
}

IntVector Fan::unit_normal(ConeId small, ConeId big) const {
  if (!contains(big, small) || cone_dim(big) != cone_dim(small) + 1)
    throw InputError("unit_normal: not a codimension-one incidence");
  Subset extra;
  std::set_difference(cones_[big].begin(), cones_[big].end(), cones_[small].begin(),
                      cones_[small].end(), std::back_inserter(extra));
  IntVector v = mul(rays_[extra[0]], geometry_[small].projection);
  Integer g = content(v);
  for (auto& x : v) x /= g;
  return v;
}

IntVector Fan::unit_normal_lift(ConeId small, ConeId big) const {
  IntVector e = unit_normal(small, big);
  IntMatrix img = geometry_[big].basis * geometry_[small].projection;
  auto c = solve_integral(img.transpose(), e);
  check_internal(c.has_value(), "unit normal has no lift in N_sigma");
  return mul(*c, geometry_[big].basis);
}

IntMatrix Fan::image_lattice(ConeId small, ConeId big) const {
  if (!contains(big, small)) throw InputError("image_lattice: cones not nested");
  IntMatrix h = hnf(geometry_[big].basis * geometry_[small].projection);
  h.set_cols_if_empty(rank_ - cones_[small].size());
  return h;
}

IntVector Fan::orientation(ConeId small, ConeId big) const {
  ConeId c = complement(big, small);
  return wedge_rows(geometry_[c].basis * geometry_[small].projection);
}

UnimodularityReport is_unimodular(const Fan& fan) {
  UnimodularityReport r;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    bool u = fan.geometry(static_cast<ConeId>(c)).multiplicity == 1;
    r.per_cone.push_back(u);
    r.all = r.all && u;
  }
  return r;
}

bool is_saturated_at(const Fan& fan, ConeId c) {
  const std::size_t m = fan.rank() - static_cast<std::size_t>(fan.cone_dim(c));
  IntMatrix gens(0, m);
  for (ConeId eta : fan.star(c)) {
    if (!fan.is_maximal(eta)) continue;
    IntMatrix img = fan.image_lattice(c, eta);
    for (std::size_t i = 0; i < img.rows(); ++i) gens.append_row(img.row(i));
  }
  return saturate(Sublattice::from_generators(gens)).index == 1;
}

bool is_saturated(const Fan& fan) {
  for (std::size_t c = 0; c < fan.num_cones(); ++c)
    if (!is_saturated_at(fan, static_cast<ConeId>(c))) return false;
  return true;
}

bool is_balanced(const Fan& fan, const Weights& w) {
  if (!fan.is_pure()) throw DomainError("balancing requires a pure fan");
  if (w.size() != fan.facets().size()) throw InputError("weights do not match facets");
  const int d = fan.dim();
  for (ConeId tau : fan.cones_of_dim(d - 1)) {
    IntVector sum(fan.rank() - static_cast<std::size_t>(d - 1));
    for (ConeId sigma : fan.cofaces_codim1(tau)) {
      IntVector e = fan.unit_normal(tau, sigma);
      const Integer& ws = w[fan.facet_position(sigma)];
      for (std::size_t i = 0; i < e.size(); ++i) sum[i] += ws * e[i];
    }
    for (const auto& x : sum)
      if (x != 0) return false;
  }
  return true;
}

Weights unit_weights(const Fan& fan) { return Weights(fan.facets().size(), Integer(1)); }

StarFan star_fan(const Fan& fan, ConeId c, const std::optional<Weights>& weights) {
  StarFan out;
  out.center = c;
  out.projection = fan.geometry(c).projection;
  FanData data;
  data.name = fan.name() + "/star";
  data.rank = fan.rank() - static_cast<std::size_t>(fan.cone_dim(c));
  std::map<int, int> extra_to_star;  // original ray -> star ray
  for (ConeId eta : fan.cofaces_codim1(c)) {
    const int r = fan.cone(fan.complement(eta, c))[0];
    IntVector v = mul(fan.ray(r), out.projection);
    Integer g = content(v);
    for (auto& x : v) x /= g;
    extra_to_star[r] = static_cast<int>(data.rays.size());
    data.rays.push_back(v);
    out.ray_source.push_back(eta);
    out.ray_multiplicity.push_back(g);
  }
  Weights induced;
  for (ConeId eta : fan.star(c)) {
    if (!fan.is_maximal(eta)) continue;
    Subset s;
    for (int r : fan.cone(fan.complement(eta, c))) s.push_back(extra_to_star.at(r));
    std::sort(s.begin(), s.end());
    data.maximal_cones.push_back(s);
    if (weights) induced.push_back((*weights)[fan.facet_position(eta)]);
  }
  if (weights) data.weights = induced;
  out.fan = std::make_unique<Fan>(data);
  out.cone_source.assign(out.fan->num_cones(), -1);
  for (std::size_t sc = 0; sc < out.fan->num_cones(); ++sc) {
    Subset orig = fan.cone(c);
    for (int sr : out.fan->cone(static_cast<ConeId>(sc)))
      orig.push_back(fan.cone(fan.complement(out.ray_source[sr], c))[0]);
    out.cone_source[sc] = fan.find_cone(orig);
    check_internal(out.cone_source[sc] >= 0, "star cone without source");
  }
  if (weights) {
    Weights w(out.fan->facets().size());
    for (std::size_t i = 0; i < data.maximal_cones.size(); ++i) {
      ConeId sc = out.fan->find_cone(data.maximal_cones[i]);
      w[out.fan->facet_position(sc)] = induced[i];
    }
    out.weights = w;
  }
  return out;
}

}  // namespace tropfan
