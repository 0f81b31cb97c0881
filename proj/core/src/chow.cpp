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

#include "tropfan/chow.hpp"

#include <algorithm>
#include <map>

namespace tropfan {

namespace {

using Sparse = std::map<ConeId, Rational>;

bool integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVector to_int(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw DomainError("class is not integral");
    out[i] = v[i].get_num();
  }
  return out;
}

std::size_t position(const std::vector<ConeId>& v, ConeId c) {
  auto it = std::lower_bound(v.begin(), v.end(), c);
  check_internal(it != v.end() && *it == c, "cone missing from its dimension list");
  return static_cast<std::size_t>(it - v.begin());
}

// Linear form m on N with m(e_r) = 1 and m(e_s) = 0 for the other rays of sigma.
RatVector dual_form(const Fan& fan, ConeId sigma, int r, Coefficients coeff) {
  const ConeGeometry& g = fan.geometry(sigma);
  const Subset& rays = fan.cone(sigma);
  IntVector target(rays.size());
  target[std::find(rays.begin(), rays.end(), r) - rays.begin()] = 1;
  if (coeff == Coefficients::kZ) {
    auto m = solve_integral(g.ray_matrix, target);
    if (!m) throw DomainError("no integral dual form; the cone is not unimodular");
    return to_rational(*m);
  }
  auto m = solve(to_rational(g.ray_matrix), to_rational(target));
  check_internal(m.has_value(), "rays of a simplicial cone are independent");
  return *m;
}

// x_r * x_sigma expressed on generators of degree |sigma| + 1.
Sparse ray_times(const Fan& fan, int r, ConeId sigma, Coefficients coeff) {
  Sparse out;
  if (fan.cone_dim(sigma) >= fan.dim()) return out;
  const Subset& rays = fan.cone(sigma);
  auto add_join = [&](int ray, const Rational& c) {
    ConeId j = fan.join(fan.ray_cone(ray), sigma);
    if (j < 0) return;
    out[j] += c * Rational(fan.geometry(sigma).multiplicity) / Rational(fan.geometry(j).multiplicity);
  };
  if (!std::binary_search(rays.begin(), rays.end(), r)) {
    add_join(r, 1);
  } else {
    RatVector m = dual_form(fan, sigma, r, coeff);
    for (ConeId up : fan.cofaces_codim1(sigma)) {
      const int z = fan.cone(fan.complement(up, sigma))[0];
      Rational mz = 0;
      for (std::size_t i = 0; i < m.size(); ++i) mz += m[i] * fan.ray(z)[i];
      if (mz != 0) add_join(z, -mz);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

int ChowPresentation::index_of(ConeId sigma) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), sigma);
  if (it == generators.end() || *it != sigma) return -1;
  return static_cast<int>(it - generators.begin());
}

IntMatrix balancing_matrix(const Fan& fan, int p) {
  if (p < 0) throw InputError("negative dimension");
  const std::size_t cols = p <= fan.dim() ? fan.cones_of_dim(p).size() : 0;
  IntMatrix m(0, cols);
  if (p == 0 || p > fan.dim()) return m;
  const auto& gens = fan.cones_of_dim(p);
  for (ConeId tau : fan.cones_of_dim(p - 1)) {
    const std::size_t amb = fan.rank() - static_cast<std::size_t>(p - 1);
    IntMatrix block(amb, cols);
    for (ConeId sigma : fan.cofaces_codim1(tau)) {
      IntVector e = fan.unit_normal(tau, sigma);
      const std::size_t c = position(gens, sigma);
      for (std::size_t j = 0; j < amb; ++j) block(j, c) = e[j];
    }
    for (std::size_t j = 0; j < amb; ++j) m.append_row(block.row_vector(j));
  }
  return m;
}

ChowPresentation chow_group(const Fan& fan, int k, Coefficients coeff) {
  if (k < 0) throw InputError("negative Chow degree");
  if (coeff == Coefficients::kZ && k >= 2 && !is_unimodular(fan).all)
    throw DomainError("integral Chow groups in degree >= 2 need a unimodular fan");
  ChowPresentation pres;
  pres.degree = k;
  pres.coeff = coeff;
  if (k <= fan.dim()) pres.generators = fan.cones_of_dim(k);
  pres.relations = balancing_matrix(fan, k);
  pres.section = Cokernel(pres.relations, pres.generators.size());
  pres.group = pres.section.group();
  if (coeff == Coefficients::kQ) pres.group.torsion.clear();
  return pres;
}

ChowClass chow_zero(const Fan& fan, int k) {
  ChowClass c;
  c.degree = k;
  if (k >= 0 && k <= fan.dim()) c.coeffs.assign(fan.cones_of_dim(k).size(), Rational(0));
  return c;
}

ChowClass chow_generator(const Fan& fan, ConeId sigma) {
  ChowClass c = chow_zero(fan, fan.cone_dim(sigma));
  c.coeffs[position(fan.cones_of_dim(c.degree), sigma)] = 1;
  return c;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size())
    throw InputError("adding Chow classes of different degrees");
  ChowClass c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
  return c;
}

ChowClass operator*(const Rational& s, const ChowClass& a) {
  ChowClass c = a;
  for (auto& x : c.coeffs) x *= s;
  return c;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + Rational(-1) * b; }

RatVector chow_canonical(const ChowPresentation& pres, const ChowClass& c) {
  if (c.degree != pres.degree || c.coeffs.size() != pres.generators.size())
    throw InputError("class does not match the presentation");
  if (pres.coeff == Coefficients::kZ) {
    if (!integral(c.coeffs)) throw DomainError("rational class in an integral Chow group");
    return to_rational(pres.section.coordinates(to_int(c.coeffs)));
  }
  return pres.section.free_coordinates(c.coeffs);
}

bool chow_equal(const ChowPresentation& pres, const ChowClass& a, const ChowClass& b) {
  for (const auto& x : chow_canonical(pres, a - b))
    if (x != 0) return false;
  return true;
}

ChowClass chow_multiply(const Fan& fan, const ChowClass& a, const ChowClass& b,
                        Coefficients coeff) {
  ChowClass out = chow_zero(fan, a.degree + b.degree);
  if (a.degree + b.degree > fan.dim()) return out;
  if (coeff == Coefficients::kZ && !is_unimodular(fan).all)
    throw DomainError("integral Chow products need a unimodular fan");
  const auto& ga = fan.cones_of_dim(a.degree);
  const auto& gb = fan.cones_of_dim(b.degree);
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    const ConeId tau = ga[i];
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      Sparse cur{{gb[j], a.coeffs[i] * b.coeffs[j] * Rational(fan.geometry(tau).multiplicity)}};
      for (int r : fan.cone(tau)) {
        Sparse next;
        for (const auto& [s, c] : cur)
          for (const auto& [t, d] : ray_times(fan, r, s, coeff)) next[t] += c * d;
        cur = std::move(next);
      }
      const auto& target = fan.cones_of_dim(out.degree);
      for (const auto& [s, c] : cur) out.coeffs[position(target, s)] += c;
    }
  }
  return out;
}

Rational degree_map(const Fan& fan, const Weights& omega, const ChowClass& xi) {
  if (!is_balanced(fan, omega)) throw DomainError("weights are not balanced");
  if (xi.degree != fan.dim()) throw InputError("degree map needs a top-degree class");
  const auto& top = fan.cones_of_dim(fan.dim());
  Rational s = 0;
  for (std::size_t i = 0; i < top.size(); ++i)
    s += xi.coeffs[i] * omega[fan.facet_position(top[i])];
  return s;
}

IntMatrix minkowski_weights(const Fan& fan, int p) {
  if (p < 0 || p > fan.dim()) return IntMatrix(0, 0);
  return kernel_basis(balancing_matrix(fan, p));
}

Rational chow_mw_pairing(const Fan& fan, const ChowClass& xi, const IntVector& w) {
  if (w.size() != xi.coeffs.size()) throw InputError("pairing of different degrees");
  for (const auto& x : mul(balancing_matrix(fan, xi.degree), w))
    if (x != 0) throw DomainError("weight is not balanced");
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += xi.coeffs[i] * w[i];
  return s;
}

CycleClass cycle_class(const Sheaf& sheaf, int p, const IntVector& w) {
  const Fan& fan = sheaf.fan();
  const Compactification& comp = sheaf.comp();
  if (p < 0 || p > fan.dim()) throw InputError("cycle dimension out of range");
  const auto& cones = fan.cones_of_dim(p);
  if (w.size() != cones.size()) throw InputError("weight length mismatch");
  GradedComplex c = build_complex(sheaf, Space::kCompactification, p, Variant::kHomology);
  CycleClass out;
  out.chain.assign(c.size(p), Integer(0));
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (w[i] == 0) continue;
    const FaceId f = comp.find_face(0, cones[i]);
    IntVector coords = sheaf.integral_coordinates(p, f, fan.orientation(0, cones[i]));
    const int off = c.offset(p, f);
    for (std::size_t j = 0; j < coords.size(); ++j)
      out.chain[static_cast<std::size_t>(off) + j] += w[i] * coords[j];
  }
  ClassSection section(c, p);
  if (!section.is_cycle(out.chain)) throw DomainError("weight is not balanced");
  out.coordinates = section.coordinates(out.chain);
  out.group = section.group();
  return out;
}

ChowClass psi(const CompCohomology& coh, const Cochain& a) {
  const Sheaf& sheaf = coh.sheaf();
  const Fan& fan = sheaf.fan();
  const Compactification& comp = sheaf.comp();
  if (a.p != a.q) throw InputError("psi needs a (p,p) cochain");
  Cochain da = coh.differential(a);
  for (const auto& x : da.values)
    if (x != 0) throw InputError("psi of a non-cocycle");
  ChowClass out = chow_zero(fan, a.p);
  const auto& cones = fan.cones_of_dim(a.p);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const FaceId f = comp.find_face(0, cones[i]);
    IntVector nu = sheaf.integral_coordinates(a.p, f, fan.orientation(0, cones[i]));
    RatVector v = coh.component(a, f);
    Rational s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * nu[j];
    out.coeffs[i] = s / Rational(fan.geometry(cones[i]).multiplicity);
  }
  return out;
}

namespace {

Cochain unit_cocycle(const CompCohomology& coh) {
  Cochain a = coh.zero(0, 0);
  for (auto& x : a.values) x = 1;
  return a;
}

Cochain ray_cocycle(const CompCohomology& coh, ConeId rho, Coefficients coeff) {
  const Sheaf& sheaf = coh.sheaf();
  const Fan& fan = sheaf.fan();
  const Compactification& comp = sheaf.comp();
  const int r = fan.cone(rho)[0];
  Cochain a = coh.zero(1, 1);
  for (std::size_t s = 0; s < fan.num_cones(); ++s) {
    const ConeId sp = static_cast<ConeId>(s);
    const Subset& rays = fan.cone(sp);
    if (std::binary_search(rays.begin(), rays.end(), r)) continue;
    const ConeId up = fan.join(sp, rho);
    if (up < 0) continue;
    const FaceId f = comp.find_face(sp, up);
    IntVector c = sheaf.integral_coordinates(1, f, mul(fan.ray(r), fan.geometry(sp).projection));
    const Integer g = content(c);
    IntVector prim(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) prim[i] = c[i] / g;
    IntMatrix w = complete_to_unimodular(prim);
    IntMatrix winv = unimodular_inverse(w);
    RatVector alpha(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) alpha[i] = Rational(winv(0, i)) / g;
    if (coeff == Coefficients::kZ && g != 1)
      throw DomainError("unit normal is not primitive in SF_1");
    coh.set_component(a, f, alpha);
  }
  Cochain da = coh.differential(a);
  Cochain b = coh.zero(1, 1);
  for (FaceId f : comp.faces_of_dim(2)) {
    const CompFace& face = comp.face(f);
    const Subset& tr = fan.cone(face.tau);
    if (std::binary_search(tr.begin(), tr.end(), r)) continue;
    const Subset& er = fan.cone(face.sigma);
    if (!std::binary_search(er.begin(), er.end(), r)) continue;
    RatVector target = coh.component(da, f);
    const ConeId lifted = fan.join(face.tau, rho);
    const FaceId g = comp.find_face(lifted, face.sigma);
    const std::size_t rg = sheaf.rank(1, g);
    if (rg == 0) {
      for (const auto& x : target) check_internal(x == 0, "correction term has no room");
      continue;
    }
    const IntMatrix& rmap = sheaf.restriction(1, g, f);
    auto beta = solve(to_rational(rmap), target);
    check_internal(beta.has_value(), "correction term is not in the image of restriction");
    if (coeff == Coefficients::kZ && !integral(*beta))
      throw DomainError("correction term is not integral");
    const int sign = comp.face_sign(g, f);
    RatVector cur = coh.component(b, g);
    for (std::size_t i = 0; i < rg; ++i) cur[i] += sign * (*beta)[i];
    coh.set_component(b, g, cur);
  }
  for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] -= b.values[i];
  for (const auto& x : coh.differential(a).values)
    check_internal(x == 0, "psi inverse of a ray is not a cocycle");
  return a;
}

}  // namespace

Cochain psi_inverse(const CompCohomology& coh, ConeId sigma, Coefficients coeff) {
  const Fan& fan = coh.sheaf().fan();
  if (coeff == Coefficients::kZ && !is_unimodular(fan).all)
    throw DomainError("integral psi inverse needs a unimodular fan");
  if (fan.cone_dim(sigma) == 0) return unit_cocycle(coh);
  Cochain out;
  bool first = true;
  for (int r : fan.cone(sigma)) {
    Cochain c = ray_cocycle(coh, fan.ray_cone(r), coeff);
    out = first ? c : coh.cup(out, c);
    first = false;
  }
  const Integer mult = fan.geometry(sigma).multiplicity;
  if (coeff == Coefficients::kQ && mult != 1)
    for (auto& x : out.values) x *= mult;
  return out;
}

}  // namespace tropfan
