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

#include "tropfan/criteria.hpp"

#include <algorithm>
#include <set>

namespace tropfan {

namespace {

bool is_trivial(const AbGroup& g) { return g.free_rank == 0 && g.torsion.empty(); }

IntVector integral_values(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    check_internal(v[i].get_den() == 1, "integral cochain expected");
    out[i] = v[i].get_num();
  }
  return out;
}

std::string cone_label(const Fan& fan, ConeId c) {
  std::string s = "{";
  for (std::size_t i = 0; i < fan.cone(c).size(); ++i)
    s += (i ? "," : "") + std::to_string(fan.cone(c)[i]);
  return s + "}";
}

// Linear form agreeing with f on the rays of sigma.
RatVector local_linear(const Fan& fan, ConeId sigma, const ConewiseLinear& f) {
  const Subset& rays = fan.cone(sigma);
  if (rays.empty()) return RatVector(fan.rank());
  RatVector target(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) target[i] = f[rays[i]];
  auto m = solve(to_rational(fan.geometry(sigma).ray_matrix), target);
  check_internal(m.has_value(), "simplicial cone rays are independent");
  return *m;
}

Rational dot(const RatVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kNotApplicable:
      return "not-applicable";
  }
  return "";
}

MapAnalysis psi_inverse_map(const CompCohomology& coh, int p, Coefficients coeff) {
  const Fan& fan = coh.sheaf().fan();
  MapAnalysis out;
  out.coeff = coeff;
  ChowPresentation pres = chow_group(fan, p, coeff);
  const ClassSection& section = coh.section(p, p);
  const AbGroup& h = section.group();
  const std::size_t g = pres.generators.size();

  if (coeff == Coefficients::kQ) {
    RatMatrix phi(0, h.free_rank);
    for (ConeId s : pres.generators) {
      Cochain a = psi_inverse(coh, s, coeff);
      phi.append_row(section.free_coordinates(a.values));
    }
    out.well_defined = true;
    for (std::size_t i = 0; i < pres.relations.rows(); ++i)
      for (const auto& x : mul(to_rational(pres.relations.row_vector(i)), phi))
        if (x != 0) out.well_defined = false;
    const std::size_t r = g == 0 ? 0 : rank(phi);
    out.kernel.free_rank = pres.group.free_rank - r;
    out.cokernel.free_rank = h.free_rank - r;
    return out;
  }

  const std::size_t t = h.torsion.size();
  const std::size_t hc = t + h.free_rank;
  IntMatrix phi(0, hc);
  for (ConeId s : pres.generators) {
    Cochain a = psi_inverse(coh, s, coeff);
    phi.append_row(section.coordinates(integral_values(a.values)));
  }
  IntMatrix torsion_rows(t, hc);
  for (std::size_t i = 0; i < t; ++i) torsion_rows(i, i) = h.torsion[i];

  out.well_defined = true;
  for (std::size_t i = 0; i < pres.relations.rows(); ++i) {
    IntVector v = g == 0 ? IntVector(hc) : mul(pres.relations.row_vector(i), phi);
    for (std::size_t j = 0; j < hc; ++j)
      if (j < t ? v[j] % h.torsion[j] != 0 : v[j] != 0) out.well_defined = false;
  }

  if (hc > 0) {
    IntMatrix image = phi;
    for (std::size_t i = 0; i < t; ++i) image.append_row(torsion_rows.row_vector(i));
    out.cokernel = cokernel_group(image);
  }

  // Kernel: x with x phi in the span of the torsion rows, modulo relations.
  IntMatrix stacked = phi;
  for (std::size_t i = 0; i < t; ++i) {
    IntVector row = torsion_rows.row_vector(i);
    for (auto& x : row) x = -x;
    stacked.append_row(row);
  }
  IntMatrix z = kernel_basis(stacked.transpose());
  IntMatrix k(0, g);
  for (std::size_t i = 0; i < z.rows(); ++i) {
    IntVector row(z.row(i).begin(), z.row(i).begin() + static_cast<long>(g));
    bool zero = std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
    if (!zero) k.append_row(row);
  }
  if (k.rows() > 0 && out.well_defined) out.kernel = lattice_quotient(k, pres.relations);
  return out;
}

Theorem1Report theorem1_report(const Fan& fan) {
  Compactification comp(fan);
  Sheaf sheaf(comp);
  CompCohomology coh(sheaf);
  Theorem1Report rep;
  rep.unimodular = is_unimodular(fan).all;
  rep.saturated = is_saturated(fan);
  const int d = fan.dim();
  for (int p = 0; p <= d; ++p) {
    auto g = groups(coh.complex(p), Coefficients::kZ);
    rep.cohomology.push_back(g);
    for (int q = 0; q < static_cast<int>(g.size()); ++q)
      if ((p < q || (q == 0 && p > 0)) && !is_trivial(g[q])) rep.vanishing_failures.push_back({p, q});
  }
  const Coefficients ring = rep.unimodular ? Coefficients::kZ : Coefficients::kQ;
  for (int p = 0; p <= d; ++p) {
    const Coefficients cc = rep.unimodular || p <= 1 ? Coefficients::kZ : Coefficients::kQ;
    rep.chow.push_back(chow_group(fan, p, cc).group);
    rep.chow_coeff.push_back(cc);
    std::optional<MapAnalysis> z;
    if (rep.unimodular) z = psi_inverse_map(coh, p, Coefficients::kZ);
    MapAnalysis q = psi_inverse_map(coh, p, Coefficients::kQ);
    std::string status;
    if (z) {
      if (z->well_defined && z->surjective() && z->injective())
        status = "iso";
      else if (z->well_defined && z->surjective() && z->kernel.free_rank == 0 &&
               z->kernel.torsion == rep.chow[p].torsion)
        status = "surjective, kernel = torsion";
      else
        status = "not an iso over Z";
    }
    const bool q_iso = q.well_defined && q.surjective() && q.injective();
    if (status != "iso") {
      if (!status.empty()) status += "; ";
      status += q_iso ? "Q-iso" : "not an iso over Q";
    }
    rep.psi_z.push_back(z);
    rep.psi_q.push_back(q);
    rep.psi_status.push_back(status);

    ChowPresentation pres = chow_group(fan, p, ring);
    for (ConeId s : fan.cones_of_dim(p)) {
      ++rep.round_trip_checks;
      if (!chow_equal(pres, psi(coh, psi_inverse(coh, s, ring)), chow_generator(fan, s)))
        ++rep.round_trip_failures;
    }
  }
  for (int k1 = 1; k1 <= d; ++k1)
    for (int k2 = 1; k1 + k2 <= d; ++k2) {
      ChowPresentation pres = chow_group(fan, k1 + k2, ring);
      for (ConeId a : fan.cones_of_dim(k1))
        for (ConeId b : fan.cones_of_dim(k2)) {
          ++rep.ring_checks;
          Cochain prod = coh.cup(psi_inverse(coh, a, ring), psi_inverse(coh, b, ring));
          ChowClass expected =
              chow_multiply(fan, chow_generator(fan, a), chow_generator(fan, b), ring);
          if (!chow_equal(pres, psi(coh, prod), expected)) ++rep.ring_failures;
        }
    }
  return rep;
}

PdReport chow_pd_check(const Fan& fan, const Weights& omega, Coefficients coeff) {
  PdReport rep;
  if (omega.size() != fan.facets().size()) throw InputError("weights do not match facets");
  if (!fan.is_pure()) {
    rep.reason = "fan is not pure";
    return rep;
  }
  if (!is_balanced(fan, omega)) {
    rep.reason = "weights are not balanced";
    return rep;
  }
  if (coeff == Coefficients::kZ && !is_unimodular(fan).all) {
    rep.reason = "fan is not unimodular";
    return rep;
  }
  const int d = fan.dim();
  std::vector<ChowPresentation> pres;
  for (int k = 0; k <= d; ++k) {
    pres.push_back(chow_group(fan, k, coeff));
    rep.chow.push_back(pres.back().group);
  }
  rep.verdict = Verdict::kTrue;
  for (int k = 0; k <= d; ++k)
    if (!rep.chow[k].torsion.empty()) {
      rep.verdict = Verdict::kFalse;
      rep.reason = "A^" + std::to_string(k) + " has torsion " + rep.chow[k].to_string();
      return rep;
    }
  if (rep.chow[d].free_rank != 1) {
    rep.verdict = Verdict::kFalse;
    rep.reason = "A^" + std::to_string(d) + " = " + rep.chow[d].to_string() + " is not Z";
    return rep;
  }
  auto classes = [&](int k) {
    std::vector<ChowClass> out;
    for (const auto& g : pres[k].section.free_generators()) {
      ChowClass c;
      c.degree = k;
      c.coeffs = to_rational(g);
      out.push_back(c);
    }
    return out;
  };
  const Rational top = degree_map(fan, omega, classes(d)[0]);
  if (coeff == Coefficients::kZ ? abs(top) != 1 : top == 0) {
    rep.verdict = Verdict::kFalse;
    rep.reason = "degree of the generator of A^" + std::to_string(d) + " is " + top.get_str();
    return rep;
  }
  for (int k = 0; k <= d; ++k) {
    auto left = classes(k);
    auto right = classes(d - k);
    if (left.size() != right.size()) {
      rep.gram_determinants.push_back(0);
      rep.verdict = Verdict::kFalse;
      rep.reason = "ranks of A^" + std::to_string(k) + " and A^" + std::to_string(d - k) + " differ";
      continue;
    }
    IntMatrix gram(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) {
        Rational v = degree_map(fan, omega, chow_multiply(fan, left[i], right[j], coeff));
        check_internal(v.get_den() == 1, "degree of an integral class is integral");
        gram(i, j) = v.get_num();
      }
    Integer det = left.empty() ? Integer(1) : Integer(abs(determinant(gram)));
    rep.gram_determinants.push_back(det);
    const bool bad = coeff == Coefficients::kZ ? det != 1 : det == 0;
    if (bad && rep.verdict == Verdict::kTrue) {
      rep.verdict = Verdict::kFalse;
      rep.reason = "pairing A^" + std::to_string(k) + " x A^" + std::to_string(d - k) +
                   " has index " + det.get_str();
    }
  }
  return rep;
}

ManifoldReport homology_manifold_check(const Fan& fan, const Weights& omega,
                                       Coefficients coeff) {
  ManifoldReport rep;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const ConeId sigma = static_cast<ConeId>(c);
    FaceManifoldReport face;
    face.cone = sigma;
    StarFan st = star_fan(fan, sigma, omega);
    PdReport pd = chow_pd_check(*st.fan, *st.weights, coeff);
    face.pd = pd.verdict;
    if (pd.verdict != Verdict::kTrue) face.witness = "PD " + to_string(pd.verdict) + ": " + pd.reason;
    Compactification comp(*st.fan);
    Sheaf sheaf(comp);
    for (int p = 0; p <= st.fan->dim(); ++p) {
      auto g = groups(build_complex(sheaf, Space::kCompactification, p, Variant::kCohomology), coeff);
      for (int q = 0; q < p && q < static_cast<int>(g.size()); ++q)
        if (!is_trivial(g[q])) {
          face.vanishing = false;
          if (!face.witness.empty()) face.witness += "; ";
          face.witness += "H^{" + std::to_string(p) + "," + std::to_string(q) + "} = " +
                          g[q].to_string() + " at star of " + cone_label(fan, sigma);
        }
    }
    if (face.pd != Verdict::kTrue || !face.vanishing) rep.holds = false;
    rep.faces.push_back(face);
  }
  return rep;
}

RatVector pd_map(const CompCohomology& coh, const Weights& omega, const Cochain& a) {
  const Sheaf& sheaf = coh.sheaf();
  const Fan& fan = sheaf.fan();
  const Compactification& comp = sheaf.comp();
  if (a.p != a.q) throw InputError("pd_map needs a (p,p) cochain");
  if (!is_balanced(fan, omega)) throw DomainError("weights are not balanced");
  const int d = fan.dim();
  const int dim = d - a.p;
  if (dim < 0) throw InputError("pd_map: degree exceeds the dimension");
  const auto& cones = fan.cones_of_dim(dim);
  RatVector w(cones.size());
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (ConeId eta : fan.star(cones[i])) {
      if (!fan.is_maximal(eta) || fan.cone_dim(eta) != d) continue;
      const FaceId f = comp.find_face(cones[i], eta);
      IntVector nu = sheaf.integral_coordinates(a.p, f, fan.orientation(cones[i], eta));
      RatVector v = coh.component(a, f);
      Rational s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * nu[j];
      w[i] += s * omega[fan.facet_position(eta)];
    }
  for (const auto& x : mul(to_rational(balancing_matrix(fan, dim)), w))
    if (x != 0) throw DomainError("pd_map produced an unbalanced weight");
  return w;
}

AmpleReport is_ample(const Fan& fan, const ConewiseLinear& f) {
  if (f.size() != fan.num_rays()) throw InputError("function values do not match rays");
  const std::size_t n = fan.rank();
  AmpleReport rep;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const ConeId sigma = static_cast<ConeId>(c);
    const Subset& own = fan.cone(sigma);
    RatMatrix eqs(0, n + 1), strict(0, n + 1);
    auto row = [&](int r) {
      RatVector v(n + 1);
      for (std::size_t i = 0; i < n; ++i) v[i] = -fan.ray(r)[i];
      v[n] = f[r];
      return v;
    };
    for (int r : own) eqs.append_row(row(r));
    std::set<int> others;
    for (ConeId eta : fan.star(sigma))
      for (int r : fan.cone(eta))
        if (!std::binary_search(own.begin(), own.end(), r)) others.insert(r);
    for (int r : others) strict.append_row(row(r));
    RatVector t(n + 1);
    t[n] = 1;
    strict.append_row(t);
    const bool ok = strict_lp_feasible(eqs, strict).feasible;
    rep.per_cone.push_back(ok);
    if (!ok) rep.holds = false;
  }
  return rep;
}

KleimanReport kleiman_check(const Fan& fan, const ConewiseLinear& f) {
  if (f.size() != fan.num_rays()) throw InputError("function values do not match rays");
  KleimanReport rep;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const ConeId sigma = static_cast<ConeId>(c);
    const auto& up = fan.cofaces_codim1(sigma);
    if (up.empty()) {
      rep.per_cone.push_back(Verdict::kNotApplicable);
      rep.minima.push_back(std::nullopt);
      continue;
    }
    const std::size_t k = up.size();
    const std::size_t m = fan.rank() - static_cast<std::size_t>(fan.cone_dim(sigma));
    RatVector lambda = local_linear(fan, sigma, f);
    RatVector objective(k);
    std::vector<IntVector> normals;
    for (std::size_t i = 0; i < k; ++i) {
      const int z = fan.cone(fan.complement(up[i], sigma))[0];
      IntVector e = fan.unit_normal(sigma, up[i]);
      IntVector image = mul(fan.ray(z), fan.geometry(sigma).projection);
      std::size_t j = 0;
      while (e[j] == 0) ++j;
      const Rational ratio = Rational(image[j]) / Rational(e[j]);
      objective[i] = (f[z] - dot(lambda, fan.ray(z))) / ratio;
      normals.push_back(e);
    }
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < k; ++i) {
      LinearConstraint lc;
      lc.coeffs.assign(k, Rational(0));
      lc.coeffs[i] = 1;
      lc.relation = Relation::kGreaterEqual;
      cons.push_back(lc);
    }
    LinearConstraint total;
    total.coeffs.assign(k, Rational(1));
    total.constant = -1;
    total.relation = Relation::kEqual;
    cons.push_back(total);
    for (std::size_t j = 0; j < m; ++j) {
      LinearConstraint lc;
      lc.coeffs.resize(k);
      for (std::size_t i = 0; i < k; ++i) lc.coeffs[i] = normals[i][j];
      lc.relation = Relation::kEqual;
      cons.push_back(lc);
    }
    LpMinimum res = lp_minimize(objective, cons, k);
    if (res.status == LpStatus::kInfeasible) {
      rep.per_cone.push_back(Verdict::kNotApplicable);
      rep.minima.push_back(std::nullopt);
      continue;
    }
    check_internal(res.status == LpStatus::kOptimal, "bounded polytope has an optimum");
    rep.minima.push_back(res.value);
    const bool ok = res.value > 0;
    rep.per_cone.push_back(ok ? Verdict::kTrue : Verdict::kFalse);
    if (!ok) rep.holds = false;
  }
  return rep;
}

}  // namespace tropfan
