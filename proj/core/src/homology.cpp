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

#include "tropfan/homology.hpp"

#include <algorithm>

namespace tropfan {

namespace {

RatVector apply_map(const IntMatrix& m, const RatVector& x) {
  if (m.cols() != x.size()) throw InputError("apply: shape mismatch");
  RatVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && x[j] != 0) y[i] += m(i, j) * x[j];
  return y;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void put_block(IntMatrix& target, std::size_t r0, std::size_t c0, const IntMatrix& block,
               int sign) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      target(r0 + i, c0 + j) += sign > 0 ? block(i, j) : Integer(-block(i, j));
}

struct Layout {
  std::vector<std::vector<BasisLabel>> labels;
  std::vector<std::map<FaceId, int>> offsets;
};

Layout layout(const Sheaf& sheaf, int p, const std::vector<std::vector<FaceId>>& faces) {
  Layout l;
  l.labels.resize(faces.size());
  l.offsets.resize(faces.size());
  for (std::size_t q = 0; q < faces.size(); ++q)
    for (FaceId f : faces[q]) {
      l.offsets[q][f] = static_cast<int>(l.labels[q].size());
      for (std::size_t i = 0; i < sheaf.rank(p, f); ++i)
        l.labels[q].push_back({f, static_cast<int>(i)});
    }
  return l;
}

}  // namespace

std::size_t GradedComplex::size(int q) const {
  if (q < 0 || q >= degrees()) return 0;
  return labels[q].size();
}

IntMatrix GradedComplex::out_map(int q) const {
  if (q < 0 || q >= degrees()) return IntMatrix(0, 0);
  return maps[q];
}

IntMatrix GradedComplex::in_map(int q) const {
  if (cohomological) {
    if (q <= 0) return IntMatrix(size(q), 0);
    return maps[q - 1];
  }
  if (q + 1 >= degrees()) return IntMatrix(size(q), 0);
  return maps[q + 1];
}

int GradedComplex::offset(int q, FaceId face) const {
  if (q < 0 || q >= degrees()) return -1;
  int running = 0;
  for (std::size_t i = 0; i < labels[q].size(); ++i) {
    if (labels[q][i].face == face && labels[q][i].index == 0) return running;
    ++running;
  }
  return -1;
}

GradedComplex build_complex(const Sheaf& sheaf, Space space, int p, Variant variant) {
  const Compactification& comp = sheaf.comp();
  const Fan& fan = sheaf.fan();
  const int d = comp.dim();
  const bool homological = variant == Variant::kHomology || variant == Variant::kBorelMoore;

  std::vector<std::vector<FaceId>> faces;
  bool same_sed_only = false;
  if (space == Space::kCompactification) {
    for (int q = 0; q <= d; ++q) faces.push_back(comp.faces_of_dim(q));
  } else if (variant == Variant::kCohomology || variant == Variant::kHomology) {
    faces.push_back({comp.find_face(0, 0)});
  } else {
    same_sed_only = true;
    for (int q = 0; q <= d; ++q) {
      std::vector<FaceId> fs;
      for (ConeId s : fan.cones_of_dim(q)) fs.push_back(comp.find_face(0, s));
      faces.push_back(fs);
    }
  }
  Layout l = layout(sheaf, p, faces);
  const int degs = static_cast<int>(faces.size());

  // Cochain differentials d_q : C^q -> C^{q+1}.
  std::vector<IntMatrix> d_maps;
  for (int q = 0; q < degs; ++q) {
    const std::size_t rows = q + 1 < degs ? l.labels[q + 1].size() : 0;
    IntMatrix m(rows, l.labels[q].size());
    if (q + 1 < degs)
      for (FaceId delta : faces[q + 1]) {
        const std::size_t r0 = static_cast<std::size_t>(l.offsets[q + 1].at(delta));
        for (const Cover& c : comp.covers(delta)) {
          if (same_sed_only && c.kind != CoverKind::kSameSedentarity) continue;
          auto it = l.offsets[q].find(c.gamma);
          if (it == l.offsets[q].end()) continue;
          put_block(m, r0, static_cast<std::size_t>(it->second),
                    sheaf.restriction(p, c.gamma, delta), c.sign);
        }
      }
    d_maps.push_back(std::move(m));
  }

  GradedComplex out;
  out.p = p;
  out.cohomological = !homological;
  out.labels = l.labels;
  if (!homological) {
    out.maps = std::move(d_maps);
  } else {
    out.maps.push_back(IntMatrix(0, l.labels[0].size()));
    for (int q = 1; q < degs; ++q) out.maps.push_back(d_maps[q - 1].transpose());
  }
  return out;
}

void check_complex(const GradedComplex& c) {
  for (int q = 0; q + 1 < c.degrees(); ++q) {
    IntMatrix a, b;
    if (c.cohomological) {
      a = c.maps[q];
      b = q + 1 < c.degrees() ? c.maps[q + 1] : IntMatrix(0, a.rows());
      if (b.cols() != a.rows() || a.rows() == 0) continue;
      if (!(b * a).is_zero()) throw InternalError("d o d != 0 in cochain complex");
    } else {
      a = c.maps[q + 1];
      b = c.maps[q];
      if (b.cols() != a.rows() || a.rows() == 0) continue;
      if (!(b * a).is_zero()) throw InternalError("boundary o boundary != 0");
    }
  }
}

std::vector<AbGroup> groups(const GradedComplex& c, Coefficients coeff) {
  check_complex(c);
  std::vector<AbGroup> out;
  for (int q = 0; q < c.degrees(); ++q) {
    std::vector<Integer> in_factors = invariant_factors(c.in_map(q));
    std::size_t out_rank = invariant_factors(c.out_map(q)).size();
    AbGroup g;
    g.free_rank = c.size(q) - out_rank - in_factors.size();
    if (coeff == Coefficients::kZ)
      for (auto& x : in_factors)
        if (x != 1) g.torsion.push_back(x);
    out.push_back(g);
  }
  return out;
}

ClassSection::ClassSection(const GradedComplex& c, int q) {
  ambient_ = c.size(q);
  out_ = c.out_map(q);
  if (out_.cols() != ambient_) out_ = IntMatrix(0, ambient_);
  kernel_ = kernel_basis(out_);
  IntMatrix in = c.in_map(q);
  IntMatrix relations(0, kernel_.rows());
  for (std::size_t j = 0; j < in.cols(); ++j) {
    auto coords = row_coordinates(kernel_, in.col_vector(j));
    check_internal(coords.has_value(), "boundary is not a cycle");
    relations.append_row(*coords);
  }
  coker_ = Cokernel(relations, kernel_.rows());
}

bool ClassSection::is_cycle(const IntVector& v) const {
  if (v.size() != ambient_) return false;
  for (const auto& x : mul(out_, v))
    if (x != 0) return false;
  return true;
}

IntVector ClassSection::coordinates(const IntVector& cycle) const {
  if (!is_cycle(cycle)) throw InputError("class coordinates of a non-cycle");
  auto k = row_coordinates(kernel_, cycle);
  check_internal(k.has_value(), "cycle outside kernel lattice");
  return coker_.coordinates(*k);
}

IntVector ClassSection::free_coordinates(const IntVector& cycle) const {
  IntVector all = coordinates(cycle);
  return IntVector(all.begin() + static_cast<long>(group().torsion.size()), all.end());
}

RatVector ClassSection::free_coordinates(const RatVector& cycle) const {
  Integer den = 1;
  for (const auto& x : cycle) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  IntVector scaled(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Rational s = cycle[i] * den;
    scaled[i] = s.get_num();
  }
  IntVector f = free_coordinates(scaled);
  RatVector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Rational(f[i]) / den;
  return out;
}

std::vector<IntVector> ClassSection::free_generators() const {
  std::vector<IntVector> out;
  for (const auto& g : coker_.free_generators()) out.push_back(mul(g, kernel_));
  return out;
}

std::vector<IntVector> ClassSection::torsion_generators() const {
  std::vector<IntVector> out;
  for (const auto& g : coker_.torsion_generators()) out.push_back(mul(g, kernel_));
  return out;
}

GradedComplex cubical_complex(const Sheaf& sheaf, int p, Coefficients coeff) {
  const Fan& fan = sheaf.fan();
  const Compactification& comp = sheaf.comp();
  if (coeff == Coefficients::kZ && !is_unimodular(fan).all)
    throw DomainError("integral cubical complex requires a unimodular fan");
  const int top = std::min(p, fan.dim());
  GradedComplex out;
  out.p = p;
  out.cohomological = true;
  std::vector<std::map<ConeId, int>> offsets;
  for (int q = 0; q <= top; ++q) {
    std::vector<BasisLabel> labels;
    std::map<ConeId, int> off;
    for (ConeId s : fan.cones_of_dim(q)) {
      FaceId f = comp.find_face(s, s);
      off[s] = static_cast<int>(labels.size());
      for (std::size_t i = 0; i < sheaf.rank(p - q, f); ++i)
        labels.push_back({f, static_cast<int>(i)});
    }
    out.labels.push_back(std::move(labels));
    offsets.push_back(std::move(off));
  }
  for (int q = 0; q <= top; ++q) {
    const std::size_t rows = q + 1 <= top ? out.labels[q + 1].size() : 0;
    IntMatrix m(rows, out.labels[q].size());
    if (q + 1 <= top) {
      const int k = p - q;
      for (ConeId tau : fan.cones_of_dim(q)) {
        const FaceId ft = comp.find_face(tau, tau);
        const std::size_t mt = sheaf.ambient(ft);
        for (ConeId sigma : fan.cofaces_codim1(tau)) {
          const FaceId fs = comp.find_face(sigma, sigma);
          const IntMatrix& target = sheaf.basis(k - 1, fs);
          if (target.rows() == 0 || sheaf.rank(k, ft) == 0) continue;
          IntMatrix quotient = fan.quotient_map(tau, sigma);
          // Integral section of N^tau -> N^sigma.
          IntMatrix section(0, mt);
          for (std::size_t i = 0; i < quotient.cols(); ++i) {
            IntVector unit(quotient.cols());
            unit[i] = 1;
            auto s = solve_integral(quotient.transpose(), unit);
            check_internal(s.has_value(), "quotient map is not surjective");
            section.append_row(*s);
          }
          section.set_cols_if_empty(mt);
          IntMatrix lift = compound(section, static_cast<std::size_t>(k - 1));
          IntVector e = fan.unit_normal(tau, sigma);
          const std::size_t r0 = static_cast<std::size_t>(offsets[q + 1].at(sigma));
          const std::size_t c0 = static_cast<std::size_t>(offsets[q].at(tau));
          for (std::size_t j = 0; j < target.rows(); ++j) {
            IntVector u = mul(target.row_vector(j), lift);
            IntVector w = wedge(e, 1, u, static_cast<std::size_t>(k - 1), mt);
            IntVector c = sheaf.integral_coordinates(k, ft, w);
            for (std::size_t i = 0; i < c.size(); ++i) m(r0 + j, c0 + i) += c[i];
          }
        }
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

GradedComplex DoubleComplex::row(const Sheaf& sheaf, ConeId tau) const {
  const Compactification& comp = sheaf.comp();
  const Fan& fan = sheaf.fan();
  std::vector<std::vector<FaceId>> faces(static_cast<std::size_t>(fan.dim() - fan.cone_dim(tau) + 1));
  for (ConeId s : fan.star(tau))
    faces[static_cast<std::size_t>(fan.cone_dim(s) - fan.cone_dim(tau))].push_back(
        comp.find_face(tau, s));
  for (auto& fs : faces) std::sort(fs.begin(), fs.end());
  Layout l = layout(sheaf, p, faces);
  GradedComplex out;
  out.p = p;
  out.cohomological = true;
  out.labels = l.labels;
  const int degs = static_cast<int>(faces.size());
  for (int q = 0; q < degs; ++q) {
    const std::size_t rows = q + 1 < degs ? l.labels[q + 1].size() : 0;
    IntMatrix m(rows, l.labels[q].size());
    if (q + 1 < degs)
      for (FaceId delta : faces[q + 1])
        for (const Cover& c : comp.covers(delta)) {
          if (c.kind != CoverKind::kSameSedentarity) continue;
          put_block(m, static_cast<std::size_t>(l.offsets[q + 1].at(delta)),
                    static_cast<std::size_t>(l.offsets[q].at(c.gamma)),
                    sheaf.restriction(p, c.gamma, delta), c.sign);
        }
    out.maps.push_back(std::move(m));
  }
  return out;
}

DoubleComplex fine_double_complex(const Sheaf& sheaf, int p) {
  const Compactification& comp = sheaf.comp();
  const Fan& fan = sheaf.fan();
  const int d = comp.dim();
  DoubleComplex dc;
  dc.p = p;
  dc.dim = d;
  for (std::size_t f = 0; f < comp.num_faces(); ++f) {
    const CompFace& face = comp.face(static_cast<FaceId>(f));
    dc.cells[{fan.cone_dim(face.sigma), -fan.cone_dim(face.tau)}].push_back(
        static_cast<FaceId>(f));
  }

  std::vector<std::vector<FaceId>> faces;
  for (int q = 0; q <= d; ++q) faces.push_back(comp.faces_of_dim(q));
  Layout l = layout(sheaf, p, faces);

  // Star-fan data per sedentarity, for the horizontal pieces.
  struct StarData {
    StarFan star;
    std::unique_ptr<Compactification> comp;
    std::unique_ptr<Sheaf> sheaf;
    std::map<ConeId, ConeId> to_star;
  };
  std::vector<StarData> stars(fan.num_cones());
  for (std::size_t t = 0; t < fan.num_cones(); ++t) {
    StarData& sd = stars[t];
    sd.star = star_fan(fan, static_cast<ConeId>(t));
    sd.comp = std::make_unique<Compactification>(*sd.star.fan);
    sd.sheaf = std::make_unique<Sheaf>(*sd.comp);
    for (std::size_t sc = 0; sc < sd.star.cone_source.size(); ++sc)
      sd.to_star[sd.star.cone_source[sc]] = static_cast<ConeId>(sc);
  }

  for (int q = 0; q <= d; ++q) {
    const std::size_t rows = q < d ? l.labels[q + 1].size() : 0;
    IntMatrix h(rows, l.labels[q].size()), v(rows, l.labels[q].size());
    if (q < d)
      for (FaceId delta : faces[q + 1]) {
        const CompFace& fd = comp.face(delta);
        const std::size_t r0 = static_cast<std::size_t>(l.offsets[q + 1].at(delta));
        // Horizontal: (tau, sigma') -> (tau, sigma), computed on the star fan.
        const StarData& sd = stars[fd.tau];
        const ConeId s_big = sd.to_star.at(fd.sigma);
        const FaceId star_delta = sd.comp->find_face(0, s_big);
        for (ConeId s2 : fan.faces_codim1(fd.sigma)) {
          if (!fan.contains(s2, fd.tau)) continue;
          const FaceId gamma = comp.find_face(fd.tau, s2);
          const FaceId star_gamma = sd.comp->find_face(0, sd.to_star.at(s2));
          const int sign = sd.comp->face_sign(star_gamma, star_delta);
          const IntMatrix& block = sd.sheaf->restriction(p, star_gamma, star_delta);
          check_internal(sd.sheaf->basis(p, star_delta) == sheaf.basis(p, delta),
                         "star-fan coefficient lattice mismatch");
          put_block(h, r0, static_cast<std::size_t>(l.offsets[q].at(gamma)), block, sign);
        }
        // Vertical: (tau' + r, sigma) -> (tau', sigma), sign from ray positions.
        for (ConeId t2 : fan.cofaces_codim1(fd.tau)) {
          if (!fan.contains(fd.sigma, t2)) continue;
          const FaceId gamma = comp.find_face(t2, fd.sigma);
          const int r = fan.cone(fan.complement(t2, fd.tau))[0];
          const Subset& rest = fan.cone(fan.complement(fd.sigma, fd.tau));
          const auto pos = std::find(rest.begin(), rest.end(), r) - rest.begin();
          const int sign = pos % 2 == 0 ? -1 : 1;
          put_block(v, r0, static_cast<std::size_t>(l.offsets[q].at(gamma)),
                    sheaf.restriction(p, gamma, delta), sign);
        }
      }
    dc.horizontal.push_back(h);
    dc.vertical.push_back(v);
  }

  dc.total.p = p;
  dc.total.cohomological = true;
  dc.total.labels = l.labels;
  for (int q = 0; q <= d; ++q) dc.total.maps.push_back(dc.horizontal[q] + dc.vertical[q]);

  GradedComplex cellular = build_complex(sheaf, Space::kCompactification, p, Variant::kCohomology);
  for (int q = 0; q <= d; ++q)
    if (!(cellular.maps[q] == dc.total.maps[q]))
      throw InternalError("total complex of the fine double complex differs from the cellular complex");
  check_complex(dc.total);
  return dc;
}

CompCohomology::CompCohomology(const Sheaf& sheaf) : sheaf_(&sheaf) {
  for (std::size_t p = 0; p <= sheaf.fan().rank(); ++p)
    complexes_.push_back(build_complex(sheaf, Space::kCompactification, static_cast<int>(p),
                                       Variant::kCohomology));
}

const GradedComplex& CompCohomology::complex(int p) const {
  if (p < 0 || p > max_p()) throw InputError("cohomology degree out of range");
  return complexes_[p];
}

const ClassSection& CompCohomology::section(int p, int q) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = sections_[{p, q}];
  if (!slot) slot = std::make_unique<ClassSection>(complex(p), q);
  return *slot;
}

Cochain CompCohomology::zero(int p, int q) const {
  Cochain c;
  c.p = p;
  c.q = q;
  if (p >= 0 && p <= max_p()) c.values.assign(complex(p).size(q), Rational(0));
  return c;
}

RatVector CompCohomology::component(const Cochain& a, FaceId f) const {
  const std::size_t r = sheaf_->rank(a.p, f);
  if (r == 0 || a.values.empty()) return RatVector(r);
  const int off = complex(a.p).offset(a.q, f);
  if (off < 0) throw InputError("component: face not in this degree");
  return RatVector(a.values.begin() + off, a.values.begin() + off + static_cast<long>(r));
}

void CompCohomology::set_component(Cochain& a, FaceId f, const RatVector& v) const {
  const std::size_t r = sheaf_->rank(a.p, f);
  if (v.size() != r) throw InputError("set_component: wrong length");
  if (r == 0) return;
  const int off = complex(a.p).offset(a.q, f);
  if (off < 0) throw InputError("set_component: face not in this degree");
  std::copy(v.begin(), v.end(), a.values.begin() + off);
}

Cochain CompCohomology::differential(const Cochain& a) const {
  Cochain out = zero(a.p, a.q + 1);
  if (a.p > max_p() || a.q + 1 >= complex(a.p).degrees()) return out;
  out.values = apply_map(complex(a.p).maps[a.q], a.values);
  return out;
}

Rational CompCohomology::cup_coefficient(ConeId tau, ConeId sigma, ConeId eta) const {
  const Fan& fan = sheaf_->fan();
  const std::size_t m = fan.rank() - static_cast<std::size_t>(fan.cone_dim(tau));
  ConeId outer = fan.complement(eta, sigma);
  Subset joined = fan.cone(tau);
  for (int r : fan.cone(outer)) joined.push_back(r);
  ConeId lifted = fan.find_cone(joined);
  check_internal(lifted >= 0, "cup coefficient: missing cone");
  IntVector w = wedge(fan.orientation(tau, sigma),
                      static_cast<std::size_t>(fan.cone_dim(sigma) - fan.cone_dim(tau)),
                      fan.orientation(tau, lifted),
                      static_cast<std::size_t>(fan.cone_dim(eta) - fan.cone_dim(sigma)), m);
  return wedge_ratio(w, fan.orientation(tau, eta));
}

Cochain CompCohomology::cup(const Cochain& a, const Cochain& b) const {
  const Compactification& comp = sheaf_->comp();
  const Fan& fan = sheaf_->fan();
  const int p = a.p + b.p, q = a.q + b.q;
  Cochain out = zero(p, q);
  if (p > max_p() || q > comp.dim()) return out;
  for (FaceId f : comp.faces_of_dim(q)) {
    const CompFace& face = comp.face(f);
    const std::size_t rf = sheaf_->rank(p, f);
    if (rf == 0) continue;
    const std::size_t m = sheaf_->ambient(f);
    RatVector sum(rf);
    for (ConeId sigma : fan.star(face.tau)) {
      if (fan.cone_dim(sigma) - fan.cone_dim(face.tau) != a.q) continue;
      if (!fan.contains(face.sigma, sigma)) continue;
      const FaceId fa = comp.find_face(face.tau, sigma);
      const FaceId fb = comp.find_face(sigma, face.sigma);
      RatVector av = component(a, fa);
      RatVector bv = component(b, fb);
      if (is_zero(av) || is_zero(bv)) continue;
      RatVector ia = apply_map(sheaf_->restriction(a.p, fa, f), av);
      RatVector pb = apply_map(sheaf_->restriction(b.p, fb, f), bv);
      RatVector wa = sheaf_->extend_form(a.p, f, ia);
      RatVector wb = sheaf_->extend_form(b.p, f, pb);
      RatVector prod = wedge(wa, static_cast<std::size_t>(a.p), wb,
                             static_cast<std::size_t>(b.p), m);
      RatVector val = sheaf_->restrict_form(p, f, prod);
      Rational coef = cup_coefficient(face.tau, sigma, face.sigma);
      for (std::size_t i = 0; i < rf; ++i) sum[i] += coef * val[i];
    }
    set_component(out, f, sum);
  }
  return out;
}

IntVector fundamental_cycle(const Sheaf& sheaf, const Weights& w) {
  const Fan& fan = sheaf.fan();
  const Compactification& comp = sheaf.comp();
  if (!fan.is_pure()) throw DomainError("fundamental cycle of a non-pure fan");
  if (w.size() != fan.facets().size()) throw InputError("weights do not match facets");
  const int d = fan.dim();
  GradedComplex bm = build_complex(sheaf, Space::kFan, d, Variant::kBorelMoore);
  IntVector chain(bm.size(d));
  for (ConeId eta : fan.facets()) {
    const FaceId f = comp.find_face(0, eta);
    IntVector nu = fan.orientation(0, eta);
    IntVector c = sheaf.integral_coordinates(d, f, nu);
    const int off = bm.offset(d, f);
    for (std::size_t i = 0; i < c.size(); ++i)
      chain[static_cast<std::size_t>(off) + i] += w[fan.facet_position(eta)] * c[i];
  }
  for (const auto& x : mul(bm.out_map(d), chain))
    if (x != 0) throw DomainError("weights are not balanced");
  return chain;
}

RatVector cap(const Sheaf& sheaf, const Weights& w, int k, const RatVector& alpha) {
  const Fan& fan = sheaf.fan();
  const Compactification& comp = sheaf.comp();
  const int d = fan.dim();
  if (k < 0 || k > d) throw InputError("cap: degree out of range");
  fundamental_cycle(sheaf, w);  // validates balancing
  const FaceId origin = comp.find_face(0, 0);
  RatVector full = sheaf.extend_form(k, origin, alpha);
  GradedComplex bm = build_complex(sheaf, Space::kFan, d - k, Variant::kBorelMoore);
  RatVector chain(bm.size(d));
  for (ConeId eta : fan.facets()) {
    const FaceId f = comp.find_face(0, eta);
    IntVector nu = fan.orientation(0, eta);
    RatVector v(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) v[i] = w[fan.facet_position(eta)] * nu[i];
    RatVector contracted = contract_vector(v, static_cast<std::size_t>(d), full,
                                           static_cast<std::size_t>(k), fan.rank());
    auto c = sheaf.coordinates(d - k, f, contracted);
    check_internal(c.has_value(), "cap leaves SF");
    const int off = bm.offset(d, f);
    if (off < 0) continue;
    for (std::size_t i = 0; i < c->size(); ++i) chain[static_cast<std::size_t>(off) + i] = (*c)[i];
  }
  return chain;
}

}  // namespace tropfan
