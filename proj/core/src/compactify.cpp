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

#include "tropfan/compactify.hpp"

#include <algorithm>

namespace tropfan {

Rational wedge_ratio(const IntVector& w, const IntVector& v) {
  if (w.size() != v.size()) throw InputError("wedge_ratio: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational r(w[i], v[i]);
    r.canonicalize();
    for (std::size_t j = 0; j < v.size(); ++j)
      check_internal(Rational(w[j]) == r * v[j], "wedge_ratio: multivectors not proportional");
    return r;
  }
  throw InternalError("wedge_ratio: zero reference multivector");
}

int wedge_ratio_sign(const IntVector& w, const IntVector& v) {
  Rational r = wedge_ratio(w, v);
  check_internal(r != 0, "wedge_ratio_sign: degenerate orientation");
  return r > 0 ? 1 : -1;
}

Compactification::Compactification(const Fan& fan) : fan_(&fan) {
  const std::size_t nc = fan.num_cones();
  for (std::size_t s = 0; s < nc; ++s)
    for (ConeId t = 0; t < static_cast<ConeId>(nc); ++t)
      if (fan.contains(static_cast<ConeId>(s), t))
        faces_.push_back({t, static_cast<ConeId>(s),
                          fan.cone_dim(static_cast<ConeId>(s)) - fan.cone_dim(t)});
  std::stable_sort(faces_.begin(), faces_.end(), [](const CompFace& a, const CompFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.sigma < b.sigma;
  });
  index_.assign(nc, std::vector<FaceId>(nc, -1));
  by_dim_.assign(fan.dim() + 1, {});
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    index_[faces_[f].tau][faces_[f].sigma] = static_cast<FaceId>(f);
    by_dim_[faces_[f].dim].push_back(static_cast<FaceId>(f));
  }

  covers_.assign(faces_.size(), {});
  cofaces_.assign(faces_.size(), {});
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const CompFace& d = faces_[f];
    // Same sedentarity: drop a ray of sigma not in tau.
    for (ConeId s2 : fan.faces_codim1(d.sigma)) {
      if (!fan.contains(s2, d.tau)) continue;
      FaceId g = index_[d.tau][s2];
      int ray = fan.cone(fan.complement(d.sigma, s2))[0];
      covers_[f].push_back({g, 0, CoverKind::kSameSedentarity, ray});
    }
    // Sedentarity drop: add a ray of sigma to tau.
    for (ConeId t2 : fan.cofaces_codim1(d.tau)) {
      if (!fan.contains(d.sigma, t2)) continue;
      FaceId g = index_[t2][d.sigma];
      int ray = fan.cone(fan.complement(t2, d.tau))[0];
      covers_[f].push_back({g, 0, CoverKind::kSedentarityDrop, ray});
    }
    for (auto& c : covers_[f]) {
      c.sign = compute_sign(faces_[c.gamma], d, c.kind);
      cofaces_[c.gamma].push_back(static_cast<FaceId>(f));
    }
    std::sort(covers_[f].begin(), covers_[f].end(),
              [](const Cover& a, const Cover& b) { return a.gamma < b.gamma; });
  }
  for (auto& v : cofaces_) std::sort(v.begin(), v.end());
}

int Compactification::compute_sign(const CompFace& gamma, const CompFace& delta,
                                   CoverKind kind) const {
  const Fan& fan = *fan_;
  if (kind == CoverKind::kSameSedentarity) {
    // sign of varpi_delta(n_{delta/gamma} ^ nu_gamma), all in N^tau.
    const ConeId tau = delta.tau;
    IntVector normal = mul(fan.unit_normal_lift(gamma.sigma, delta.sigma),
                           fan.geometry(tau).projection);
    const std::size_t m = fan.rank() - static_cast<std::size_t>(fan.cone_dim(tau));
    IntVector nu_gamma = fan.orientation(tau, gamma.sigma);
    IntVector w = wedge(normal, 1, nu_gamma, static_cast<std::size_t>(gamma.dim), m);
    return wedge_ratio_sign(w, fan.orientation(tau, delta.sigma));
  }
  // gamma = (tau, sigma), delta = (tau', sigma) with tau' a facet of tau.
  const ConeId tau = gamma.tau, tau_p = delta.tau, sigma = delta.sigma;
  const std::size_t m_p = fan.rank() - static_cast<std::size_t>(fan.cone_dim(tau_p));
  IntMatrix q = fan.quotient_map(tau_p, tau);
  // Lift the vectors spanning nu_gamma through N^tau' -> N^tau.
  ConeId c = fan.complement(sigma, tau);
  IntMatrix images = fan.geometry(c).basis * fan.geometry(tau).projection;
  IntMatrix lifts(0, m_p);
  for (std::size_t i = 0; i < images.rows(); ++i) {
    auto l = solve_integral(q.transpose(), images.row_vector(i));
    check_internal(l.has_value(), "sedentarity sign: no lift");
    lifts.append_row(*l);
  }
  IntVector nu_lift = wedge_rows(lifts);
  IntVector e = fan.unit_normal(tau_p, tau);
  IntVector w = wedge(e, 1, nu_lift, images.rows(), m_p);
  return -wedge_ratio_sign(w, fan.orientation(tau_p, sigma));
}

FaceId Compactification::find_face(ConeId tau, ConeId sigma) const {
  if (tau < 0 || sigma < 0 || static_cast<std::size_t>(tau) >= index_.size() ||
      static_cast<std::size_t>(sigma) >= index_.size())
    return -1;
  return index_[tau][sigma];
}

const std::vector<FaceId>& Compactification::faces_of_dim(int q) const {
  static const std::vector<FaceId> empty;
  if (q < 0 || q >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[q];
}

int Compactification::face_sign(FaceId gamma, FaceId delta) const {
  for (const auto& c : covers_[delta])
    if (c.gamma == gamma) return c.sign;
  throw InputError("face_sign: faces do not form a covering pair");
}

bool Compactification::is_face_of(FaceId gamma, FaceId delta) const {
  const CompFace& g = faces_[gamma];
  const CompFace& d = faces_[delta];
  return fan_->contains(g.tau, d.tau) && fan_->contains(d.sigma, g.sigma);
}

IntMatrix Compactification::tangent_lattice(FaceId f) const {
  return fan_->image_lattice(faces_[f].tau, faces_[f].sigma);
}

}  // namespace tropfan
