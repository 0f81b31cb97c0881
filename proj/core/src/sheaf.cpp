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

#include "tropfan/sheaf.hpp"

namespace tropfan {

Sheaf::Sheaf(const Compactification& comp) : comp_(&comp) {
  const Fan& fan = comp.fan();
  bases_.resize(comp.num_faces());
  for (std::size_t f = 0; f < comp.num_faces(); ++f) {
    const CompFace& face = comp.face(static_cast<FaceId>(f));
    const std::size_t m = ambient(static_cast<FaceId>(f));
    std::vector<IntMatrix> images;
    for (ConeId eta : fan.star(face.sigma))
      if (fan.is_maximal(eta)) images.push_back(fan.image_lattice(face.tau, eta));
    for (std::size_t p = 0; p <= m; ++p) {
      IntMatrix gens(0, binomial(m, p));
      for (const auto& img : images) {
        if (img.rows() < p) continue;
        IntMatrix c = compound(img, p);
        for (std::size_t i = 0; i < c.rows(); ++i) gens.append_row(c.row(i));
      }
      IntMatrix h = hnf(gens);
      h.set_cols_if_empty(binomial(m, p));
      bases_[f].push_back(std::move(h));
    }
  }
}

std::size_t Sheaf::ambient(FaceId f) const {
  return fan().rank() - static_cast<std::size_t>(fan().cone_dim(comp_->face(f).tau));
}

const IntMatrix& Sheaf::basis(int p, FaceId f) const {
  static const IntMatrix empty;
  if (p < 0 || static_cast<std::size_t>(p) >= bases_[f].size()) return empty;
  return bases_[f][p];
}

const IntMatrix& Sheaf::restriction(int p, FaceId gamma, FaceId delta) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = restriction_cache_.find({p, gamma, delta});
    if (it != restriction_cache_.end()) return it->second;
  }
  if (!comp_->is_face_of(gamma, delta))
    throw InputError("restriction: faces are not incident");
  const IntMatrix& bd = basis(p, delta);
  const IntMatrix& bg = basis(p, gamma);
  IntMatrix r(bd.rows(), bg.rows());
  if (bd.rows() > 0) {
    IntMatrix q = fan().quotient_map(comp_->face(delta).tau, comp_->face(gamma).tau);
    IntMatrix images = bd * compound(q, static_cast<std::size_t>(p));
    for (std::size_t j = 0; j < images.rows(); ++j) {
      auto c = row_coordinates(bg, images.row(j));
      check_internal(c.has_value(), "restriction leaves the target lattice");
      for (std::size_t i = 0; i < c->size(); ++i) r(j, i) = (*c)[i];
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return restriction_cache_.emplace(std::make_tuple(p, gamma, delta), std::move(r))
      .first->second;
}

std::optional<RatVector> Sheaf::coordinates(int p, FaceId f, const RatVector& w) const {
  return rational_row_coordinates(to_rational(basis(p, f)), w);
}

IntVector Sheaf::integral_coordinates(int p, FaceId f, const IntVector& w) const {
  auto c = row_coordinates(basis(p, f), w);
  check_internal(c.has_value(), "multivector outside SF_p");
  return *c;
}

const RatMatrix& Sheaf::extension(int p, FaceId f) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = extension_cache_.find({p, f});
    if (it != extension_cache_.end()) return it->second;
  }
  const IntMatrix& b = basis(p, f);
  RatMatrix e = b.rows() == 0 ? RatMatrix(b.cols(), 0) : right_inverse(to_rational(b));
  std::lock_guard<std::mutex> lock(mu_);
  return extension_cache_.emplace(std::make_pair(p, f), std::move(e)).first->second;
}

RatVector Sheaf::extend_form(int p, FaceId f, const RatVector& alpha) const {
  const RatMatrix& e = extension(p, f);
  if (alpha.size() != e.cols()) throw InputError("extend_form: wrong length");
  if (e.cols() == 0) return RatVector(binomial(ambient(f), static_cast<std::size_t>(p)));
  return mul(e, alpha);
}

RatVector Sheaf::restrict_form(int p, FaceId f, const RatVector& form) const {
  const IntMatrix& b = basis(p, f);
  if (b.rows() == 0) return {};
  return mul(to_rational(b), form);
}

RatVector Sheaf::contract(int p, FaceId f, const RatVector& alpha, int k,
                          const RatVector& nu) const {
  if (k < 0 || k > p) throw InputError("contract: degree mismatch");
  const std::size_t m = ambient(f);
  RatVector full = extend_form(p, f, alpha);
  RatVector reduced = contract_form(full, static_cast<std::size_t>(p), nu,
                                    static_cast<std::size_t>(k), m);
  return restrict_form(p - k, f, reduced);
}

}  // namespace tropfan
