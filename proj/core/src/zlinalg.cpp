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

#include "tropfan/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tropfan {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// row_a += k * row_b
template <typename T>
void add_row_multiple(Matrix<T>& m, std::size_t a, std::size_t b, const T& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += k * m(b, j);
}

template <typename T>
void add_col_multiple(Matrix<T>& m, std::size_t a, std::size_t b, const T& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += k * m(i, b);
}

template <typename T>
void negate_row(Matrix<T>& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

template <typename T>
void negate_col(Matrix<T>& m, std::size_t a) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

// Smith form with optional transform tracking. Row operations on D are
// mirrored on U, column operations on V.
SmithForm smith(const IntMatrix& m, bool track) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s;
  s.D = m;
  if (track) {
    s.U = IntMatrix::identity(rows);
    s.V = IntMatrix::identity(cols);
  }
  IntMatrix& D = s.D;

  auto row_swap = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    if (track) s.U.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    if (track) s.V.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t a, std::size_t b, const Integer& k) {
    add_row_multiple(D, a, b, k);
    if (track) add_row_multiple(s.U, a, b, k);
  };
  auto col_add = [&](std::size_t a, std::size_t b, const Integer& k) {
    add_col_multiple(D, a, b, k);
    if (track) add_col_multiple(s.V, a, b, k);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Minimal nonzero |entry| in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (D(i, j) == 0) continue;
        if (!found || abs(D(i, j)) < abs(D(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        row_add(i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        col_add(j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Move the smallest remaining entry of row/column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, Integer(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      if (track) negate_row(s.U, t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

template <typename T>
std::size_t rank_impl(Matrix<Rational> a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational k = -a(i, c) / a(r, c);
      add_row_multiple(a, i, r, k);
    }
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational k = -a(i, c);
      add_row_multiple(a, i, r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      check_internal(m(i, j).get_den() == 1, "non-integral matrix entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntVector to_integer(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    check_internal(v[i].get_den() == 1, "non-integral vector entry");
    r[i] = v[i].get_num();
  }
  return r;
}

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

namespace {
template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& x) {
  if (m.cols() != x.size()) throw InputError("matrix-vector shape mismatch");
  std::vector<T> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (x[j] != 0) y[i] += m(i, j) * x[j];
  return y;
}
template <typename T>
std::vector<T> vec_mat(const std::vector<T>& x, const Matrix<T>& m) {
  if (m.rows() != x.size()) throw InputError("vector-matrix shape mismatch");
  std::vector<T> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}
}  // namespace

IntVector mul(const IntMatrix& m, const IntVector& x) { return mat_vec(m, x); }
IntVector mul(const IntVector& x, const IntMatrix& m) { return vec_mat(x, m); }
RatVector mul(const RatMatrix& m, const RatVector& x) { return mat_vec(m, x); }
RatVector mul(const RatVector& x, const RatMatrix& m) { return vec_mat(x, m); }

Integer AbGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str() + "Z");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " x ";
    out += parts[i];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AbGroup& g) {
  return os << g.to_string();
}

AbGroup abgroup_from_cyclic(std::size_t free_rank, std::vector<Integer> orders) {
  AbGroup g;
  g.free_rank = free_rank;
  std::vector<Integer> finite;
  for (auto& d : orders) {
    if (d == 0)
      ++g.free_rank;
    else if (abs(d) != 1)
      finite.push_back(abs(d));
  }
  if (finite.empty()) return g;
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (auto& d : invariant_factors(diag))
    if (d != 1) g.torsion.push_back(d);
  return g;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
  return d;
}

SmithForm snf(const IntMatrix& m) { return smith(m, true); }

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  return smith(m, false).diagonal();
}

std::size_t rank(const IntMatrix& m) { return rank_impl<Integer>(to_rational(m)); }
std::size_t rank(const RatMatrix& m) { return rank_impl<Rational>(m); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c))))
          best = i;
      if (best == a.rows()) break;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Integer q = a(i, c) / a(r, c);
        add_row_multiple(a, i, r, Integer(-q));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= a.rows() || a(r, c) == 0) continue;
    if (a(r, c) < 0) negate_row(a, r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(a(i, c), a(r, c));
      add_row_multiple(a, i, r, Integer(-q));
    }
    ++r;
  }
  IntMatrix out = a.block(0, 0, r, a.cols());
  return out;
}

AbGroup cokernel_group(const IntMatrix& m) {
  auto d = invariant_factors(m);
  AbGroup g;
  g.free_rank = m.cols() - d.size();
  for (auto& x : d)
    if (x != 1) g.torsion.push_back(x);
  return g;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return IntMatrix::identity(n);
  SmithForm s = snf(m);
  IntMatrix k(n - s.rank, n);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(j - s.rank, i) = s.V(i, j);
  IntMatrix h = hnf(k);
  h.set_cols_if_empty(n);
  return h;
}

RatMatrix rational_kernel(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMatrix k(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    k.append_row(v);
  }
  return k;
}

Sublattice Sublattice::from_generators(const IntMatrix& gens) {
  Sublattice l;
  l.ambient_rank = gens.cols();
  l.basis = hnf(gens);
  l.basis.set_cols_if_empty(gens.cols());
  return l;
}

Sublattice Sublattice::full(std::size_t rank) {
  return Sublattice{rank, IntMatrix::identity(rank)};
}

bool Sublattice::contains(std::span<const Integer> v) const {
  return row_coordinates(basis, v).has_value();
}

Saturation saturate(const Sublattice& l) {
  const std::size_t k = l.basis.rows(), n = l.ambient_rank;
  if (k == 0) return {l, Integer(1)};
  SmithForm s = snf(l.basis);
  check_internal(s.rank == k, "sublattice basis is not independent");
  IntMatrix vinv = unimodular_inverse(s.V);
  Saturation out;
  out.lattice = Sublattice::from_generators(vinv.block(0, 0, k, n));
  out.index = 1;
  for (auto& d : s.diagonal()) out.index *= d;
  return out;
}

std::optional<IntVector> row_coordinates(const IntMatrix& basis,
                                         std::span<const Integer> v) {
  if (v.size() != basis.cols()) throw InputError("coordinate vector length mismatch");
  IntVector residual(v.begin(), v.end());
  IntVector coeffs(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < basis.cols() && basis(i, c) == 0) ++c;
    check_internal(c < basis.cols(), "zero row in echelon basis");
    if (residual[c] == 0) continue;
    if (residual[c] % basis(i, c) != 0) return std::nullopt;
    Integer q = residual[c] / basis(i, c);
    coeffs[i] = q;
    for (std::size_t j = c; j < basis.cols(); ++j) residual[j] -= q * basis(i, j);
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  return coeffs;
}

std::optional<RatVector> rational_row_coordinates(const RatMatrix& rows,
                                                  std::span<const Rational> v) {
  // Solve rows^T c = v.
  RatVector b(v.begin(), v.end());
  return solve(rows.transpose(), b);
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw InputError("solve: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw InputError("solve_integral: shape mismatch");
  SmithForm s = snf(a);
  IntVector ub = mul(s.U, b);
  IntVector y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return mul(s.V, y);
}

RatMatrix right_inverse(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  if (pivots.size() != m.rows()) throw DomainError("right_inverse: rank deficient");
  const std::size_t r = m.rows();
  RatMatrix sub(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(i, pivots[j]);
  // Invert sub by Gauss-Jordan on [sub | I].
  RatMatrix aug(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = sub(i, j);
    aug(i, r + i) = 1;
  }
  rref(aug);
  RatMatrix e(m.cols(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) e(pivots[j], i) = aug(j, r + i);
  return e;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  if (m.rows() == 0) return m;
  RatMatrix inv = right_inverse(to_rational(m));
  return to_integer(inv);
}

IntMatrix complete_to_unimodular(const IntVector& v) {
  const std::size_t n = v.size();
  IntMatrix col(n, 1);
  for (std::size_t i = 0; i < n; ++i) col(i, 0) = v[i];
  SmithForm s = snf(col);
  if (s.rank != 1 || s.D(0, 0) != 1)
    throw DomainError("complete_to_unimodular: vector is not primitive");
  IntMatrix w = unimodular_inverse(s.U);
  if (s.V(0, 0) < 0) negate_col(w, 0);
  for (std::size_t i = 0; i < n; ++i)
    check_internal(w(i, 0) == v[i], "unimodular completion mismatch");
  return w;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Cokernel::Cokernel(const IntMatrix& relations, std::size_t generators)
    : generators_(generators) {
  if (relations.rows() > 0 && relations.cols() != generators)
    throw InputError("cokernel: relation width mismatch");
  IntMatrix rel = relations;
  if (rel.rows() == 0) rel = IntMatrix(0, generators);
  SmithForm s = snf(rel);
  to_coords_ = s.V.transpose();
  from_coords_ = unimodular_inverse(s.V).transpose();
  orders_.assign(generators, Integer(0));
  for (std::size_t i = 0; i < s.rank; ++i) orders_[i] = s.D(i, i);
  group_.free_rank = generators - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (orders_[i] != 1) group_.torsion.push_back(orders_[i]);
}

IntVector Cokernel::coordinates(std::span<const Integer> x) const {
  IntVector xv(x.begin(), x.end());
  IntVector y = mul(to_coords_, xv);
  IntVector out;
  for (std::size_t i = 0; i < generators_; ++i)
    if (orders_[i] > 1) out.push_back(floor_mod(y[i], orders_[i]));
  for (std::size_t i = 0; i < generators_; ++i)
    if (orders_[i] == 0) out.push_back(y[i]);
  return out;
}

RatVector Cokernel::free_coordinates(std::span<const Rational> x) const {
  RatVector xv(x.begin(), x.end());
  RatVector y = mul(to_rational(to_coords_), xv);
  RatVector out;
  for (std::size_t i = 0; i < generators_; ++i)
    if (orders_[i] == 0) out.push_back(y[i]);
  return out;
}

std::vector<IntVector> Cokernel::free_generators() const {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < generators_; ++i)
    if (orders_[i] == 0) gens.push_back(from_coords_.col_vector(i));
  return gens;
}

std::vector<IntVector> Cokernel::torsion_generators() const {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < generators_; ++i)
    if (orders_[i] > 1) gens.push_back(from_coords_.col_vector(i));
  return gens;
}

bool Cokernel::is_zero(std::span<const Integer> x) const {
  for (const auto& c : coordinates(x))
    if (c != 0) return false;
  return true;
}

AbGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner) {
  IntMatrix basis = hnf(outer);
  IntMatrix coords(0, basis.rows());
  for (std::size_t i = 0; i < inner.rows(); ++i) {
    auto c = row_coordinates(basis, inner.row(i));
    if (!c) throw InputError("lattice_quotient: inner lattice not contained in outer");
    coords.append_row(*c);
  }
  return cokernel_group(coords);
}

}  // namespace tropfan
