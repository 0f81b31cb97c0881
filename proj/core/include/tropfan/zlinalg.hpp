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

#pragma once

// Exact integer and rational linear algebra: Smith and Hermite normal
// forms, kernels, saturation and finitely generated abelian groups.
//
// Vectors act on matrices from the left unless stated otherwise: a
// "row lattice" is the Z-span of the rows, and a "kernel" is the set of
// column vectors x with M x = 0.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tropfan/errors.hpp"

namespace tropfan {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return std::span<T>(data_.data() + i * cols_, cols_);
  }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_.data() + i * cols_, cols_);
  }
  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return std::vector<T>(r.begin(), r.end());
  }
  std::vector<T> col_vector(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InputError("appended row has wrong length");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }
  void append_row(const std::vector<T>& values) {
    append_row(std::span<const T>(values));
  }

  // Only meaningful on a matrix with zero rows: fixes the width so that
  // empty generator sets still carry their ambient dimension.
  void set_cols_if_empty(std::size_t cols) {
    if (rows_ == 0) cols_ = cols;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw InputError("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// Throws InternalError if an entry is not integral.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);
RatVector to_rational(const IntVector& v);

IntVector mul(const IntMatrix& m, const IntVector& x);       // M x
IntVector mul(const IntVector& x, const IntMatrix& m);       // x M
RatVector mul(const RatMatrix& m, const RatVector& x);
RatVector mul(const RatVector& x, const RatMatrix& m);

// Finitely generated abelian group Z^free_rank x Z/d1 x ... with d1 | d2 | ...
struct AbGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  Integer torsion_order() const;
  // "0", "Z", "Z^3", "Z/2Z", "Z^3 x Z/2Z".
  std::string to_string() const;

  friend bool operator==(const AbGroup&, const AbGroup&) = default;
};

std::ostream& operator<<(std::ostream& os, const AbGroup& g);

// Builds the invariant-factor form from an arbitrary list of cyclic orders
// (entries 0 contribute to the free rank, entries +-1 are dropped).
AbGroup abgroup_from_cyclic(std::size_t free_rank, std::vector<Integer> orders);

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal with d1 | d2 | ...
  IntMatrix V;  // cols x cols, unimodular
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

// U * M * V == D.
SmithForm snf(const IntMatrix& m);
// Nonzero diagonal entries of the Smith form, without tracking transforms.
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

// Row Hermite normal form: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot). Zero rows are removed.
IntMatrix hnf(const IntMatrix& m);

// Z^cols / rowspace(M).
AbGroup cokernel_group(const IntMatrix& m);

// Rows form a basis (in HNF) of the saturated lattice {x in Z^cols : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Rational nullspace basis of {x : M x = 0}.
RatMatrix rational_kernel(const RatMatrix& m);

struct Sublattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;  // HNF rows

  static Sublattice from_generators(const IntMatrix& gens);
  static Sublattice full(std::size_t rank);
  std::size_t rank() const { return basis.rows(); }
  bool contains(std::span<const Integer> v) const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
};

struct Saturation {
  Sublattice lattice;
  Integer index;
};

Saturation saturate(const Sublattice& l);

// Integral c with c * basis == v for a basis in row echelon form, or nullopt
// when v is not in the row lattice.
std::optional<IntVector> row_coordinates(const IntMatrix& echelon_basis,
                                         std::span<const Integer> v);
// Rational c with c * rows == v when v lies in the rational row space.
std::optional<RatVector> rational_row_coordinates(const RatMatrix& rows,
                                                  std::span<const Rational> v);

// Some x with A x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
// Integral x with A x = b chosen through the Smith form (free coordinates 0).
std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b);

// E with M * E == I for a matrix of full row rank.
RatMatrix right_inverse(const RatMatrix& m);
IntMatrix unimodular_inverse(const IntMatrix& m);

// A unimodular matrix whose first column is the primitive vector v
// (gcd of entries 1).
IntMatrix complete_to_unimodular(const IntVector& v);

Integer content(std::span<const Integer> v);  // gcd of entries, 0 for zero

// Presentation of Z^g / rowspace(R) with normal-form coordinates.
class Cokernel {
 public:
  Cokernel() = default;
  explicit Cokernel(const IntMatrix& relations, std::size_t generators);

  const AbGroup& group() const { return group_; }
  std::size_t generators() const { return generators_; }
  // Coordinates of the class of x: torsion coordinates reduced mod their
  // order, free coordinates unchanged, killed coordinates dropped. Torsion
  // coordinates come first, then free ones.
  IntVector coordinates(std::span<const Integer> x) const;
  RatVector free_coordinates(std::span<const Rational> x) const;
  // Representatives in Z^g of the free generators and torsion generators.
  std::vector<IntVector> free_generators() const;
  std::vector<IntVector> torsion_generators() const;
  bool is_zero(std::span<const Integer> x) const;

 private:
  std::size_t generators_ = 0;
  AbGroup group_;
  IntMatrix to_coords_;    // y = to_coords_ * x
  IntMatrix from_coords_;  // inverse
  std::vector<Integer> orders_;  // per coordinate: 1 killed, 0 free, d torsion
};

// L1 / L2 for lattices L2 subset L1 given by generators in a common ambient.
AbGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner);

}  // namespace tropfan
