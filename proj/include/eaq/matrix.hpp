/**************************************************************************
 * matrix.hpp
 *
 * Copyright 2026 The eaqecc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over GF(q) and the row-space algebra built on RREF.
 *
 * A subspace is always carried by its canonical representative: the reduced
 * row-echelon form with zero rows dropped. Two subspaces are equal iff their
 * canonical matrices are equal entrywise. The zero subspace is a 0-row matrix
 * that still knows its column count.
 */

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace eaq {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Builds from integer rows; every row must have `cols` entries, each < q.
  Matrix(Field field, std::size_t cols, const std::vector<std::vector<unsigned>>& rows)
      : field_(std::move(field)), rows_(0), cols_(cols) {
    data_.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw DomainError("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
      for (unsigned v : r) {
        if (!field_.contains(v)) throw DomainError("entry " + std::to_string(v) + " not in " + field_.name());
        data_.push_back(static_cast<Elem>(v));
      }
      ++rows_;
    }
  }

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values) {
    if (values.size() != cols_) throw DomainError("appended row has wrong length");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  std::vector<Elem> column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    return t;
  }

  /// Keeps the listed columns in the given order.
  Matrix select_columns(std::span<const std::size_t> keep) const {
    Matrix out(field_, rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < keep.size(); ++j) out.set(r, j, (*this)(r, keep[j]));
    return out;
  }

  /// Drops the listed columns at once; the rest keep their relative order.
  Matrix delete_columns(std::span<const std::size_t> drop) const {
    std::vector<bool> dropped(cols_, false);
    for (std::size_t c : drop) dropped.at(c) = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!dropped[c]) keep.push_back(c);
    return select_columns(keep);
  }

  /// Rows of `this` followed by rows of `below`.
  Matrix stack(const Matrix& below) const {
    require_compatible(below);
    Matrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (!(field_ == rhs.field_)) throw DomainError("matrices over different fields");
    if (cols_ != rhs.rows_) throw DomainError("matrix product dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.set(i, j, field_.add(out(i, j), field_.mul(a, rhs(k, j))));
      }
    return out;
  }

  void require_compatible(const Matrix& other) const {
    if (!(field_ == other.field_)) throw DomainError("matrices over different fields");
    if (cols_ != other.cols_)
      throw DomainError("column mismatch: " + std::to_string(cols_) + " vs " + std::to_string(other.cols_));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct Rref {
  Matrix basis;                     // zero rows removed
  std::vector<std::size_t> pivots;  // ascending, 0-indexed
};

inline Rref rref(const Matrix& a) {
  const Field& f = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Elem tmp = m(r, j);
        m.set(r, j, m(lead_row, j));
        m.set(lead_row, j, tmp);
      }
    const Elem scale = f.inv(m(lead_row, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.set(lead_row, j, f.mul(m(lead_row, j), scale));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Elem factor = m(i, c);
      if (i == lead_row || factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.set(i, j, f.sub(m(i, j), f.mul(factor, m(lead_row, j))));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix basis(f, 0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.append_row(m.row(r));
  return {std::move(basis), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

/// Reduces `v` against an RREF basis in place; the result is zero iff v lies in the row space.
inline void reduce(const Rref& r, std::span<Elem> v) {
  const Field& f = r.basis.field();
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const Elem coeff = v[r.pivots[i]];
    if (coeff == 0) continue;
    const auto row = r.basis.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(coeff, row[j]));
  }
}

inline bool in_row_space(const Rref& r, std::span<const Elem> v) {
  std::vector<Elem> w(v.begin(), v.end());
  reduce(r, w);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

/// Basis (RREF rows) of {x : A x^T = 0}.
inline Matrix nullspace(const Matrix& a) {
  const Field& f = a.field();
  const Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  Matrix out(f, 0, a.cols());
  std::vector<Elem> x(a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(x.begin(), x.end(), Elem{0});
    x[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = f.neg(r.basis(i, free));
    out.append_row(x);
  }
  return rref(out).basis;
}

inline Matrix row_space_sum(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  return rref(a.stack(b)).basis;
}

/// Zassenhaus: reduce [[A, A], [B, 0]]; rows with a zero left half span A ∩ B on the right.
inline Matrix row_space_intersect(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Matrix block(f, a.rows() + b.rows(), 2 * n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      block.set(r, c, a(r, c));
      block.set(r, n + c, a(r, c));
    }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) block.set(a.rows() + r, c, b(r, c));
  const Rref red = rref(block);
  Matrix out(f, 0, n);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] < n) continue;
    out.append_row(red.basis.row(i).subspan(n));
  }
  return rref(out).basis;
}

}  // namespace eaq
