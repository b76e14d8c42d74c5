/**************************************************************************
 * symplectic_code.hpp
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
 * @file symplectic_code.hpp
 * @brief Linear codes in F_q^{2n} under the symplectic form <(a|b),(c|d)>_s = a.d - b.c.
 *
 * A vector of F_q^{2n} is stored flat as (a_1..a_n | b_1..b_n); position i
 * (0-indexed here) owns columns i and n + i. The symplectic weight counts the
 * positions whose pair (a_i, b_i) is nonzero.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace eaq {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

struct SymplecticVector {
  std::vector<Elem> a;
  std::vector<Elem> b;

  std::size_t n() const noexcept { return a.size(); }

  static SymplecticVector from_flat(std::span<const Elem> v) {
    if (v.size() % 2 != 0) throw DomainError("flat symplectic vector has odd length");
    const std::size_t n = v.size() / 2;
    return {{v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)}, {v.begin() + static_cast<std::ptrdiff_t>(n), v.end()}};
  }

  std::vector<Elem> flat() const {
    std::vector<Elem> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;
};

/// <x, y>_s over flat vectors of equal even length.
inline Elem symplectic_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw DomainError("symplectic product of vectors with mismatched lengths");
  const std::size_t n = x.size() / 2;
  Elem acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = f.add(acc, f.mul(x[i], y[n + i]));
    acc = f.sub(acc, f.mul(x[n + i], y[i]));
  }
  return acc;
}

inline Elem symplectic_product(const Field& f, const SymplecticVector& x, const SymplecticVector& y) {
  if (x.a.size() != x.b.size() || y.a.size() != y.b.size() || x.n() != y.n())
    throw DomainError("symplectic product of vectors with mismatched lengths");
  return symplectic_product(f, x.flat(), y.flat());
}

inline std::size_t symplectic_weight(std::span<const Elem> x) {
  const std::size_t n = x.size() / 2;
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w += (x[i] != 0 || x[n + i] != 0) ? 1 : 0;
  return w;
}

inline std::size_t symplectic_weight(const SymplecticVector& x) { return symplectic_weight(x.flat()); }

inline std::size_t hamming_weight(std::span<const Elem> x) {
  std::size_t w = 0;
  for (Elem e : x) w += e != 0 ? 1 : 0;
  return w;
}

/// A subspace of F_q^{2n}, kept in canonical RREF.
class LinearCode {
 public:
  LinearCode(Field field, std::size_t n, const Matrix& generators) : n_(n), canon_(rref(checked(field, n, generators))) {}

  static LinearCode zero(const Field& field, std::size_t n) { return {field, n, Matrix(field, 0, 2 * n)}; }
  static LinearCode full(const Field& field, std::size_t n) { return {field, n, Matrix::identity(field, 2 * n)}; }

  const Field& field() const noexcept { return canon_.basis.field(); }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return canon_.pivots.size(); }
  const Matrix& basis() const noexcept { return canon_.basis; }
  const std::vector<std::size_t>& pivots() const noexcept { return canon_.pivots; }
  const Rref& canonical() const noexcept { return canon_; }

  bool contains(std::span<const Elem> v) const {
    if (v.size() != 2 * n_) throw DomainError("vector length does not match code length");
    return in_row_space(canon_, v);
  }

  bool contains(const LinearCode& sub) const {
    require_compatible(sub);
    for (std::size_t r = 0; r < sub.dimension(); ++r)
      if (!contains(sub.basis().row(r))) return false;
    return true;
  }

  void require_compatible(const LinearCode& other) const {
    if (!(field() == other.field())) throw DomainError("codes over different fields");
    if (n_ != other.n_) throw DomainError("codes of different lengths");
  }

  friend bool operator==(const LinearCode& x, const LinearCode& y) {
    return x.n_ == y.n_ && x.canon_.basis == y.canon_.basis;
  }

 private:
  static const Matrix& checked(const Field& field, std::size_t n, const Matrix& g) {
    if (!(g.field() == field)) throw DomainError("generator matrix is over a different field");
    if (g.cols() != 2 * n)
      throw DomainError("generator matrix has " + std::to_string(g.cols()) + " columns, expected " + std::to_string(2 * n));
    return g;
  }

  std::size_t n_;
  Rref canon_;
};

inline LinearCode intersect(const LinearCode& x, const LinearCode& y) {
  x.require_compatible(y);
  return {x.field(), x.length(), row_space_intersect(x.basis(), y.basis())};
}

inline LinearCode sum(const LinearCode& x, const LinearCode& y) {
  x.require_compatible(y);
  return {x.field(), x.length(), row_space_sum(x.basis(), y.basis())};
}

/// C^{⊥s} = nullspace(G Λ) with Λ = [[0, I], [-I, 0]], i.e. the rows of G with halves swapped as (-b | a).
inline LinearCode dual(const LinearCode& code) {
  const Field& f = code.field();
  const std::size_t n = code.length();
  const Matrix& g = code.basis();
  Matrix twisted(f, g.rows(), 2 * n);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      twisted.set(r, i, f.neg(g(r, n + i)));
      twisted.set(r, n + i, g(r, i));
    }
  return {f, n, nullspace(twisted)};
}

inline bool is_self_orthogonal(const LinearCode& code) {
  const Matrix& g = code.basis();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.rows(); ++j)
      if (symplectic_product(code.field(), g.row(i), g.row(j)) != 0) return false;
  return true;
}

namespace detail {

inline std::uint64_t checked_count(unsigned q, std::size_t dim, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > cap / q) {
      throw ResourceError("enumerating " + std::to_string(q) + "^" + std::to_string(dim) +
                          " codewords exceeds cap " + std::to_string(cap));
    }
    total *= q;
  }
  if (total > cap)
    throw ResourceError("enumerating " + std::to_string(total) + " codewords exceeds cap " + std::to_string(cap));
  return total;
}

}  // namespace detail

/// Minimum of `weight` over the codewords of `code` outside `exclude`, by mixed-radix
/// enumeration of all q^dim coefficient vectors. `floor` is a weight that cannot be beaten,
/// used to stop early. Returns nullopt when code == exclude.
template <typename WeightFn>
std::optional<std::size_t> min_weight_outside(const LinearCode& code, const LinearCode& exclude, std::uint64_t cap,
                                              WeightFn&& weight, std::size_t floor = 1) {
  code.require_compatible(exclude);
  if (!code.contains(exclude)) throw DomainError("excluded code is not a subcode");
  const Field& f = code.field();
  const unsigned q = f.q();
  detail::checked_count(q, code.dimension(), cap);

  // Basis of `code` = complement rows (must be hit) followed by exclude rows.
  Rref span = exclude.canonical();
  std::vector<std::vector<Elem>> rows;
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    const auto v = code.basis().row(r);
    if (in_row_space(span, v)) continue;
    rows.emplace_back(v.begin(), v.end());
    Matrix grown = span.basis;
    grown.append_row(v);
    span = rref(grown);
  }
  const std::size_t complement = rows.size();
  if (complement == 0) return std::nullopt;
  for (std::size_t r = 0; r < exclude.dimension(); ++r) {
    const auto v = exclude.basis().row(r);
    rows.emplace_back(v.begin(), v.end());
  }

  const std::size_t len = code.basis().cols();
  const std::size_t dim = rows.size();
  // multiples[j][c] = c * rows[j]
  std::vector<std::vector<std::vector<Elem>>> multiples(dim, std::vector<std::vector<Elem>>(q, std::vector<Elem>(len)));
  for (std::size_t j = 0; j < dim; ++j)
    for (unsigned c = 0; c < q; ++c)
      for (std::size_t t = 0; t < len; ++t) multiples[j][c][t] = f.mul(static_cast<Elem>(c), rows[j][t]);

  std::vector<unsigned> digits(dim, 0);
  std::vector<Elem> word(len, 0);
  std::size_t nonzero_complement = 0;
  std::optional<std::size_t> best;
  for (;;) {
    std::size_t j = 0;
    for (; j < dim; ++j) {
      const unsigned old = digits[j];
      const unsigned next = (old + 1) % q;
      for (std::size_t t = 0; t < len; ++t) word[t] = f.add(f.sub(word[t], multiples[j][old][t]), multiples[j][next][t]);
      digits[j] = next;
      if (j < complement) {
        if (old == 0) ++nonzero_complement;
        if (next == 0) --nonzero_complement;
      }
      if (next != 0) break;
    }
    if (j == dim) break;
    if (nonzero_complement == 0) continue;
    const std::size_t w = weight(std::span<const Elem>(word));
    if (!best || w < *best) {
      best = w;
      if (w <= floor) break;
    }
  }
  return best;
}

/// Minimum symplectic weight of code \ exclude.
inline std::optional<std::size_t> min_symplectic_weight(const LinearCode& code, const LinearCode& exclude,
                                                        std::uint64_t cap = kDefaultEnumerationCap) {
  return min_weight_outside(code, exclude, cap, [](std::span<const Elem> v) { return symplectic_weight(v); });
}

/// Minimum symplectic weight of code \ {0}.
inline std::optional<std::size_t> min_symplectic_weight(const LinearCode& code,
                                                        std::uint64_t cap = kDefaultEnumerationCap) {
  return min_symplectic_weight(code, LinearCode::zero(code.field(), code.length()), cap);
}

/// Minimum Hamming weight of code \ {0}, the code read as a classical code of length 2n.
inline std::optional<std::size_t> min_hamming_weight(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap) {
  return min_weight_outside(code, LinearCode::zero(code.field(), code.length()), cap,
                            [](std::span<const Elem> v) { return hamming_weight(v); });
}

/// [[n, k, d; c]]_q of the stabilizer EAQECC defined by `code`.
struct CodeParams {
  unsigned q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;       // over C^{⊥s} \ C (equals pure_d when c = 0)
  std::size_t c = 0;
  std::optional<std::size_t> pure_d;  // over C^{⊥s} \ {0}
  std::size_t dim = 0;
  bool is_stabilizer_qecc = false;

  std::string label() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : std::string("undef")) +
           ";" + std::to_string(c) + "]]_" + std::to_string(q);
  }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline CodeParams params(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap) {
  const LinearCode d = dual(code);
  const LinearCode hull = intersect(code, d);
  const std::size_t gap = code.dimension() - hull.dimension();
  if (gap % 2 != 0) throw std::logic_error("dim C - dim(C ∩ C^⊥s) is odd");
  CodeParams p;
  p.q = code.field().q();
  p.n = code.length();
  p.dim = code.dimension();
  p.c = gap / 2;
  p.k = p.c + p.n - p.dim;
  p.pure_d = min_symplectic_weight(d, cap);
  p.d = p.c == 0 ? p.pure_d : min_symplectic_weight(d, hull, cap);
  p.is_stabilizer_qecc = p.c == 0 && is_self_orthogonal(code);
  return p;
}

namespace detail {

// Unbiased draw in [0, bound) from raw mt19937_64 output; std distributions are
// implementation-defined, this is not.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace detail

/// Seeded isotropic code: repeatedly appends a random vector of span^{⊥s} \ span.
/// The RNG is std::mt19937_64 seeded with `seed`.
inline LinearCode random_self_orthogonal(const Field& field, std::size_t n, std::size_t target_dim, std::uint64_t seed) {
  if (target_dim > n) throw PreconditionError("an isotropic subspace of F_q^{2n} has dimension at most n");
  std::mt19937_64 rng(seed);
  LinearCode span = LinearCode::zero(field, n);
  std::vector<Elem> v(2 * n);
  while (span.dimension() < target_dim) {
    const LinearCode d = dual(span);
    std::fill(v.begin(), v.end(), Elem{0});
    for (std::size_t r = 0; r < d.dimension(); ++r) {
      const auto coeff = static_cast<Elem>(detail::uniform_below(rng, field.q()));
      if (coeff == 0) continue;
      const auto row = d.basis().row(r);
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = field.add(v[t], field.mul(coeff, row[t]));
    }
    if (span.contains(v)) continue;
    Matrix g = span.basis();
    g.append_row(v);
    span = LinearCode(field, n, g);
  }
  return span;
}

/// Uniformly random generators; the span may have dimension below `rows`.
inline LinearCode random_code(const Field& field, std::size_t n, std::size_t rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix g(field, rows, 2 * n);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) g.set(r, c, static_cast<Elem>(detail::uniform_below(rng, field.q())));
  return {field, n, g};
}

}  // namespace eaq
