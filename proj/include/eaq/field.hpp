/**************************************************************************
 * field.hpp
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
 * @file field.hpp
 * @brief Table-driven arithmetic in GF(p^m), q <= 256.
 *
 * Elements are integer codes in [0, q). The code of c0 + c1 x + ... + c_{m-1} x^{m-1}
 * is c0 + c1 p + ... + c_{m-1} p^{m-1} (little-endian base p), so 0 and 1 are the
 * additive and multiplicative identities for every field.
 *
 * @code{.cpp}
 * auto f4 = eaq::Field::of_order(4);  // x^2 + x + 1
 * f4.mul(2, 2);                       // x * x = x + 1, code 3
 * auto f16 = eaq::Field::extension(2, 4, {1, 1, 0, 0, 1});
 * @endcode
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace eaq {

using Elem = std::uint8_t;

namespace detail {

inline bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Splits q into p^m; returns nullopt when q is not a prime power.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return std::pair{p, m};
}

using Poly = std::vector<unsigned>;  // little-endian coefficients over GF(p)

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial g over GF(p).
inline Poly poly_mod(Poly a, const Poly& g, unsigned p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) a[shift + i] = (a[shift + i] + p * p - lead * g[i] % p) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

inline Poly decode(unsigned code, unsigned p, unsigned m) {
  Poly r(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    r[i] = code % p;
    code /= p;
  }
  trim(r);
  return r;
}

inline unsigned encode(const Poly& a, unsigned p) {
  unsigned code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

// True iff the monic degree-m polynomial f has no monic divisor of degree 1..m/2.
inline bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned deg = 1; deg <= m / 2; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = decode(low, p, deg);
      g.resize(deg + 1, 0);
      g[deg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Immutable description of GF(p^m) together with its operation tables.
/// Copies share the tables.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 256;

  static Field prime(unsigned p) { return Field(p, 1, {}); }

  /// GF(p^m) modulo the monic irreducible `modulus` (m + 1 little-endian coefficients).
  static Field extension(unsigned p, unsigned m, std::vector<unsigned> modulus) {
    return Field(p, m, std::move(modulus));
  }

  /// Prime fields and the built-in extensions GF(4), GF(8), GF(9).
  static Field of_order(unsigned q) {
    const auto pm = detail::prime_power(q);
    if (!pm) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
    const auto [p, m] = *pm;
    if (m == 1) return prime(p);
    if (q == 4) return extension(2, 2, {1, 1, 1});
    if (q == 8) return extension(2, 3, {1, 1, 0, 1});
    if (q == 9) return extension(3, 2, {1, 0, 1});
    throw DomainError("GF(" + std::to_string(q) + ") requires an explicit irreducible polynomial");
  }

  unsigned p() const noexcept { return t_->p; }
  unsigned m() const noexcept { return t_->m; }
  unsigned q() const noexcept { return t_->q; }
  /// Empty for prime fields.
  const std::vector<unsigned>& modulus() const noexcept { return t_->modulus; }

  bool contains(unsigned code) const noexcept { return code < t_->q; }

  Elem add(Elem a, Elem b) const { return t_->add[index(a, b)]; }
  Elem sub(Elem a, Elem b) const { return t_->add[index(a, neg(b))]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[index(a, b)]; }
  Elem neg(Elem a) const {
    check(a);
    return t_->neg[a];
  }
  Elem inv(Elem a) const {
    check(a);
    if (a == 0) throw DomainError("inverse of zero");
    return t_->inv[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, unsigned long long e) const {
    Elem result = 1;
    Elem base = a;
    check(a);
    while (e != 0) {
      if (e & 1ULL) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// All q elements in code order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out(q());
    for (unsigned i = 0; i < q(); ++i) out[i] = static_cast<Elem>(i);
    return out;
  }

  std::string name() const { return "GF(" + std::to_string(q()) + ")"; }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
  }

 private:
  struct Tables {
    unsigned p = 0;
    unsigned m = 0;
    unsigned q = 0;
    std::vector<unsigned> modulus;
    std::vector<Elem> add, mul;
    std::vector<Elem> neg, inv;
  };

  Field(unsigned p, unsigned m, std::vector<unsigned> modulus) {
    if (!detail::is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw DomainError("extension degree must be at least 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxOrder) throw DomainError("field order exceeds " + std::to_string(kMaxOrder));
    }
    if (m == 1) {
      modulus.clear();
    } else {
      if (modulus.size() != m + 1)
        throw DomainError("irreducible polynomial needs " + std::to_string(m + 1) + " coefficients");
      for (unsigned c : modulus)
        if (c >= p) throw DomainError("polynomial coefficient " + std::to_string(c) + " not in GF(" + std::to_string(p) + ")");
      if (modulus.back() != 1) throw DomainError("polynomial must be monic");
      if (!detail::is_irreducible(modulus, p)) throw DomainError("polynomial is reducible over GF(" + std::to_string(p) + ")");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->m = m;
    t->q = static_cast<unsigned>(q);
    t->modulus = std::move(modulus);
    build(*t);
    t_ = std::move(t);
  }

  static void build(Tables& t) {
    const unsigned q = t.q;
    t.add.assign(q * q, 0);
    t.mul.assign(q * q, 0);
    t.neg.assign(q, 0);
    t.inv.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
      const auto pa = detail::decode(a, t.p, t.m);
      for (unsigned b = 0; b < q; ++b) {
        const auto pb = detail::decode(b, t.p, t.m);
        detail::Poly sum(t.m, 0);
        for (unsigned i = 0; i < t.m; ++i) {
          const unsigned ca = i < pa.size() ? pa[i] : 0;
          const unsigned cb = i < pb.size() ? pb[i] : 0;
          sum[i] = (ca + cb) % t.p;
        }
        detail::trim(sum);
        t.add[a * q + b] = static_cast<Elem>(detail::encode(sum, t.p));
        auto prod = detail::poly_mul(pa, pb, t.p);
        if (t.m > 1) prod = detail::poly_mod(std::move(prod), t.modulus, t.p);
        else if (!prod.empty()) prod[0] %= t.p;
        t.mul[a * q + b] = static_cast<Elem>(detail::encode(prod, t.p));
      }
    }
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        if (t.add[a * q + b] == 0) t.neg[a] = static_cast<Elem>(b);
        if (t.mul[a * q + b] == 1) t.inv[a] = static_cast<Elem>(b);
      }
  }

  void check(Elem a) const {
    if (a >= t_->q) throw DomainError("element code " + std::to_string(a) + " not in " + name());
  }
  std::size_t index(Elem a, Elem b) const {
    check(a);
    check(b);
    return static_cast<std::size_t>(a) * t_->q + b;
  }

  std::shared_ptr<const Tables> t_;
};

/// An element bound to its field; arithmetic between different fields throws DomainError.
class FieldElement {
 public:
  FieldElement(Field field, unsigned code) : field_(std::move(field)) {
    if (!field_.contains(code)) throw DomainError("element code " + std::to_string(code) + " not in " + field_.name());
    code_ = static_cast<Elem>(code);
  }

  const Field& field() const noexcept { return field_; }
  Elem code() const noexcept { return code_; }

  FieldElement operator-() const { return {field_, field_.neg(code_)}; }
  FieldElement inverse() const { return {field_, field_.inv(code_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.add(a.code_, b.code_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.sub(a.code_, b.code_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.mul(a.code_, b.code_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.div(a.code_, b.code_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }

 private:
  static void same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) throw DomainError("operands belong to different fields");
  }

  Field field_;
  Elem code_ = 0;
};

}  // namespace eaq
