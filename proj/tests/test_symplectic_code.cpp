/**************************************************************************
 * test_symplectic_code.cpp
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

#include <gtest/gtest.h>

#include <random>

#include "eaq/symplectic_code.hpp"
#include "example1.hpp"
#include "oracles.hpp"

namespace {

using eaq::Field;
using eaq::LinearCode;
using eaq::Matrix;
using eaq::SymplecticVector;

SymplecticVector bits(std::vector<eaq::Elem> a, std::vector<eaq::Elem> b) { return {std::move(a), std::move(b)}; }

TEST(SymplecticProduct, Examples) {
  const auto f2 = Field::prime(2), f3 = Field::prime(3);
  const auto x = bits({1, 0, 0, 1, 0}, {0, 1, 1, 0, 0});
  const auto y = bits({0, 1, 0, 0, 1}, {0, 0, 1, 1, 0});
  EXPECT_EQ(eaq::symplectic_product(f2, x, y), 0);
  EXPECT_EQ(eaq::symplectic_product(f2, x, x), 0);
  EXPECT_EQ(eaq::symplectic_product(f3, bits({1}, {0}), bits({0}, {1})), 1);
  EXPECT_EQ(eaq::symplectic_product(f3, bits({0}, {1}), bits({1}, {0})), 2);
  EXPECT_THROW(eaq::symplectic_product(f2, bits({1}, {0}), bits({1, 0}, {0, 0})), eaq::DomainError);
}

TEST(SymplecticWeight, Examples) {
  EXPECT_EQ(eaq::symplectic_weight(bits({0, 0, 0}, {0, 0, 0})), 0u);
  EXPECT_EQ(eaq::symplectic_weight(bits({1, 0, 0, 1, 0}, {0, 1, 1, 0, 0})), 4u);
  EXPECT_EQ(eaq::symplectic_weight(bits({0, 0, 0, 0, 0}, {1, 1, 1, 1, 1})), 5u);
}

TEST(Dual, Examples) {
  const auto f3 = Field::prime(3);
  EXPECT_EQ(eaq::dual(LinearCode::full(f3, 3)), LinearCode::zero(f3, 3));
  EXPECT_EQ(eaq::dual(LinearCode::zero(f3, 3)), LinearCode::full(f3, 3));
  const auto d = eaq::dual(eaq::testing::code_a());
  EXPECT_EQ(d.dimension(), 6u);
  EXPECT_EQ(d, eaq::testing::dual_a());
}

TEST(SelfOrthogonal, Examples) {
  const auto f2 = Field::prime(2);
  EXPECT_TRUE(eaq::is_self_orthogonal(LinearCode::zero(f2, 4)));
  EXPECT_TRUE(eaq::is_self_orthogonal(eaq::testing::code_a()));
  EXPECT_FALSE(eaq::is_self_orthogonal(LinearCode(f2, 1, Matrix::identity(f2, 2))));
}

TEST(MinSymplecticWeight, Examples) {
  const auto f2 = Field::prime(2);
  EXPECT_FALSE(eaq::min_symplectic_weight(LinearCode::zero(f2, 3)).has_value());
  EXPECT_EQ(eaq::min_symplectic_weight(eaq::testing::dual_a()), 3u);
  EXPECT_EQ(eaq::min_symplectic_weight(eaq::testing::shortened_dual_a()), 3u);
  // every nonzero stabilizer of A touches four positions
  EXPECT_EQ(eaq::min_symplectic_weight(eaq::testing::code_a()), 4u);
  EXPECT_EQ(eaq::oracle::min_symplectic_weight_by_exhaustion(eaq::testing::code_a()), 4u);
}

TEST(MinSymplecticWeight, ExcludeAndCap) {
  const auto a = eaq::testing::code_a();
  const auto d = eaq::testing::dual_a();
  EXPECT_EQ(eaq::min_symplectic_weight(d, a), 3u);
  EXPECT_FALSE(eaq::min_symplectic_weight(a, a).has_value());
  EXPECT_THROW(eaq::min_symplectic_weight(a, d), eaq::DomainError);
  EXPECT_THROW(eaq::min_symplectic_weight(d, 63), eaq::ResourceError);
  EXPECT_NO_THROW(eaq::min_symplectic_weight(d, 64));
  const auto f5 = Field::prime(5);
  EXPECT_THROW(eaq::min_symplectic_weight(LinearCode::full(f5, 6)), eaq::ResourceError);
}

TEST(Params, Examples) {
  const auto pa = eaq::params(eaq::testing::code_a());
  EXPECT_EQ(pa.label(), "[[5,1,3;0]]_2");
  EXPECT_EQ(pa.pure_d, 3u);
  EXPECT_TRUE(pa.is_stabilizer_qecc);

  const auto pp = eaq::params(eaq::testing::punctured_a());
  EXPECT_EQ(pp.q, 2u);
  EXPECT_EQ(pp.n, 4u);
  EXPECT_EQ(pp.k, 1u);
  EXPECT_EQ(pp.c, 1u);
  EXPECT_EQ(pp.d, 3u);
  EXPECT_EQ(pp.pure_d, 3u);
  EXPECT_FALSE(pp.is_stabilizer_qecc);
  EXPECT_EQ(pp.label(), "[[4,1,3;1]]_2");

  const auto pz = eaq::params(LinearCode::zero(Field::prime(2), 3));
  EXPECT_EQ(pz.k, 3u);
  EXPECT_EQ(pz.c, 0u);
  EXPECT_EQ(pz.d, 1u);

  // The full space is its own hull-free extreme: c = n, k = 0, dual \ C empty.
  const auto pf = eaq::params(LinearCode::full(Field::prime(2), 2));
  EXPECT_EQ(pf.c, 2u);
  EXPECT_EQ(pf.k, 0u);
  EXPECT_FALSE(pf.d.has_value());
}

TEST(Params, SelfDualCodeUsesPureDistance) {
  // C = C^{⊥s} = <(1|0)> with n = 1; c = 0, so d is taken over dual \ {0}
  const auto f3 = Field::prime(3);
  const LinearCode c(f3, 1, Matrix(f3, 2, {{1, 0}}));
  const auto p = eaq::params(c);
  EXPECT_EQ(p.c, 0u);
  EXPECT_EQ(p.k, 0u);
  EXPECT_EQ(p.pure_d, 1u);
  EXPECT_EQ(p.d, 1u);
  EXPECT_FALSE(eaq::min_symplectic_weight(eaq::dual(c), c).has_value());
}

TEST(RandomSelfOrthogonal, Postconditions) {
  const auto f2 = Field::prime(2);
  EXPECT_EQ(eaq::random_self_orthogonal(f2, 4, 0, 1), LinearCode::zero(f2, 4));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = eaq::random_self_orthogonal(f2, 5, 4, seed);
    EXPECT_EQ(c.dimension(), 4u);
    EXPECT_EQ(eaq::dual(c).dimension(), 6u);
    EXPECT_TRUE(eaq::is_self_orthogonal(c));
  }
  EXPECT_EQ(eaq::random_self_orthogonal(Field::prime(5), 4, 3, 99), eaq::random_self_orthogonal(Field::prime(5), 4, 3, 99));
  EXPECT_THROW(eaq::random_self_orthogonal(f2, 3, 4, 0), eaq::PreconditionError);
}

class CodeProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(CodeProperties, DualityAndBilinearity) {
  const Field f = Field::of_order(GetParam());
  std::mt19937_64 rng(77 + GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = eaq::random_code(f, n, rng() % (2 * n + 1), rng());
    const auto d = eaq::dual(c);
    EXPECT_EQ(c.dimension() + d.dimension(), 2 * n);
    EXPECT_EQ(eaq::dual(d), c);
    for (std::size_t i = 0; i < c.dimension(); ++i)
      for (std::size_t j = 0; j < d.dimension(); ++j)
        ASSERT_EQ(eaq::symplectic_product(f, c.basis().row(i), d.basis().row(j)), 0);

    std::vector<eaq::Elem> x(2 * n), y(2 * n), z(2 * n), xy(2 * n);
    const auto lambda = static_cast<eaq::Elem>(rng() % f.q());
    for (std::size_t t = 0; t < 2 * n; ++t) {
      x[t] = static_cast<eaq::Elem>(rng() % f.q());
      y[t] = static_cast<eaq::Elem>(rng() % f.q());
      z[t] = static_cast<eaq::Elem>(rng() % f.q());
      xy[t] = f.add(x[t], f.mul(lambda, y[t]));
    }
    EXPECT_EQ(eaq::symplectic_product(f, xy, z),
              f.add(eaq::symplectic_product(f, x, z), f.mul(lambda, eaq::symplectic_product(f, y, z))));
    EXPECT_EQ(eaq::symplectic_product(f, x, y), f.neg(eaq::symplectic_product(f, y, x)));
    EXPECT_EQ(eaq::symplectic_product(f, x, x), 0);
  }
}

TEST_P(CodeProperties, DualMatchesExhaustiveSearch) {
  const Field f = Field::of_order(GetParam());
  std::mt19937_64 rng(5 + GetParam());
  const std::size_t max_n = GetParam() <= 3 ? 3 : 2;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + rng() % max_n;
    const auto c = eaq::random_code(f, n, rng() % (2 * n + 1), rng());
    EXPECT_EQ(eaq::dual(c), eaq::oracle::dual_by_exhaustion(c));
  }
}

TEST_P(CodeProperties, MinWeightAgreesWithIncreasingWeightOracle) {
  const Field f = Field::of_order(GetParam());
  std::mt19937_64 rng(11 + GetParam());
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto c = eaq::random_code(f, n, rng() % (2 * n + 1), rng());
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < c.dimension(); ++i) count *= f.q();
    if (count > (1u << 16)) continue;
    EXPECT_EQ(eaq::min_symplectic_weight(c), eaq::oracle::min_weight_by_increasing_weight(c));
    EXPECT_EQ(eaq::min_hamming_weight(c), eaq::oracle::min_hamming_weight_by_exhaustion(c));
  }
}

TEST_P(CodeProperties, SelfOrthogonalParams) {
  const Field f = Field::of_order(GetParam());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const auto c = eaq::random_self_orthogonal(f, n, 1 + seed % n, seed);
    const auto p = eaq::params(c);
    EXPECT_EQ(p.c, 0u);
    EXPECT_EQ(p.k, n - c.dimension());
    EXPECT_EQ(p.d, p.pure_d);
    EXPECT_TRUE(p.is_stabilizer_qecc);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, CodeProperties, ::testing::Values(2u, 3u, 4u, 5u));

}  // namespace
