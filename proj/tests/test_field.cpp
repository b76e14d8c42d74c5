/**************************************************************************
 * test_field.cpp
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

#include <vector>

#include "eaq/field.hpp"
#include "oracles.hpp"

namespace {

using eaq::DomainError;
using eaq::Field;

std::vector<Field> small_fields() {
  return {Field::of_order(2), Field::of_order(3), Field::of_order(4), Field::of_order(5), Field::of_order(7),
          Field::of_order(8), Field::of_order(9), Field::extension(2, 4, {1, 1, 0, 0, 1})};
}

TEST(Field, AddExamples) {
  EXPECT_EQ(Field::prime(2).add(1, 1), 0);
  EXPECT_EQ(Field::prime(5).add(3, 4), 2);
  EXPECT_EQ(Field::of_order(4).add(2, 3), 1);
}

TEST(Field, MulExamples) {
  const auto f4 = Field::of_order(4);
  EXPECT_EQ(f4.mul(2, 2), 3);
  EXPECT_EQ(f4.mul(2, 2), eaq::oracle::poly_field_mul(2, 2, 2, {1, 1, 1}));
  EXPECT_EQ(Field::prime(5).mul(2, 3), 1);
  for (const auto& f : small_fields())
    for (auto x : f.elements()) EXPECT_EQ(f.mul(x, 0), 0);
}

TEST(Field, NegInvExamples) {
  EXPECT_EQ(Field::prime(2).neg(1), 1);
  EXPECT_EQ(Field::prime(5).inv(2), 3);
  EXPECT_EQ(Field::of_order(4).inv(2), 3);
  EXPECT_THROW(Field::prime(7).inv(0), DomainError);
}

TEST(Field, Enumerate) {
  EXPECT_EQ(Field::prime(2).elements(), (std::vector<eaq::Elem>{0, 1}));
  EXPECT_EQ(Field::prime(3).elements(), (std::vector<eaq::Elem>{0, 1, 2}));
  EXPECT_EQ(Field::of_order(4).elements(), (std::vector<eaq::Elem>{0, 1, 2, 3}));
}

TEST(Field, TablesMatchSchoolbookMultiplication) {
  for (const auto& f : small_fields()) {
    if (f.m() == 1) continue;
    for (unsigned a = 0; a < f.q(); ++a)
      for (unsigned b = 0; b < f.q(); ++b)
        ASSERT_EQ(f.mul(a, b), eaq::oracle::poly_field_mul(a, b, f.p(), f.modulus())) << f.name() << " " << a << "*" << b;
  }
}

TEST(Field, AxiomsExhaustive) {
  for (const auto& f : small_fields()) {
    const auto all = f.elements();
    for (auto a : all) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1);
        EXPECT_EQ(f.inv(a), f.pow(a, f.q() - 2));  // inverse by table search agrees with Fermat
        EXPECT_EQ(f.pow(a, f.q() - 1), 1);
      }
      for (auto b : all) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (auto c : all) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, RejectsBadDescriptions) {
  EXPECT_THROW(Field::prime(4), DomainError);
  EXPECT_THROW(Field::prime(1), DomainError);
  EXPECT_THROW(Field::of_order(6), DomainError);
  EXPECT_THROW(Field::of_order(16), DomainError);             // no built-in polynomial
  EXPECT_THROW(Field::extension(2, 2, {1, 0, 1}), DomainError);  // x^2 + 1 = (x + 1)^2
  EXPECT_THROW(Field::extension(2, 4, {1, 0, 1, 0, 1}), DomainError);  // (x^2 + x + 1)^2
  EXPECT_THROW(Field::extension(2, 2, {1, 1, 2}), DomainError);
  EXPECT_THROW(Field::extension(2, 2, {1, 1, 0}), DomainError);  // not monic
  EXPECT_THROW(Field::extension(2, 2, {1, 1}), DomainError);
  EXPECT_THROW(Field::prime(257), DomainError);
  EXPECT_THROW(Field::extension(2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}), DomainError);
  EXPECT_NO_THROW(Field::extension(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}));
  EXPECT_NO_THROW(Field::extension(3, 3, {1, 2, 0, 1}));
}

TEST(Field, OutOfRangeCodes) {
  const auto f5 = Field::prime(5);
  EXPECT_THROW(f5.add(5, 1), DomainError);
  EXPECT_THROW(f5.mul(1, 9), DomainError);
}

TEST(FieldElement, MismatchedFieldsThrow) {
  const eaq::FieldElement a(Field::prime(5), 3), b(Field::prime(5), 4), c(Field::prime(7), 1);
  EXPECT_EQ((a + b).code(), 2);
  EXPECT_EQ((a * b).code(), 2);
  EXPECT_EQ((a / a).code(), 1);
  EXPECT_THROW(a + c, DomainError);
  EXPECT_THROW(a * c, DomainError);
  EXPECT_THROW(eaq::FieldElement(Field::prime(5), 5), DomainError);
  const eaq::FieldElement x(Field::of_order(4), 2);
  EXPECT_EQ((x * x).code(), 3);
  EXPECT_EQ(x.inverse().code(), 3);
}

}  // namespace
