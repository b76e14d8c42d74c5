/**************************************************************************
 * example1.hpp
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

// Bases listed for the binary [[5,1,3;0]] code A and the codes derived from it
// by puncturing/shortening at position 3.

#include <vector>

#include "eaq/eaq.hpp"

namespace eaq::testing {

using Rows = std::vector<std::vector<unsigned>>;

inline const Rows kCodeARows = {
    {1, 0, 0, 1, 0, 0, 1, 1, 0, 0},
    {0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 1, 1},
    {0, 1, 0, 1, 0, 1, 0, 0, 0, 1},
};

inline const Rows kDualARows = {
    {1, 0, 0, 1, 0, 0, 1, 1, 0, 0},
    {0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 1, 1},
    {0, 1, 0, 1, 0, 1, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 1, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
};

inline const Rows kPuncturedRows = {
    {1, 0, 1, 0, 0, 1, 0, 0},
    {0, 1, 0, 1, 0, 0, 1, 0},
    {1, 0, 0, 0, 0, 0, 1, 1},
    {0, 1, 1, 0, 1, 0, 0, 1},
};

inline const Rows kShortenedDualRows = {
    {1, 0, 1, 0, 1, 0, 1, 1},
    {0, 1, 0, 1, 1, 1, 0, 1},
    {0, 1, 1, 0, 1, 0, 0, 1},
    {0, 0, 0, 1, 1, 0, 1, 0},
};

inline LinearCode binary_code(std::size_t n, const Rows& rows) {
  const Field f2 = Field::prime(2);
  return {f2, n, Matrix(f2, 2 * n, rows)};
}

inline LinearCode code_a() { return binary_code(5, kCodeARows); }
inline LinearCode dual_a() { return binary_code(5, kDualARows); }
inline LinearCode punctured_a() { return binary_code(4, kPuncturedRows); }
inline LinearCode shortened_dual_a() { return binary_code(4, kShortenedDualRows); }

}  // namespace eaq::testing
