/**************************************************************************
 * samples.hpp
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

#include <string_view>

#include "io.hpp"
#include "symplectic_code.hpp"

namespace eaq::samples {

// Same content as data/code_A.txt.
inline constexpr std::string_view kCodeA =
    "# [[5,1,3;0]]_2 stabilizer code A\n"
    "q 2\n"
    "n 5\n"
    "1 0 0 1 0 | 0 1 1 0 0\n"
    "0 1 0 0 1 | 0 0 1 1 0\n"
    "1 0 1 0 0 | 0 0 0 1 1\n"
    "0 1 0 1 0 | 1 0 0 0 1\n";

/// The binary [[5,1,3;0]] stabilizer code used throughout the tests and docs.
inline LinearCode code_a() { return parse_code_file(kCodeA); }

}  // namespace eaq::samples
