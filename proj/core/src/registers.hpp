// Copyright 2026 The blockest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKEST_SRC_REGISTERS_HPP
#define BLOCKEST_SRC_REGISTERS_HPP

#include <cstddef>
#include <vector>

#include "blockest/linalg.hpp"

namespace blockest::detail {

// Index space C^before (x) C^own (x) C^after (x) C^system, most significant
// first. An operator on (own, system) acts blockwise on each group of
// indices sharing the same (before, after) values.
struct RegisterLayout {
  std::size_t before;
  std::size_t own;
  std::size_t after;
  std::size_t system;
};

std::vector<std::vector<Eigen::Index>> register_groups(const RegisterLayout& layout);

// acc <- acc * (op embedded on the `own` register and the system).
void right_multiply_on_register(ComplexMatrix& acc, const ComplexMatrix& op,
                                const RegisterLayout& layout);

}  // namespace blockest::detail

#endif  // BLOCKEST_SRC_REGISTERS_HPP
