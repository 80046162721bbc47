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

#include "src/registers.hpp"

#include "blockest/error.hpp"

namespace blockest::detail {

std::vector<std::vector<Eigen::Index>> register_groups(const RegisterLayout& l) {
  std::vector<std::vector<Eigen::Index>> groups;
  groups.reserve(l.before * l.after);
  for (std::size_t b = 0; b < l.before; ++b) {
    for (std::size_t a = 0; a < l.after; ++a) {
      std::vector<Eigen::Index> idx;
      idx.reserve(l.own * l.system);
      for (std::size_t o = 0; o < l.own; ++o) {
        for (std::size_t s = 0; s < l.system; ++s) {
          idx.push_back(static_cast<Eigen::Index>(
              ((b * l.own + o) * l.after + a) * l.system + s));
        }
      }
      groups.push_back(std::move(idx));
    }
  }
  return groups;
}

void right_multiply_on_register(ComplexMatrix& acc, const ComplexMatrix& op,
                                const RegisterLayout& layout) {
  const auto width = static_cast<Eigen::Index>(layout.own * layout.system);
  if (op.rows() != width || op.cols() != width) {
    fail(ErrorCode::kDimensionMismatch, "register operator has the wrong size");
  }
  for (const auto& idx : register_groups(layout)) {
    const ComplexMatrix cols = acc(Eigen::all, idx) * op;
    acc(Eigen::all, idx) = cols;
  }
}

}  // namespace blockest::detail
