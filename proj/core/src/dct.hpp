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

#ifndef BLOCKEST_SRC_DCT_HPP
#define BLOCKEST_SRC_DCT_HPP

#include <cstddef>
#include <vector>

namespace blockest::detail {

// cos(pi (j + 1/2) / m), j = 0..m-1 (descending).
std::vector<double> gauss_nodes(std::size_t m);

// Chebyshev coefficients c_0..c_{m-1} of the degree m-1 interpolant through
// values at gauss_nodes(m).
std::vector<double> coeffs_from_gauss_values(const std::vector<double>& values);

// sum_k c_k T_k at gauss_nodes(m), m >= coeffs.size().
std::vector<double> gauss_values_from_coeffs(const std::vector<double>& coeffs,
                                             std::size_t m);

// sum_k c_k T_k at cos(pi j / n), j = 0..n, n >= coeffs.size() - 1.
std::vector<double> extrema_values_from_coeffs(const std::vector<double>& coeffs,
                                               std::size_t n);

}  // namespace blockest::detail

#endif  // BLOCKEST_SRC_DCT_HPP
