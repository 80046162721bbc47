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

#ifndef BLOCKEST_SPECTRAL_TRANSFORM_HPP
#define BLOCKEST_SPECTRAL_TRANSFORM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>

#include "blockest/block_encoding.hpp"
#include "blockest/chebyshev.hpp"
#include "blockest/pauli.hpp"

namespace blockest {

/// Q alpha |t| + Q ln(1/eps) / ln(e + ln(1/eps) / (alpha |t|)), and 0 at
/// t = 0. Throws OutOfRange unless Q >= 1, alpha > 0 and eps in (0,1).
double evolution_cost(std::uint64_t q, double alpha, double t, double eps);

/// exp(i H t), computed spectrally. The accuracy field records eps and the
/// cost is ceil(evolution_cost(#terms, scale, t, eps)).
BlockEncoding evolution_encoding(const PauliSum& h, double t, double eps);

/// Encoding of T_n(A) for an exact encoding U of a Hermitian block A, by
/// alternating U and U^dagger with the reflection R = (2|0><0|_k - I) (x) I:
/// W_0 = I, W_1 = U, W_{n+2} = W_n R U^dagger R U. Cost n Q.
/// Throws NotHermitian (1e-8) or InexactInput (accuracy != 0).
BlockEncoding chebyshev_encoding(const BlockEncoding& b, std::size_t n);

// Calls visit(n, encoding of T_n(A)) for n = 0..max_order, reusing each
// walk operator for the next order.
void for_each_chebyshev_encoding(
    const BlockEncoding& b, std::size_t max_order,
    const std::function<void(std::size_t, const BlockEncoding&)>& visit);

/// Encoding whose block is p(A)/2 (so scale = 2), for |p| <= 1 on [-1, 1].
/// p(A)/2 is applied through the eigendecomposition of the block and
/// dilated with one extra qubit, placed above b's (idle) ancilla register:
/// ancilla_dim = 2 k. Accuracy = delta; cost = degree(p) * cost(b).
/// Throws PolyNotBounded or NotHermitian.
BlockEncoding apply_polynomial(const BlockEncoding& b, const ChebyshevPoly& p,
                               double delta);

}  // namespace blockest

#endif  // BLOCKEST_SPECTRAL_TRANSFORM_HPP
