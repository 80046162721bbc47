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

#ifndef BLOCKEST_ORACLE_HPP
#define BLOCKEST_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blockest/linalg.hpp"
#include "blockest/pauli.hpp"

namespace blockest {

// Tr(rho prod_i e^{iHt_i} O_i e^{-iHt_i}) by dense exponentials.
Complex oracle_correlation(const PauliSum& h,
                           std::span<const TimedObservable> observables,
                           const ComplexMatrix& rho);

/// Spectral mass of H in the closed interval [a, b]: Tr(P A) where P
/// projects onto the eigenvectors with eigenvalue in [a, b] and A is the
/// weight operator (I/D when absent; |r><r| for a local density of states).
/// Throws BadInterval unless a < b.
double oracle_dos_integral(const PauliSum& h, double a, double b,
                           const std::optional<ComplexMatrix>& weight = std::nullopt);

/// [Tr(A T_n(H/alpha)) for n = 0..N]. Throws ScaleTooSmall if
/// |H| / alpha > 1 (1e-9 slack).
std::vector<double> oracle_moments(const PauliSum& h, double alpha, std::size_t n,
                                   const ComplexMatrix& weight);

struct ResponseQuery {
  enum class Kind { kIntegral, kMoment } kind;
  double a = 0.0;
  double b = 0.0;
  std::size_t n = 0;
  double alpha = 1.0;

  static ResponseQuery integral(double a, double b) {
    return {Kind::kIntegral, a, b, 0, 1.0};
  }
  static ResponseQuery moment(std::size_t n, double alpha) {
    return {Kind::kMoment, 0.0, 0.0, n, alpha};
  }
};

/// Tr(rho B f(H) C) with f the indicator of [a, b] (closed) or T_n(x/alpha).
Complex oracle_response(const PauliSum& h, const PauliSum& b_op,
                        const PauliSum& c_op, const ComplexMatrix& rho,
                        const ResponseQuery& query);

}  // namespace blockest

#endif  // BLOCKEST_ORACLE_HPP
