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

#ifndef BLOCKEST_COMPLEXITY_HPP
#define BLOCKEST_COMPLEXITY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blockest {

/// Big-O circuit-complexity expressions evaluated with unit constants.
/// Logarithms are natural except log2 D for the maximally mixed state.
struct ComplexityReport {
  std::string algorithm;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> breakdown;
  double total = 0.0;

  // Value of a named input or breakdown entry; throws OutOfRange if absent.
  double at(const std::string& key) const;
};

/// n-time correlation function. With eps0 = eps / (2 (n+1)^2):
///   W        = sum R_j + sum_{j=0..n} T(tau_j, eps0)
///   W_loose  = sum R_j + Q alpha sum |tau_j| + Q (n+1) ln(1/eps0)   (>= W)
///   W_round  = sum R_j + Q alpha sum |tau_j| + Q n^2 ln(n/eps)
///   total    = (S + W) (gamma/eps) ln(1/delta)
/// tau_j are the differences of the times padded with zeros at both ends.
ComplexityReport correlation_report(std::uint64_t q, double alpha,
                                    std::span<const std::uint64_t> observable_costs,
                                    std::span<const double> times,
                                    std::uint64_t state_cost, double gamma,
                                    double eps, double delta);

/// (Q (rho_max/eps) ln(rho_max/eps) + P) (1/eps) ln(1/delta), where P is
/// log2 D, or the preparation cost R for a local density of states.
ComplexityReport dos_integral_report(std::uint64_t q, double rho_max, double eps,
                                     double delta, double prep_term, bool local);

// (Q n + P) (1/eps) ln(1/delta).
ComplexityReport dos_moment_report(std::uint64_t q, std::size_t n, double eps,
                                   double delta, double prep_term, bool local);

/// (Q d + S_B + S_C + R) (beta gamma / eps) ln(1/delta) with
/// d = (rho_max beta gamma / eps) ln(rho_max beta gamma / eps).
ComplexityReport response_integral_report(std::uint64_t q, double rho_max,
                                          double beta, double gamma,
                                          std::uint64_t s_b, std::uint64_t s_c,
                                          std::uint64_t r, double eps,
                                          double delta);

// (Q n + S_B + S_C + R) (beta gamma / eps), without a confidence factor.
ComplexityReport response_moment_report(std::uint64_t q, std::size_t n,
                                        double beta, double gamma,
                                        std::uint64_t s_b, std::uint64_t s_c,
                                        std::uint64_t r, double eps, double delta);

}  // namespace blockest

#endif  // BLOCKEST_COMPLEXITY_HPP
