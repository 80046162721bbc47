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

#ifndef BLOCKEST_ESTIMATION_HPP
#define BLOCKEST_ESTIMATION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "blockest/block_encoding.hpp"
#include "blockest/linalg.hpp"
#include "blockest/state_prep.hpp"

namespace blockest {

enum class EstimationMode { kExact, kSampled };

std::string to_string(EstimationMode mode);

// Constant C in the Grover-query budget ceil(C / eps * ln(1 / delta)).
inline constexpr double kQueryBudgetConstant = 80.0;

// delta is clamped to at most 1/2 before the logarithm is taken.
std::uint64_t amplitude_query_budget(double eps, double delta);

struct EstimationResult {
  Complex value;
  double target_eps = 0.0;
  double delta = 0.0;
  std::uint64_t grover_queries = 0;
  EstimationMode mode = EstimationMode::kExact;
  std::optional<std::uint64_t> seed;
  // grover_queries times the gate cost of one Grover step.
  std::uint64_t gate_cost = 0;

  double confidence() const { return 1.0 - delta; }
};

/// A state |Psi> and a projector Pi, stored through an orthonormal basis of
/// the range of Pi.
class AmplitudeProblem {
 public:
  // Validates Pi^2 = Pi (1e-9) and Pi = Pi^dagger (1e-10); throws
  // InvalidProjector.
  AmplitudeProblem(ComplexVector psi, const ComplexMatrix& projector);

  // Columns of range_basis must be orthonormal (1e-9).
  static AmplitudeProblem from_range(ComplexVector psi, ComplexMatrix range_basis);

  const ComplexVector& psi() const { return psi_; }
  const ComplexMatrix& range_basis() const { return range_; }
  ComplexMatrix projector() const;

  // |Pi |Psi>|.
  double true_amplitude() const;

 private:
  AmplitudeProblem() = default;

  ComplexVector psi_;
  ComplexMatrix range_;
};

// -(I - 2 Pi)(I - 2 |Psi><Psi|).
ComplexMatrix grover_operator(const AmplitudeProblem& p);

/// Estimates |Pi |Psi>| to additive eps with probability >= 1 - delta.
/// Sampled mode runs iterative amplitude estimation: Grover powers m are
/// chosen so that the current confidence interval maps into a half period of
/// sin^2((2m+1) theta), outcomes are Bernoulli draws with that probability,
/// and Hoeffding intervals are intersected until the angle is pinned to
/// within 2 eps. Exact mode returns the true amplitude and reports the query
/// budget. Throws OutOfRange unless eps, delta lie in (0,1).
EstimationResult estimate_amplitude(const AmplitudeProblem& p, double eps,
                                    double delta, EstimationMode mode,
                                    std::uint64_t seed = 0);

// Same, given the amplitude itself.
EstimationResult estimate_amplitude(double amplitude, double eps, double delta,
                                    EstimationMode mode, std::uint64_t seed = 0);

/// Estimates Tr(rho A) for a Hermitian block A = scale * block(a). The shifted
/// operator (I + A/alpha)/2 is positive, so the amplitude of
/// |0>_k|rho> in (U (x) I)|0>_k|rho> equals Tr(rho (I + A/alpha)/2); it is
/// estimated to eps / (2 alpha) and mapped back.
/// Throws NotHermitian (1e-8), DimensionMismatch or OutOfRange.
EstimationResult estimate_observable(const BlockEncoding& a,
                                     const PreparationUnitary& rho, double eps,
                                     double delta, EstimationMode mode,
                                     std::uint64_t seed = 0);

/// Tr(rho Gamma) for a general block, from the Hermitian parts
/// (Gamma + Gamma^dagger)/2 and (Gamma - Gamma^dagger)/(2i), each estimated
/// to eps with confidence 1 - delta. The imaginary part uses seed + 1.
EstimationResult estimate_complex(const BlockEncoding& g,
                                  const PreparationUnitary& rho, double eps,
                                  double delta, EstimationMode mode,
                                  std::uint64_t seed = 0);

}  // namespace blockest

#endif  // BLOCKEST_ESTIMATION_HPP
