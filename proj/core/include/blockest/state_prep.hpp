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

#ifndef BLOCKEST_STATE_PREP_HPP
#define BLOCKEST_STATE_PREP_HPP

#include <cstddef>
#include <cstdint>

#include "blockest/linalg.hpp"
#include "blockest/pauli.hpp"

namespace blockest {

/// A unitary on H (x) C^l that maps a designated basis vector to a
/// purification |rho> of a density operator rho on H. Indices are
/// system * l + purifier.
///
/// Constructions that only fix the image of the start vector store |rho>
/// and complete it to a unitary on demand.
class PreparationUnitary {
 public:
  // Validates unitarity (1e-10) and the system/purifier split.
  PreparationUnitary(ComplexMatrix unitary, std::size_t purifier_dim,
                     std::uint64_t cost, std::size_t zero_state_index = 0);

  // Start vector index 0; throws NotNormalized if |state| != 1.
  static PreparationUnitary from_state(ComplexVector state,
                                       std::size_t purifier_dim,
                                       std::uint64_t cost);

  ComplexMatrix unitary() const;
  std::size_t purifier_dim() const { return purifier_dim_; }
  std::size_t system_dim() const { return system_dim_; }
  std::uint64_t cost() const { return cost_; }
  std::size_t zero_state_index() const { return zero_state_index_; }

  // |rho>, the image of the designated basis vector.
  const ComplexVector& state() const { return state_; }

 private:
  PreparationUnitary() = default;
  void set_dims(std::size_t total, std::size_t purifier_dim);

  ComplexVector state_;
  ComplexMatrix unitary_;  // empty when completed on demand
  std::size_t purifier_dim_ = 1;
  std::size_t system_dim_ = 1;
  std::uint64_t cost_ = 0;
  std::size_t zero_state_index_ = 0;
};

// Tr_{C^l} |rho><rho|.
ComplexMatrix reduced_density(const PreparationUnitary& p);

// l = 1, first column v, cost D. Throws NotNormalized.
PreparationUnitary prepare_pure(const ComplexVector& v);

// Computational basis state |index> in dimension D. Throws OutOfRange.
PreparationUnitary prepare_basis(std::size_t system_dim, std::size_t index);

struct AmplificationParams {
  std::size_t k;
  double gamma;
};

/// Smallest k with (2k+1) asin(beta) >= pi/2 and the damping gamma <= 1 that
/// makes sin((2k+1) asin(gamma beta)) = 1, so k Grover steps rotate the
/// state exactly onto the good subspace. Throws OutOfRange unless
/// 0 < beta <= 1.
AmplificationParams exact_amplification_params(double beta);

// Qubit count, overlap and amplification schedule used for dimension D.
struct MaximallyMixedPlan {
  std::size_t qubits;  // ceil(log2 D)
  double beta;         // sqrt(D / 2^qubits)
  AmplificationParams amplification;
};

MaximallyMixedPlan maximally_mixed_plan(std::size_t system_dim);

/// Purification of I/D by exact amplitude amplification. A Bell pair on two
/// n-qubit registers (n = ceil(log2 D)) is damped by a flag-qubit rotation
/// and amplified onto the subspace where the first register is below D. The
/// purifier is the second register plus the flag (l = 2^(n+1)). Cost is
/// 2 ceil(log2 D).
PreparationUnitary prepare_maximally_mixed(std::size_t system_dim);

struct ThermalPreparation {
  PreparationUnitary preparation;
  double cost_estimate;
};

/// exp(-beta H)/Z purified as sum_i sqrt(p_i) |psi_i>|i> (l = D). The cost
/// estimate is Q alpha sqrt(D beta / Z) ln(sqrt(D/Z) / eps), clamped at zero,
/// with Q = #terms and alpha = h.scale(). Throws OutOfRange for beta < 0.
ThermalPreparation prepare_thermal(const PauliSum& h, double beta,
                                   double eps = 1e-3);

double thermal_cost_estimate(const PauliSum& h, double beta, double eps = 1e-3);

}  // namespace blockest

#endif  // BLOCKEST_STATE_PREP_HPP
