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

#ifndef BLOCKEST_BLOCK_ENCODING_HPP
#define BLOCKEST_BLOCK_ENCODING_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "blockest/linalg.hpp"
#include "blockest/pauli.hpp"

namespace blockest {

/// A unitary U on C^k (x) H whose top-left D x D block, scaled by `scale`,
/// approximates a target operator A:
///
///   | A / scale - (<0|_k (x) I) U (|0>_k (x) I) | <= accuracy.
///
/// Ancilla indices are the most significant part of a row/column index:
/// index = ancilla * D + system. `cost` is an abstract gate-count ledger.
class BlockEncoding {
 public:
  // Validates unitarity (1e-10) and the ancilla/system split.
  BlockEncoding(ComplexMatrix unitary, std::size_t ancilla_dim, double scale,
                double accuracy, std::uint64_t cost);

  const ComplexMatrix& unitary() const { return unitary_; }
  std::size_t ancilla_dim() const { return ancilla_dim_; }
  std::size_t system_dim() const { return system_dim_; }
  double scale() const { return scale_; }
  double accuracy() const { return accuracy_; }
  std::uint64_t cost() const { return cost_; }

  // Top-left D x D block.
  ComplexMatrix block() const;

  // For compositions whose unitarity follows from construction; skips the
  // O(N^3) unitarity check.
  static BlockEncoding assemble(ComplexMatrix unitary, std::size_t ancilla_dim,
                                double scale, double accuracy,
                                std::uint64_t cost);

 private:
  struct Unchecked {};
  BlockEncoding(Unchecked, ComplexMatrix unitary, std::size_t ancilla_dim,
                double scale, double accuracy, std::uint64_t cost);

  ComplexMatrix unitary_;
  std::size_t ancilla_dim_;
  std::size_t system_dim_;
  double scale_;
  double accuracy_;
  std::uint64_t cost_;
};

ComplexMatrix encoded_block(const BlockEncoding& b);

// Trivial encoding: k = 1, scale 1, exact. Throws NotUnitary.
BlockEncoding encode_unitary(const ComplexMatrix& u, std::uint64_t cost = 1);

// Exact single-ancilla encoding of m / scale through unitary_dilation.
BlockEncoding encode_matrix(const ComplexMatrix& m, double scale,
                            std::uint64_t cost = 1, double accuracy = 0.0);

/// Prepare/select/unprepare encoding of a Pauli sum. The prepare register has
/// 2^ceil(log2 #terms) levels; padded branches select the identity. The sign
/// of each coefficient is folded into the select unitary.
BlockEncoding encode_pauli_sum(const PauliSum& sum);

// Encoding of prod_i A_i (leftmost factor first). Ancilla registers are
// concatenated in list order.
BlockEncoding product(std::span<const BlockEncoding> encodings);

/// Encoding of sum_i coeffs[i] A_i with scale sum_i alpha_i |coeffs[i]|.
/// A fresh prepare register (most significant) selects among the inputs,
/// which act on a shared ancilla register of size max_i k_i; the phase of
/// each coefficient is folded into the select unitary.
BlockEncoding linear_combine(std::span<const Complex> coeffs,
                             std::span<const BlockEncoding> encodings);

BlockEncoding adjoint(const BlockEncoding& b);

// Left fold of e0 + e1 + 2 sqrt(e0 e1).
double product_error_bound(std::span<const double> errors);

// Overflow-checked ledger arithmetic (throws CostOverflow).
std::uint64_t cost_add(std::uint64_t a, std::uint64_t b);
std::uint64_t cost_mul(std::uint64_t a, std::uint64_t b);

}  // namespace blockest

#endif  // BLOCKEST_BLOCK_ENCODING_HPP
