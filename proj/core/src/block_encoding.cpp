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

#include "blockest/block_encoding.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "blockest/error.hpp"
#include "src/registers.hpp"

namespace blockest {

BlockEncoding::BlockEncoding(ComplexMatrix unitary, std::size_t ancilla_dim,
                             double scale, double accuracy, std::uint64_t cost)
    : BlockEncoding(Unchecked{}, std::move(unitary), ancilla_dim, scale,
                    accuracy, cost) {
  if (!is_unitary(unitary_, kUnitaryTolerance)) {
    fail(ErrorCode::kNotUnitary, "block encoding: matrix is not unitary");
  }
}

BlockEncoding::BlockEncoding(Unchecked, ComplexMatrix unitary,
                             std::size_t ancilla_dim, double scale,
                             double accuracy, std::uint64_t cost)
    : unitary_(std::move(unitary)),
      ancilla_dim_(ancilla_dim),
      system_dim_(0),
      scale_(scale),
      accuracy_(accuracy),
      cost_(cost) {
  const auto n = static_cast<std::size_t>(unitary_.rows());
  if (unitary_.rows() != unitary_.cols() || n == 0) {
    fail(ErrorCode::kDimensionMismatch, "block encoding: matrix is not square");
  }
  if (ancilla_dim_ == 0 || n % ancilla_dim_ != 0) {
    fail(ErrorCode::kDimensionMismatch,
         "block encoding: ancilla dimension does not divide matrix size");
  }
  system_dim_ = n / ancilla_dim_;
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
    fail(ErrorCode::kOutOfRange, "block encoding: scale must be positive");
  }
  if (!(accuracy_ >= 0.0)) {
    fail(ErrorCode::kOutOfRange, "block encoding: accuracy must be >= 0");
  }
}

BlockEncoding BlockEncoding::assemble(ComplexMatrix unitary,
                                      std::size_t ancilla_dim, double scale,
                                      double accuracy, std::uint64_t cost) {
  return BlockEncoding(Unchecked{}, std::move(unitary), ancilla_dim, scale,
                       accuracy, cost);
}

ComplexMatrix BlockEncoding::block() const {
  const auto d = static_cast<Eigen::Index>(system_dim_);
  return unitary_.topLeftCorner(d, d);
}

ComplexMatrix encoded_block(const BlockEncoding& b) { return b.block(); }

std::uint64_t cost_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorCode::kCostOverflow, "gate-cost ledger overflow");
  }
  return out;
}

std::uint64_t cost_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorCode::kCostOverflow, "gate-cost ledger overflow");
  }
  return out;
}

BlockEncoding encode_unitary(const ComplexMatrix& u, std::uint64_t cost) {
  if (u.rows() != u.cols() || !is_unitary(u, kUnitaryTolerance)) {
    fail(ErrorCode::kNotUnitary, "encode_unitary: input is not unitary");
  }
  return BlockEncoding::assemble(u, 1, 1.0, 0.0, cost);
}

BlockEncoding encode_matrix(const ComplexMatrix& m, double scale,
                            std::uint64_t cost, double accuracy) {
  if (!(scale > 0.0)) fail(ErrorCode::kOutOfRange, "encode_matrix: scale <= 0");
  return BlockEncoding::assemble(unitary_dilation(m / scale), 2, scale,
                                 accuracy, cost);
}

namespace {

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// (V^dagger (x) I) SELECT (V (x) I) where V has first column `amplitudes`
// (padded to a power of two) and SELECT = sum_r |r><r| (x) selects[r], with
// identity on padded branches.
ComplexMatrix prepare_select_unprepare(const std::vector<double>& amplitudes,
                                       const std::vector<ComplexMatrix>& selects) {
  const std::size_t levels = next_power_of_two(amplitudes.size());
  const Eigen::Index m = selects.front().rows();
  ComplexVector column = ComplexVector::Zero(static_cast<Eigen::Index>(levels));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) column(i) = amplitudes[i];
  column.normalize();
  const ComplexMatrix v = unitary_with_first_column(column);
  const ComplexMatrix id = ComplexMatrix::Identity(m, m);

  const auto p_count = static_cast<Eigen::Index>(levels);
  ComplexMatrix out = ComplexMatrix::Zero(p_count * m, p_count * m);
  for (Eigen::Index r = 0; r < p_count; ++r) {
    const ComplexMatrix& sel =
        r < static_cast<Eigen::Index>(selects.size()) ? selects[r] : id;
    for (Eigen::Index p = 0; p < p_count; ++p) {
      for (Eigen::Index q = 0; q < p_count; ++q) {
        const Complex w = std::conj(v(r, p)) * v(r, q);
        if (w != Complex(0.0, 0.0)) out.block(p * m, q * m, m, m) += w * sel;
      }
    }
  }
  return out;
}

}  // namespace

BlockEncoding encode_pauli_sum(const PauliSum& sum) {
  if (sum.size() == 0) fail(ErrorCode::kEmptySum, "encode_pauli_sum: no terms");
  const double alpha = sum.scale();
  std::vector<double> amplitudes;
  std::vector<ComplexMatrix> selects;
  for (const auto& term : sum.terms()) {
    amplitudes.push_back(std::sqrt(std::abs(term.coefficient()) / alpha));
    const double sign = term.coefficient() < 0.0 ? -1.0 : 1.0;
    selects.push_back(pauli_term_matrix(PauliTerm(sign, term.word())));
  }
  ComplexMatrix u = prepare_select_unprepare(amplitudes, selects);
  const std::size_t levels = next_power_of_two(sum.size());
  return BlockEncoding::assemble(std::move(u), levels, alpha, 0.0, sum.size());
}

BlockEncoding product(std::span<const BlockEncoding> encodings) {
  if (encodings.empty()) {
    fail(ErrorCode::kLengthMismatch, "product: empty list of encodings");
  }
  if (encodings.size() == 1) return encodings.front();
  const std::size_t d = encodings.front().system_dim();
  std::size_t total_ancilla = 1;
  double scale = 1.0;
  std::uint64_t cost = 0;
  std::vector<double> errors;
  for (const auto& e : encodings) {
    if (e.system_dim() != d) {
      fail(ErrorCode::kDimensionMismatch, "product: system dimensions differ");
    }
    total_ancilla *= e.ancilla_dim();
    scale *= e.scale();
    cost = cost_add(cost, e.cost());
    errors.push_back(e.accuracy());
  }
  const auto n = static_cast<Eigen::Index>(total_ancilla * d);
  ComplexMatrix acc = ComplexMatrix::Identity(n, n);
  std::size_t before = 1;
  for (const auto& e : encodings) {
    const std::size_t after = total_ancilla / (before * e.ancilla_dim());
    detail::right_multiply_on_register(acc, e.unitary(),
                                       {before, e.ancilla_dim(), after, d});
    before *= e.ancilla_dim();
  }
  return BlockEncoding::assemble(std::move(acc), total_ancilla, scale,
                                 product_error_bound(errors), cost);
}

BlockEncoding linear_combine(std::span<const Complex> coeffs,
                             std::span<const BlockEncoding> encodings) {
  if (coeffs.size() != encodings.size()) {
    fail(ErrorCode::kLengthMismatch,
         "linear_combine: coefficient and encoding counts differ");
  }
  if (encodings.empty()) {
    fail(ErrorCode::kLengthMismatch, "linear_combine: empty list");
  }
  const std::size_t d = encodings.front().system_dim();
  std::size_t shared = 1;
  double scale = 0.0;
  double weighted_error = 0.0;
  std::uint64_t cost = 0;
  for (std::size_t i = 0; i < encodings.size(); ++i) {
    const auto& e = encodings[i];
    if (e.system_dim() != d) {
      fail(ErrorCode::kDimensionMismatch,
           "linear_combine: system dimensions differ");
    }
    shared = std::max(shared, e.ancilla_dim());
    const double weight = e.scale() * std::abs(coeffs[i]);
    scale += weight;
    weighted_error += weight * e.accuracy();
    cost = cost_add(cost, e.cost());
  }
  if (!(scale > 0.0)) {
    fail(ErrorCode::kOutOfRange, "linear_combine: all coefficients vanish");
  }
  const auto m = static_cast<Eigen::Index>(shared * d);
  std::vector<double> amplitudes;
  std::vector<ComplexMatrix> selects;
  for (std::size_t i = 0; i < encodings.size(); ++i) {
    const auto& e = encodings[i];
    const double mag = std::abs(coeffs[i]);
    amplitudes.push_back(std::sqrt(e.scale() * mag / scale));
    const Complex phase = mag > 0.0 ? coeffs[i] / mag : Complex(1.0, 0.0);
    ComplexMatrix sel = ComplexMatrix::Identity(m, m);
    const Eigen::Index own = e.unitary().rows();
    sel.topLeftCorner(own, own) = e.unitary();
    selects.push_back(phase * sel);
  }
  ComplexMatrix u = prepare_select_unprepare(amplitudes, selects);
  const std::size_t levels = next_power_of_two(encodings.size());
  return BlockEncoding::assemble(std::move(u), levels * shared, scale,
                                 weighted_error / scale, cost);
}

BlockEncoding adjoint(const BlockEncoding& b) {
  return BlockEncoding::assemble(b.unitary().adjoint(), b.ancilla_dim(),
                                 b.scale(), b.accuracy(), b.cost());
}

double product_error_bound(std::span<const double> errors) {
  double acc = 0.0;
  bool first = true;
  for (double e : errors) {
    if (!(e >= 0.0)) {
      fail(ErrorCode::kOutOfRange, "product_error_bound: negative error");
    }
    if (first) {
      acc = e;
      first = false;
    } else {
      acc = acc + e + 2.0 * std::sqrt(acc * e);
    }
  }
  return acc;
}

}  // namespace blockest
