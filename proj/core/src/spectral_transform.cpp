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

#include "blockest/spectral_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blockest/error.hpp"
#include "src/dct.hpp"

namespace blockest {

double evolution_cost(std::uint64_t q, double alpha, double t, double eps) {
  if (q < 1 || !(alpha > 0.0) || !(eps > 0.0 && eps < 1.0) || !std::isfinite(t)) {
    fail(ErrorCode::kOutOfRange,
         "evolution_cost needs Q >= 1, alpha > 0, eps in (0,1)");
  }
  if (t == 0.0) return 0.0;
  const double qd = static_cast<double>(q);
  const double at = alpha * std::abs(t);
  const double log_inv = std::log(1.0 / eps);
  return qd * at + qd * log_inv / std::log(std::numbers::e + log_inv / at);
}

BlockEncoding evolution_encoding(const PauliSum& h, double t, double eps) {
  const double cost = evolution_cost(h.size(), h.scale(), t, eps);
  if (!(cost < 1.8e19)) {
    fail(ErrorCode::kCostOverflow, "evolution cost overflows the ledger");
  }
  return BlockEncoding::assemble(hermitian_exp(pauli_sum_matrix(h), t), 1, 1.0,
                                 eps, static_cast<std::uint64_t>(std::ceil(cost)));
}

namespace {

void check_exact_hermitian(const BlockEncoding& b) {
  if (b.accuracy() != 0.0) {
    fail(ErrorCode::kInexactInput, "chebyshev_encoding needs an exact encoding");
  }
  if (!is_hermitian(b.block(), 1e-8)) {
    fail(ErrorCode::kNotHermitian, "chebyshev_encoding: block is not Hermitian");
  }
}

// R U^dagger R U, with R = +1 on the first D indices and -1 elsewhere.
ComplexMatrix walk_pair(const BlockEncoding& b) {
  const auto d = static_cast<Eigen::Index>(b.system_dim());
  const auto n = b.unitary().rows();
  ComplexMatrix ru = b.unitary();
  ru.bottomRows(n - d) *= -1.0;
  ComplexMatrix rud = b.unitary().adjoint();
  rud.bottomRows(n - d) *= -1.0;
  return rud * ru;
}

}  // namespace

void for_each_chebyshev_encoding(
    const BlockEncoding& b, std::size_t max_order,
    const std::function<void(std::size_t, const BlockEncoding&)>& visit) {
  check_exact_hermitian(b);
  const auto n = b.unitary().rows();
  const ComplexMatrix pair = walk_pair(b);
  ComplexMatrix even = ComplexMatrix::Identity(n, n);
  ComplexMatrix odd = b.unitary();
  for (std::size_t order = 0; order <= max_order; ++order) {
    ComplexMatrix& current = order % 2 == 0 ? even : odd;
    if (order >= 2) current = current * pair;
    visit(order, BlockEncoding::assemble(current, b.ancilla_dim(), 1.0, 0.0,
                                         cost_mul(order, b.cost())));
  }
}

BlockEncoding chebyshev_encoding(const BlockEncoding& b, std::size_t n) {
  check_exact_hermitian(b);
  const auto dim = b.unitary().rows();
  const ComplexMatrix pair = walk_pair(b);
  ComplexMatrix w = n % 2 == 0 ? ComplexMatrix::Identity(dim, dim) : b.unitary();
  for (std::size_t i = 0; i < n / 2; ++i) w = w * pair;
  return BlockEncoding::assemble(std::move(w), b.ancilla_dim(), 1.0, 0.0,
                                 cost_mul(n, b.cost()));
}

BlockEncoding apply_polynomial(const BlockEncoding& b, const ChebyshevPoly& p,
                               double delta) {
  if (!(delta >= 0.0)) {
    fail(ErrorCode::kOutOfRange, "apply_polynomial: delta must be >= 0");
  }
  const ComplexMatrix block = b.block();
  if (!is_hermitian(block, 1e-8)) {
    fail(ErrorCode::kNotHermitian, "apply_polynomial: block is not Hermitian");
  }
  const std::size_t n_ext = std::max<std::size_t>(2 * p.degree(), 1);
  for (double v : detail::extrema_values_from_coeffs(p.coeffs(), n_ext)) {
    if (std::abs(v) > 1.0 + 1e-9) {
      fail(ErrorCode::kPolyNotBounded, "apply_polynomial: |p| exceeds 1 on [-1,1]");
    }
  }
  const HermitianEigen eig = eig_hermitian(block, 1e-8);
  const ComplexMatrix half = apply_spectral(eig, [&p](double x) {
    return Complex(0.5 * p(std::clamp(x, -1.0, 1.0)), 0.0);
  });
  const ComplexMatrix dil = unitary_dilation(half);

  const auto d = static_cast<Eigen::Index>(b.system_dim());
  const auto k = static_cast<Eigen::Index>(b.ancilla_dim());
  ComplexMatrix u = ComplexMatrix::Zero(2 * k * d, 2 * k * d);
  for (Eigen::Index f = 0; f < 2; ++f) {
    for (Eigen::Index g = 0; g < 2; ++g) {
      for (Eigen::Index a = 0; a < k; ++a) {
        u.block((f * k + a) * d, (g * k + a) * d, d, d) =
            dil.block(f * d, g * d, d, d);
      }
    }
  }
  return BlockEncoding::assemble(std::move(u), 2 * b.ancilla_dim(), 2.0, delta,
                                 cost_mul(p.degree(), b.cost()));
}

}  // namespace blockest
