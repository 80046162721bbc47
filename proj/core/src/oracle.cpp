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

#include "blockest/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "blockest/error.hpp"

namespace blockest {

namespace {

double chebyshev_value(std::size_t n, double x) {
  return std::cos(static_cast<double>(n) * std::acos(std::clamp(x, -1.0, 1.0)));
}

void check_dims(const ComplexMatrix& m, std::size_t d, const char* what) {
  if (m.rows() != static_cast<Eigen::Index>(d) ||
      m.cols() != static_cast<Eigen::Index>(d)) {
    fail(ErrorCode::kDimensionMismatch, std::string("oracle: ") + what +
                                            " does not match the Hamiltonian");
  }
}

void check_scale(const HermitianEigen& eig, double alpha) {
  const double norm = std::max(std::abs(eig.values(0)),
                               std::abs(eig.values(eig.values.size() - 1)));
  if (!(alpha > 0.0) || norm / alpha > 1.0 + 1e-9) {
    fail(ErrorCode::kScaleTooSmall, "oracle: |H| / alpha exceeds 1");
  }
}

}  // namespace

Complex oracle_correlation(const PauliSum& h,
                           std::span<const TimedObservable> observables,
                           const ComplexMatrix& rho) {
  const ComplexMatrix hm = pauli_sum_matrix(h);
  check_dims(rho, h.dimension(), "state");
  const auto d = hm.rows();
  ComplexMatrix prod = ComplexMatrix::Identity(d, d);
  for (const auto& o : observables) {
    if (o.observable.qubits() != h.qubits()) {
      fail(ErrorCode::kDimensionMismatch, "oracle: observable size differs");
    }
    const ComplexMatrix fwd = hermitian_exp(hm, o.time);
    prod = prod * fwd * pauli_sum_matrix(o.observable) * fwd.adjoint();
  }
  return (rho * prod).trace();
}

double oracle_dos_integral(const PauliSum& h, double a, double b,
                           const std::optional<ComplexMatrix>& weight) {
  if (!(a < b)) fail(ErrorCode::kBadInterval, "oracle: interval needs a < b");
  const HermitianEigen eig = eig_hermitian(pauli_sum_matrix(h));
  const auto d = eig.values.size();
  ComplexMatrix w;
  if (weight) {
    check_dims(*weight, h.dimension(), "weight operator");
    w = *weight;
  } else {
    w = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  }
  double mass = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (eig.values(i) >= a && eig.values(i) <= b) {
      const auto v = eig.vectors.col(i);
      mass += v.dot(w * v).real();
    }
  }
  return mass;
}

std::vector<double> oracle_moments(const PauliSum& h, double alpha, std::size_t n,
                                   const ComplexMatrix& weight) {
  const HermitianEigen eig = eig_hermitian(pauli_sum_matrix(h));
  check_scale(eig, alpha);
  check_dims(weight, h.dimension(), "weight operator");
  const auto d = eig.values.size();
  std::vector<double> diag(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto v = eig.vectors.col(i);
    diag[static_cast<std::size_t>(i)] = v.dot(weight * v).real();
  }
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t m = 0; m <= n; ++m) {
    for (Eigen::Index i = 0; i < d; ++i) {
      out[m] += chebyshev_value(m, eig.values(i) / alpha) *
                diag[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

Complex oracle_response(const PauliSum& h, const PauliSum& b_op,
                        const PauliSum& c_op, const ComplexMatrix& rho,
                        const ResponseQuery& query) {
  const HermitianEigen eig = eig_hermitian(pauli_sum_matrix(h));
  check_dims(rho, h.dimension(), "state");
  if (b_op.qubits() != h.qubits() || c_op.qubits() != h.qubits()) {
    fail(ErrorCode::kDimensionMismatch, "oracle: response operators differ in size");
  }
  std::function<Complex(double)> f;
  if (query.kind == ResponseQuery::Kind::kIntegral) {
    if (!(query.a < query.b)) {
      fail(ErrorCode::kBadInterval, "oracle: interval needs a < b");
    }
    f = [&](double e) {
      return Complex(e >= query.a && e <= query.b ? 1.0 : 0.0, 0.0);
    };
  } else {
    check_scale(eig, query.alpha);
    f = [&](double e) { return Complex(chebyshev_value(query.n, e / query.alpha), 0.0); };
  }
  const ComplexMatrix fh = apply_spectral(eig, f);
  return (rho * pauli_sum_matrix(b_op) * fh * pauli_sum_matrix(c_op)).trace();
}

}  // namespace blockest
