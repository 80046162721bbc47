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

#include "blockest/state_prep.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "blockest/error.hpp"

namespace blockest {

void PreparationUnitary::set_dims(std::size_t total, std::size_t purifier_dim) {
  if (total == 0 || purifier_dim == 0 || total % purifier_dim != 0) {
    fail(ErrorCode::kDimensionMismatch,
         "preparation: purifier dimension does not divide the space");
  }
  purifier_dim_ = purifier_dim;
  system_dim_ = total / purifier_dim;
}

PreparationUnitary::PreparationUnitary(ComplexMatrix unitary,
                                       std::size_t purifier_dim,
                                       std::uint64_t cost,
                                       std::size_t zero_state_index)
    : unitary_(std::move(unitary)), cost_(cost),
      zero_state_index_(zero_state_index) {
  if (unitary_.rows() != unitary_.cols()) {
    fail(ErrorCode::kDimensionMismatch, "preparation: matrix is not square");
  }
  set_dims(static_cast<std::size_t>(unitary_.rows()), purifier_dim);
  if (zero_state_index_ >= static_cast<std::size_t>(unitary_.rows())) {
    fail(ErrorCode::kOutOfRange, "preparation: start index out of range");
  }
  if (!is_unitary(unitary_, kUnitaryTolerance)) {
    fail(ErrorCode::kNotUnitary, "preparation: matrix is not unitary");
  }
  state_ = unitary_.col(static_cast<Eigen::Index>(zero_state_index_));
}

PreparationUnitary PreparationUnitary::from_state(ComplexVector state,
                                                  std::size_t purifier_dim,
                                                  std::uint64_t cost) {
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    fail(ErrorCode::kNotNormalized, "preparation: state is not normalized");
  }
  PreparationUnitary p;
  p.set_dims(static_cast<std::size_t>(state.size()), purifier_dim);
  p.state_ = std::move(state);
  p.cost_ = cost;
  return p;
}

ComplexMatrix PreparationUnitary::unitary() const {
  if (unitary_.size() != 0) return unitary_;
  return unitary_with_first_column(state_);
}

ComplexMatrix reduced_density(const PreparationUnitary& p) {
  const auto d = static_cast<Eigen::Index>(p.system_dim());
  const auto l = static_cast<Eigen::Index>(p.purifier_dim());
  // Row-major reshape: m(s, q) = state[s * l + q].
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      m(p.state().data(), d, l);
  return m * m.adjoint();
}

PreparationUnitary prepare_pure(const ComplexVector& v) {
  if (v.size() == 0 || std::abs(v.norm() - 1.0) > 1e-10) {
    fail(ErrorCode::kNotNormalized, "prepare_pure: vector is not normalized");
  }
  return PreparationUnitary::from_state(v, 1, static_cast<std::uint64_t>(v.size()));
}

PreparationUnitary prepare_basis(std::size_t system_dim, std::size_t index) {
  if (index >= system_dim) {
    fail(ErrorCode::kOutOfRange, "prepare_basis: index outside the space");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(system_dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return prepare_pure(v);
}

AmplificationParams exact_amplification_params(double beta) {
  if (!(beta > 0.0) || beta > 1.0) {
    fail(ErrorCode::kOutOfRange, "exact_amplification_params: beta not in (0,1]");
  }
  const double half_pi = std::numbers::pi / 2.0;
  const double theta = std::asin(beta);
  std::size_t k = 0;
  // A relative slack keeps beta = sin(pi / (2(2k+1))) at the smaller k.
  while (static_cast<double>(2 * k + 1) * theta < half_pi * (1.0 - 1e-13)) ++k;
  const double target = std::sin(half_pi / static_cast<double>(2 * k + 1));
  return {k, std::min(1.0, target / beta)};
}

MaximallyMixedPlan maximally_mixed_plan(std::size_t system_dim) {
  if (system_dim == 0) {
    fail(ErrorCode::kOutOfRange, "maximally mixed state needs D >= 1");
  }
  std::size_t qubits = 0;
  while ((std::size_t{1} << qubits) < system_dim) ++qubits;
  const double beta = std::sqrt(static_cast<double>(system_dim) /
                                static_cast<double>(std::size_t{1} << qubits));
  return {qubits, beta, exact_amplification_params(beta)};
}

namespace {

// Register layout for the amplification circuit: (x, y, flag) with
// index (x * N + y) * 2 + flag.
struct BellSpace {
  std::size_t n;  // 2^qubits

  std::size_t index(std::size_t x, std::size_t y, std::size_t f) const {
    return (x * n + y) * 2 + f;
  }
  std::size_t size() const { return n * n * 2; }
};

// Flag rotation by gamma, then the Bell circuit (Hadamards on the first
// register, CNOTs into the second) controlled on flag = 0, applied to
// |0>|0>|0>.
ComplexVector flagged_bell_state(const BellSpace& sp, std::size_t qubits,
                                 double gamma) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(sp.size()));
  v(static_cast<Eigen::Index>(sp.index(0, 0, 0))) = gamma;
  v(static_cast<Eigen::Index>(sp.index(0, 0, 1))) =
      std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
  const double h = 1.0 / std::numbers::sqrt2;
  for (std::size_t q = 0; q < qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    ComplexVector next = v;
    for (std::size_t x = 0; x < sp.n; ++x) {
      if (x & bit) continue;
      const auto i0 = static_cast<Eigen::Index>(sp.index(x, 0, 0));
      const auto i1 = static_cast<Eigen::Index>(sp.index(x | bit, 0, 0));
      next(i0) = h * (v(i0) + v(i1));
      next(i1) = h * (v(i0) - v(i1));
    }
    v = next;
  }
  ComplexVector out = ComplexVector::Zero(v.size());
  for (std::size_t x = 0; x < sp.n; ++x) {
    for (std::size_t y = 0; y < sp.n; ++y) {
      out(static_cast<Eigen::Index>(sp.index(x, y ^ x, 0))) +=
          v(static_cast<Eigen::Index>(sp.index(x, y, 0)));
      out(static_cast<Eigen::Index>(sp.index(x, y, 1))) +=
          v(static_cast<Eigen::Index>(sp.index(x, y, 1)));
    }
  }
  return out;
}

}  // namespace

PreparationUnitary prepare_maximally_mixed(std::size_t system_dim) {
  const MaximallyMixedPlan plan = maximally_mixed_plan(system_dim);
  const BellSpace sp{std::size_t{1} << plan.qubits};
  const ComplexVector start =
      flagged_bell_state(sp, plan.qubits, plan.amplification.gamma);

  // Good subspace: first register below D and flag 0.
  auto good = [&](std::size_t idx) {
    return (idx % 2 == 0) && (idx / 2 / sp.n) < system_dim;
  };
  ComplexVector v = start;
  for (std::size_t step = 0; step < plan.amplification.k; ++step) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (good(static_cast<std::size_t>(i))) v(i) = -v(i);
    }
    const Complex overlap = start.dot(v);
    v = -(v - 2.0 * overlap * start);
  }

  const std::size_t l = 2 * sp.n;
  // Index (x * N + y) * 2 + f equals x * l + (2y + f), so the good part keeps
  // its index when the first register is cut down to D.
  ComplexVector restricted =
      ComplexVector::Zero(static_cast<Eigen::Index>(system_dim * l));
  double leaked = 0.0;
  for (std::size_t idx = 0; idx < sp.size(); ++idx) {
    const Complex a = v(static_cast<Eigen::Index>(idx));
    if (good(idx)) {
      restricted(static_cast<Eigen::Index>(idx)) = a;
    } else {
      leaked += std::norm(a);
    }
  }
  if (leaked > 1e-18) {
    fail(ErrorCode::kCertificationFailed,
         "maximally mixed preparation left weight outside the good subspace");
  }
  restricted /= restricted.norm();
  return PreparationUnitary::from_state(std::move(restricted), l,
                                        2 * plan.qubits);
}

namespace {

struct Spectrum {
  HermitianEigen eig;
  std::vector<double> weights;  // Boltzmann probabilities
  double log_z;
};

Spectrum thermal_spectrum(const PauliSum& h, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    fail(ErrorCode::kOutOfRange, "thermal state needs beta >= 0");
  }
  Spectrum s{eig_hermitian(pauli_sum_matrix(h)), {}, 0.0};
  const double e_min = s.eig.values(0);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.eig.values.size(); ++i) {
    s.weights.push_back(std::exp(-beta * (s.eig.values(i) - e_min)));
    sum += s.weights.back();
  }
  for (double& w : s.weights) w /= sum;
  s.log_z = -beta * e_min + std::log(sum);
  return s;
}

double lemma_cost(const PauliSum& h, double beta, double eps, double log_z) {
  const double d = static_cast<double>(h.dimension());
  const double log_ratio = std::log(d) - log_z;  // ln(D/Z)
  const double root = std::exp(0.5 * log_ratio);
  const double estimate = static_cast<double>(h.size()) * h.scale() *
                          std::sqrt(beta) * root *
                          (0.5 * log_ratio + std::log(1.0 / eps));
  return std::max(0.0, estimate);
}

}  // namespace

double thermal_cost_estimate(const PauliSum& h, double beta, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    fail(ErrorCode::kOutOfRange, "thermal cost needs eps in (0,1)");
  }
  return lemma_cost(h, beta, eps, thermal_spectrum(h, beta).log_z);
}

ThermalPreparation prepare_thermal(const PauliSum& h, double beta, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    fail(ErrorCode::kOutOfRange, "thermal cost needs eps in (0,1)");
  }
  const Spectrum s = thermal_spectrum(h, beta);
  const auto d = static_cast<Eigen::Index>(h.dimension());
  ComplexVector state = ComplexVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double amp = std::sqrt(s.weights[static_cast<std::size_t>(i)]);
    for (Eigen::Index r = 0; r < d; ++r) {
      state(r * d + i) = amp * s.eig.vectors(r, i);
    }
  }
  state /= state.norm();
  const double estimate = lemma_cost(h, beta, eps, s.log_z);
  if (!(estimate < 1.8e19)) {
    fail(ErrorCode::kCostOverflow, "thermal preparation cost overflows");
  }
  const auto cost = static_cast<std::uint64_t>(std::ceil(estimate));
  return {PreparationUnitary::from_state(std::move(state),
                                         static_cast<std::size_t>(d), cost),
          estimate};
}

}  // namespace blockest
