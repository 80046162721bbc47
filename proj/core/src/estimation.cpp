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

#include "blockest/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "blockest/error.hpp"

namespace blockest {

std::string to_string(EstimationMode mode) {
  return mode == EstimationMode::kExact ? "exact" : "sampled";
}

namespace {

void check_unit_interval(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) {
    fail(ErrorCode::kOutOfRange, "estimation: eps must lie in (0,1)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    fail(ErrorCode::kOutOfRange, "estimation: delta must lie in (0,1)");
  }
}

}  // namespace

std::uint64_t amplitude_query_budget(double eps, double delta) {
  check_unit_interval(eps, delta);
  const double d = std::min(delta, 0.5);
  return static_cast<std::uint64_t>(
      std::ceil(kQueryBudgetConstant / eps * std::log(1.0 / d)));
}

AmplitudeProblem::AmplitudeProblem(ComplexVector psi,
                                   const ComplexMatrix& projector)
    : psi_(std::move(psi)) {
  if (projector.rows() != projector.cols() || projector.rows() != psi_.size()) {
    fail(ErrorCode::kDimensionMismatch,
         "amplitude problem: projector and state sizes differ");
  }
  if (!is_hermitian(projector, 1e-10) ||
      max_entry_distance(projector * projector, projector) > 1e-9) {
    fail(ErrorCode::kInvalidProjector,
         "amplitude problem: projector is not an orthogonal projection");
  }
  const HermitianEigen eig = eig_hermitian(projector, 1e-10);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > 0.5) keep.push_back(i);
  }
  range_ = eig.vectors(Eigen::all, keep);
}

AmplitudeProblem AmplitudeProblem::from_range(ComplexVector psi,
                                              ComplexMatrix range_basis) {
  if (range_basis.rows() != psi.size()) {
    fail(ErrorCode::kDimensionMismatch,
         "amplitude problem: range basis and state sizes differ");
  }
  const auto r = range_basis.cols();
  if (max_entry_distance(range_basis.adjoint() * range_basis,
                         ComplexMatrix::Identity(r, r)) > 1e-9) {
    fail(ErrorCode::kInvalidProjector,
         "amplitude problem: range basis is not orthonormal");
  }
  AmplitudeProblem p;
  p.psi_ = std::move(psi);
  p.range_ = std::move(range_basis);
  return p;
}

ComplexMatrix AmplitudeProblem::projector() const {
  return range_ * range_.adjoint();
}

double AmplitudeProblem::true_amplitude() const {
  if (range_.cols() == 0) return 0.0;
  return std::min(1.0, (range_.adjoint() * psi_).norm());
}

ComplexMatrix grover_operator(const AmplitudeProblem& p) {
  const auto n = p.psi().size();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix reflect_good = id - 2.0 * p.projector();
  const ComplexMatrix reflect_psi = id - 2.0 * p.psi() * p.psi().adjoint();
  return -reflect_good * reflect_psi;
}

namespace {

// Angles are tracked as t = theta / (2 pi) in [0, 1/4]; a Grover power m
// yields outcome probability sin^2((4m + 2) pi t).
struct NextPower {
  std::uint64_t m;
  bool upper_half;
};

NextPower find_next_power(std::uint64_t m, bool upper_half, double lo,
                          double hi) {
  constexpr double kMinRatio = 2.0;
  const double old_scaling = 4.0 * static_cast<double>(m) + 2.0;
  const double width = std::max(hi - lo, 1e-300);
  const double max_scaling_real = 1.0 / (2.0 * width);
  if (max_scaling_real > 4e15) return {m, upper_half};
  auto scaling = static_cast<std::int64_t>(max_scaling_real);
  scaling -= ((scaling - 2) % 4 + 4) % 4;
  while (static_cast<double>(scaling) >= kMinRatio * old_scaling) {
    const double s = static_cast<double>(scaling);
    const double t_min = s * lo - std::floor(s * lo);
    const double t_max = s * hi - std::floor(s * hi);
    if (t_min <= t_max && t_max <= 0.5 && t_min <= 0.5) {
      return {static_cast<std::uint64_t>((scaling - 2) / 4), true};
    }
    if (t_max >= 0.5 && t_min >= 0.5 && t_max >= t_min) {
      return {static_cast<std::uint64_t>((scaling - 2) / 4), false};
    }
    scaling -= 4;
  }
  return {m, upper_half};
}

EstimationResult sampled_amplitude(double amplitude, double eps, double delta,
                                   std::uint64_t seed) {
  constexpr std::uint64_t kShots = 100;
  const double t_true = std::asin(std::clamp(amplitude, 0.0, 1.0)) /
                        (2.0 * std::numbers::pi);
  const double d = std::min(delta, 0.5);
  const double rounds = std::floor(
      std::log(2.0 * std::numbers::pi / (8.0 * eps)) / std::log(2.0)) + 1.0;
  const double log_term = std::log(2.0 * std::max(rounds, 1.0) / d);
  const std::uint64_t budget = amplitude_query_budget(eps, delta);

  std::mt19937_64 rng(seed);
  double lo = 0.0;
  double hi = 0.25;
  std::uint64_t power = 0;
  bool upper_half = true;
  std::uint64_t queries = 0;
  std::uint64_t round_shots = 0;
  std::uint64_t round_ones = 0;
  // Each pass either raises the power or adds shots at the current one, so
  // the interval keeps shrinking; the pass limit only guards against
  // pathological floating-point stalls.
  for (int pass = 0; pass < 100000 && hi - lo > eps / std::numbers::pi; ++pass) {
    const NextPower next = find_next_power(power, upper_half, lo, hi);
    if (next.m != power || pass == 0) {
      round_shots = 0;
      round_ones = 0;
    }
    power = next.m;
    upper_half = next.upper_half;
    if (power > 0 && queries + kShots * power > budget) break;

    const double scaling = 4.0 * static_cast<double>(power) + 2.0;
    const double s = std::sin(scaling * std::numbers::pi * t_true);
    std::binomial_distribution<std::uint64_t> draw(kShots,
                                                   std::clamp(s * s, 0.0, 1.0));
    round_ones += draw(rng);
    round_shots += kShots;
    queries += kShots * power;

    const double p_hat =
        static_cast<double>(round_ones) / static_cast<double>(round_shots);
    const double half_width =
        std::sqrt(log_term / (2.0 * static_cast<double>(round_shots)));
    const double p_lo = std::max(0.0, p_hat - half_width);
    const double p_hi = std::min(1.0, p_hat + half_width);
    const double two_pi = 2.0 * std::numbers::pi;
    double frac_lo = 0.0;
    double frac_hi = 0.0;
    if (upper_half) {
      frac_lo = std::acos(1.0 - 2.0 * p_lo) / two_pi;
      frac_hi = std::acos(1.0 - 2.0 * p_hi) / two_pi;
    } else {
      frac_lo = 1.0 - std::acos(1.0 - 2.0 * p_hi) / two_pi;
      frac_hi = 1.0 - std::acos(1.0 - 2.0 * p_lo) / two_pi;
    }
    const double new_lo = (std::floor(scaling * lo) + frac_lo) / scaling;
    const double new_hi = (std::floor(scaling * hi) + frac_hi) / scaling;
    const double merged_lo = std::max(lo, new_lo);
    const double merged_hi = std::min(hi, new_hi);
    if (merged_lo <= merged_hi) {
      lo = merged_lo;
      hi = merged_hi;
    } else {
      lo = std::clamp(new_lo, 0.0, 0.25);
      hi = std::clamp(new_hi, lo, 0.25);
    }
  }

  EstimationResult r;
  r.value = std::sin(std::numbers::pi * (lo + hi));
  r.target_eps = eps;
  r.delta = delta;
  r.grover_queries = queries;
  r.mode = EstimationMode::kSampled;
  r.seed = seed;
  return r;
}

}  // namespace

EstimationResult estimate_amplitude(double amplitude, double eps, double delta,
                                    EstimationMode mode, std::uint64_t seed) {
  check_unit_interval(eps, delta);
  if (!(amplitude >= -1e-12 && amplitude <= 1.0 + 1e-12)) {
    fail(ErrorCode::kOutOfRange, "estimation: amplitude outside [0,1]");
  }
  amplitude = std::clamp(amplitude, 0.0, 1.0);
  if (mode == EstimationMode::kSampled) {
    return sampled_amplitude(amplitude, eps, delta, seed);
  }
  EstimationResult r;
  r.value = amplitude;
  r.target_eps = eps;
  r.delta = delta;
  r.grover_queries = amplitude_query_budget(eps, delta);
  r.mode = EstimationMode::kExact;
  return r;
}

EstimationResult estimate_amplitude(const AmplitudeProblem& p, double eps,
                                    double delta, EstimationMode mode,
                                    std::uint64_t seed) {
  return estimate_amplitude(p.true_amplitude(), eps, delta, mode, seed);
}

namespace {

// Columns 0..D-1 of the encoding unitary applied to |rho>, flattened as
// (ancilla * D + system) * l + purifier.
ComplexVector apply_to_zero_ancilla(const BlockEncoding& b,
                                    const PreparationUnitary& rho) {
  const auto d = static_cast<Eigen::Index>(b.system_dim());
  const auto l = static_cast<Eigen::Index>(rho.purifier_dim());
  using RowMajor =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> purified(rho.state().data(), d, l);
  const RowMajor out = b.unitary().leftCols(d) * purified;
  return Eigen::Map<const ComplexVector>(out.data(), out.size());
}

}  // namespace

EstimationResult estimate_observable(const BlockEncoding& a,
                                     const PreparationUnitary& rho, double eps,
                                     double delta, EstimationMode mode,
                                     std::uint64_t seed) {
  check_unit_interval(eps, delta);
  if (a.system_dim() != rho.system_dim()) {
    fail(ErrorCode::kDimensionMismatch,
         "estimate_observable: encoding and state dimensions differ");
  }
  if (!is_hermitian(a.block(), 1e-8)) {
    fail(ErrorCode::kNotHermitian, "estimate_observable: block is not Hermitian");
  }
  const auto d = static_cast<Eigen::Index>(a.system_dim());
  const double alpha = a.scale();
  const std::array<Complex, 2> coeffs{Complex(0.5, 0.0),
                                      Complex(0.5 / alpha, 0.0)};
  const std::array<BlockEncoding, 2> parts{
      BlockEncoding::assemble(ComplexMatrix::Identity(d, d), 1, 1.0, 0.0, 0),
      a};
  const BlockEncoding shifted = linear_combine(coeffs, parts);

  ComplexVector psi = apply_to_zero_ancilla(shifted, rho);
  ComplexMatrix good = ComplexMatrix::Zero(psi.size(), 1);
  good.topRows(rho.state().size()) = rho.state();
  const AmplitudeProblem problem =
      AmplitudeProblem::from_range(std::move(psi), std::move(good));

  const double amp_eps = std::min(eps / (2.0 * alpha), 0.5);
  EstimationResult r = estimate_amplitude(problem, amp_eps, delta, mode, seed);
  r.value = (2.0 * r.value.real() - 1.0) * alpha;
  r.target_eps = eps;
  const std::uint64_t step =
      cost_add(cost_mul(4, rho.cost()), cost_mul(2, shifted.cost()));
  r.gate_cost = cost_mul(r.grover_queries, step);
  return r;
}

EstimationResult estimate_complex(const BlockEncoding& g,
                                  const PreparationUnitary& rho, double eps,
                                  double delta, EstimationMode mode,
                                  std::uint64_t seed) {
  check_unit_interval(eps, delta);
  const std::array<BlockEncoding, 2> pair{g, adjoint(g)};
  const std::array<Complex, 2> re_coeffs{Complex(0.5, 0.0), Complex(0.5, 0.0)};
  const std::array<Complex, 2> im_coeffs{Complex(0.0, -0.5), Complex(0.0, 0.5)};
  const EstimationResult re = estimate_observable(linear_combine(re_coeffs, pair),
                                                  rho, eps, delta, mode, seed);
  const EstimationResult im = estimate_observable(
      linear_combine(im_coeffs, pair), rho, eps, delta, mode, seed + 1);
  EstimationResult r = re;
  r.value = Complex(re.value.real(), im.value.real());
  r.grover_queries = cost_add(re.grover_queries, im.grover_queries);
  r.gate_cost = cost_add(re.gate_cost, im.gate_cost);
  return r;
}

}  // namespace blockest
