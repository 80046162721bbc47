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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "blockest/error.hpp"
#include "blockest/estimation.hpp"
#include "support/test_support.hpp"

namespace blockest {
namespace {

using testing::max_abs_diff;
using testing::Mat;
using testing::pauli_2x2;
using testing::Vec;

const Complex kI(0.0, 1.0);

Vec plus_state() {
  Vec v(2);
  v << 1.0, 1.0;
  return v / std::sqrt(2.0);
}

Mat projector_onto(const Vec& v) { return v * v.adjoint(); }

TEST(GroverOperator, ProjectorOntoPsiGivesMinusIdentity) {
  std::mt19937_64 rng(1);
  const Vec psi = testing::random_state(rng, 4);
  const Mat g = grover_operator(AmplitudeProblem(psi, projector_onto(psi)));
  EXPECT_LT(max_abs_diff(g, -Mat::Identity(4, 4)), 1e-12);
}

TEST(GroverOperator, ZeroProjector) {
  std::mt19937_64 rng(2);
  const Vec psi = testing::random_state(rng, 4);
  const Mat g = grover_operator(AmplitudeProblem(psi, Mat::Zero(4, 4)));
  const Mat expected = -(Mat::Identity(4, 4) - 2.0 * psi * psi.adjoint());
  EXPECT_LT(max_abs_diff(g, expected), 1e-12);
}

TEST(GroverOperator, RotationByTwiceTheta) {
  Mat pi = Mat::Zero(2, 2);
  pi(0, 0) = 1.0;
  const AmplitudeProblem p(plus_state(), pi);
  EXPECT_NEAR(p.true_amplitude(), 1.0 / std::sqrt(2.0), 1e-15);
  const Mat g = grover_operator(p);
  EXPECT_TRUE(is_unitary(g, 1e-10));
  Eigen::ComplexEigenSolver<Mat> es(g);
  for (Eigen::Index i = 0; i < 2; ++i) {
    EXPECT_NEAR(std::abs(std::arg(es.eigenvalues()(i))), std::numbers::pi / 2, 1e-12);
  }
}

TEST(GroverOperator, RandomProblemsRotateInvariantPlane) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 + trial % 6;
    const Vec psi = testing::random_state(rng, d);
    const Vec r = testing::random_state(rng, d);
    const AmplitudeProblem p(psi, projector_onto(r));
    const double theta = std::asin(p.true_amplitude());
    const Mat g = grover_operator(p);
    EXPECT_TRUE(is_unitary(g, 1e-10));
    // The first application only reflects |Psi> about the bad axis, so
    // G^m |Psi> has good amplitude |sin((2m-1) theta)|.
    Vec v = psi;
    for (int m = 1; m <= 4; ++m) {
      v = g * v;
      EXPECT_NEAR(std::abs(r.dot(v)), std::abs(std::sin((2 * m - 1) * theta)), 1e-10);
    }
    // Eigenphases on the invariant plane are +-2 theta.
    Mat basis(d, 2);
    basis.col(0) = r;
    Vec bad = psi - r * r.dot(psi);
    basis.col(1) = bad / bad.norm();
    Eigen::ComplexEigenSolver<Mat> es(basis.adjoint() * g * basis);
    for (Eigen::Index i = 0; i < 2; ++i) {
      EXPECT_NEAR(std::abs(std::arg(es.eigenvalues()(i))), 2 * theta, 1e-10);
    }
  }
}

TEST(AmplitudeProblemType, RejectsInvalidProjectors) {
  const Vec psi = plus_state();
  Mat not_idempotent = Mat::Identity(2, 2) * 0.5;
  Mat not_hermitian = Mat::Zero(2, 2);
  not_hermitian(0, 1) = 1.0;
  for (const Mat& m : {not_idempotent, not_hermitian}) {
    try {
      AmplitudeProblem(psi, m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidProjector);
    }
  }
  Mat pi = Mat::Zero(2, 2);
  pi(1, 1) = 1.0;
  EXPECT_LT(max_abs_diff(AmplitudeProblem(psi, pi).projector(), pi), 1e-12);
}

TEST(EstimateAmplitude, ExtremeAmplitudesSampled) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_NEAR(estimate_amplitude(0.0, 0.02, 0.05, EstimationMode::kSampled, seed)
                    .value.real(),
                0.0, 0.02);
    EXPECT_NEAR(estimate_amplitude(1.0, 0.02, 0.05, EstimationMode::kSampled, seed)
                    .value.real(),
                1.0, 0.02);
  }
}

TEST(EstimateAmplitude, ExactModeReturnsTruth) {
  const EstimationResult r =
      estimate_amplitude(0.3, 0.01, 0.05, EstimationMode::kExact, 0);
  EXPECT_DOUBLE_EQ(r.value.real(), 0.3);
  EXPECT_EQ(r.grover_queries, amplitude_query_budget(0.01, 0.05));
  EXPECT_EQ(r.mode, EstimationMode::kExact);
  EXPECT_DOUBLE_EQ(r.confidence(), 0.95);
}

TEST(EstimateAmplitude, RejectsOutOfRange) {
  for (auto [eps, delta] : {std::pair{0.0, 0.1}, {1.0, 0.1}, {0.1, 0.0}, {0.1, 1.0}}) {
    try {
      estimate_amplitude(0.5, eps, delta, EstimationMode::kSampled, 1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
  }
}

TEST(EstimateAmplitude, DeterministicGivenSeed) {
  const auto a = estimate_amplitude(0.61, 0.01, 0.05, EstimationMode::kSampled, 99);
  const auto b = estimate_amplitude(0.61, 0.01, 0.05, EstimationMode::kSampled, 99);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.grover_queries, b.grover_queries);
  EXPECT_EQ(a.seed, std::optional<std::uint64_t>(99));
}

TEST(EstimateAmplitude, HalfAmplitudeCoverage) {
  const double truth = 1.0 / std::sqrt(2.0);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = estimate_amplitude(truth, 0.01, 0.05, EstimationMode::kSampled, seed);
    if (std::abs(r.value.real() - truth) <= 0.01) ++hits;
  }
  EXPECT_GE(hits, 188);
}

TEST(EstimateAmplitude, CalibrationAcrossAmplitudes) {
  const double delta = 0.05;
  const int seeds = 300;
  const double allowed = delta + 3.0 * std::sqrt(delta / seeds);
  for (double truth : {0.0, 0.05, 0.3, 0.5, 0.77, 0.93, 0.999, 1.0}) {
    for (double eps : {0.005, 0.02, 0.1}) {
      int failures = 0;
      for (int seed = 0; seed < seeds; ++seed) {
        const auto r = estimate_amplitude(truth, eps, delta, EstimationMode::kSampled,
                                          static_cast<std::uint64_t>(seed) * 7919u + 1u);
        if (std::abs(r.value.real() - truth) > eps) ++failures;
        EXPECT_LE(r.grover_queries, amplitude_query_budget(eps, delta));
      }
      EXPECT_LE(failures, allowed * seeds) << truth << " " << eps;
    }
  }
}

TEST(QueryAccounting, BudgetScaling) {
  for (double eps : {0.3, 0.1, 0.03, 0.01, 0.001}) {
    for (double delta : {0.5, 0.1, 0.01, 1e-4}) {
      const double bound = kQueryBudgetConstant / eps * std::log(1.0 / delta);
      EXPECT_LE(static_cast<double>(amplitude_query_budget(eps, delta)), bound + 1.0);
    }
  }
}

TEST(QueryAccounting, MonotoneInEpsAndDelta) {
  std::uint64_t previous = 0;
  for (double eps = 0.5; eps > 1e-4; eps *= 0.8) {
    const auto q = estimate_amplitude(0.4, eps, 0.05, EstimationMode::kExact).grover_queries;
    EXPECT_GE(q, previous);
    previous = q;
  }
  previous = 0;
  for (double delta = 0.5; delta > 1e-8; delta *= 0.5) {
    const auto q = estimate_amplitude(0.4, 0.01, delta, EstimationMode::kExact).grover_queries;
    EXPECT_GE(q, previous);
    previous = q;
  }
}

TEST(EstimateObservable, Examples) {
  const BlockEncoding z = encode_unitary(pauli_2x2('Z'));
  EXPECT_NEAR(estimate_observable(z, prepare_basis(2, 0), 0.01, 0.05,
                                  EstimationMode::kExact)
                  .value.real(),
              1.0, 1e-8);
  EXPECT_NEAR(estimate_observable(z, prepare_maximally_mixed(2), 0.01, 0.05,
                                  EstimationMode::kExact)
                  .value.real(),
              0.0, 1e-8);
  const BlockEncoding a = encode_pauli_sum(PauliSum({{0.3, "Z"}, {0.2, "X"}}));
  const auto r = estimate_observable(a, prepare_pure(plus_state()), 0.01, 0.05,
                                     EstimationMode::kExact);
  EXPECT_NEAR(r.value.real(), 0.2, 1e-8);
  EXPECT_EQ(r.value.imag(), 0.0);
  EXPECT_DOUBLE_EQ(r.target_eps, 0.01);
}

TEST(EstimateObservable, RejectsNonHermitianBlock) {
  const BlockEncoding a = encode_matrix(kI * pauli_2x2('X') * 0.5 + 0.5 * pauli_2x2('Z'), 1.0);
  try {
    estimate_observable(a, prepare_basis(2, 0), 0.01, 0.05, EstimationMode::kExact);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHermitian);
  }
}

TEST(EstimateObservable, ExactModeTraceIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t q = 1 + trial % 3;
    const Eigen::Index d = Eigen::Index{1} << q;
    const PauliSum s = testing::random_pauli_sum(rng, q, 4);
    const BlockEncoding a = encode_pauli_sum(s);
    const Eigen::Index l = 1 + trial % 3;
    const PreparationUnitary rho =
        PreparationUnitary::from_state(testing::random_state(rng, d * l), l, 3);
    const Complex expected =
        (reduced_density(rho) * encoded_block(a)).trace() * a.scale();
    const auto r = estimate_observable(a, rho, 0.01, 0.05, EstimationMode::kExact);
    EXPECT_NEAR(r.value.real(), expected.real(), 1e-8);
  }
}

TEST(EstimateObservable, ShiftedEncodingIsPositive) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const PauliSum s = testing::random_pauli_sum(rng, 1 + trial % 3, 4);
    const BlockEncoding a = encode_pauli_sum(s);
    const BlockEncoding id = encode_unitary(Mat::Identity(a.system_dim(), a.system_dim()));
    const std::array<BlockEncoding, 2> parts{id, a};
    const std::array<Complex, 2> c{0.5, 0.5 / a.scale()};
    const BlockEncoding shifted = linear_combine(c, parts);
    EXPECT_NEAR(shifted.scale(), 1.0, 1e-14);
    Eigen::SelfAdjointEigenSolver<Mat> es(encoded_block(shifted));
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
    EXPECT_LE(es.eigenvalues().maxCoeff(), 1.0 + 1e-10);
  }
}

TEST(EstimateObservable, SampledModeCoverage) {
  const BlockEncoding a = encode_pauli_sum(PauliSum({{0.3, "Z"}, {0.2, "X"}}));
  const PreparationUnitary rho = prepare_pure(plus_state());
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = estimate_observable(a, rho, 0.02, 0.05, EstimationMode::kSampled, seed);
    if (std::abs(r.value.real() - 0.2) <= 0.02) ++hits;
    EXPECT_GT(r.gate_cost, 0u);
  }
  EXPECT_GE(hits, 188);
}

TEST(EstimateComplex, HermitianHasNoImaginaryPart) {
  const BlockEncoding a = encode_pauli_sum(PauliSum({{0.3, "Z"}, {0.2, "X"}}));
  const auto r = estimate_complex(a, prepare_pure(plus_state()), 0.01, 0.05,
                                  EstimationMode::kExact);
  EXPECT_NEAR(r.value.real(), 0.2, 1e-8);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-8);
}

TEST(EstimateComplex, ImaginaryIdentity) {
  const BlockEncoding g = encode_unitary(kI * Mat::Identity(2, 2));
  std::mt19937_64 rng(4);
  const auto r = estimate_complex(g, prepare_pure(testing::random_state(rng, 2)), 0.01,
                                  0.05, EstimationMode::kExact);
  EXPECT_NEAR(r.value.real(), 0.0, 1e-8);
  EXPECT_NEAR(r.value.imag(), 1.0, 1e-8);
}

TEST(EstimateComplex, HeisenbergPictureCorrelator) {
  const Mat z = pauli_2x2('Z');
  const double t = std::numbers::pi / 4;
  const std::array<BlockEncoding, 4> f{
      encode_unitary(testing::expm_i(z, t)), encode_unitary(pauli_2x2('X')),
      encode_unitary(testing::expm_i(z, -t)), encode_unitary(pauli_2x2('X'))};
  const BlockEncoding g = product(f);
  const auto r = estimate_complex(g, prepare_basis(2, 0), 0.01, 0.05,
                                  EstimationMode::kExact);
  EXPECT_NEAR(r.value.real(), 0.0, 1e-8);
  EXPECT_NEAR(r.value.imag(), 1.0, 1e-8);

  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = estimate_complex(g, prepare_basis(2, 0), 0.05, 0.05,
                                    EstimationMode::kSampled, seed);
    if (std::abs(s.value - kI) <= 0.05 * std::sqrt(2.0)) ++hits;
  }
  EXPECT_GE(hits, 90);
}

TEST(EstimateComplex, RandomGammaMatchesDenseTrace) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 << (trial % 2);
    const Mat gamma = testing::random_contraction(rng, d, 0.8);
    const PreparationUnitary rho = prepare_pure(testing::random_state(rng, d));
    const Complex expected = (reduced_density(rho) * gamma).trace();
    const auto r = estimate_complex(encode_matrix(gamma, 1.0), rho, 0.01, 0.05,
                                    EstimationMode::kExact);
    EXPECT_LT(std::abs(r.value - expected), 1e-8);
  }
}

}  // namespace
}  // namespace blockest
