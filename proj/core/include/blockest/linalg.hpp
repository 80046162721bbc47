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

#ifndef BLOCKEST_LINALG_HPP
#define BLOCKEST_LINALG_HPP

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace blockest {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;

// Largest absolute entry of (a - b).
double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTolerance);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns
};

// Throws NotHermitian when m deviates from m^dagger by more than tol.
HermitianEigen eig_hermitian(const ComplexMatrix& m,
                             double tol = kHermitianTolerance);

// V f(lambda) V^dagger.
ComplexMatrix apply_spectral(const HermitianEigen& eig,
                             const std::function<Complex(double)>& f);

// exp(i h t) for Hermitian h.
ComplexMatrix hermitian_exp(const ComplexMatrix& h, double t);

double spectral_norm(const ComplexMatrix& m);

/// Single-ancilla unitary dilation of a contraction:
///
///   [[ m,               sqrt(I - m m^dagger) ],
///    [ sqrt(I - m^dagger m),  -m^dagger      ]]
///
/// Both square roots come from one SVD of m, with singular values clipped
/// at 1. Throws NormTooLarge if |m| > 1 + 1e-12.
ComplexMatrix unitary_dilation(const ComplexMatrix& m);

// Some unitary whose first column is v (|v| = 1), built from one Householder
// reflection and a phase.
ComplexMatrix unitary_with_first_column(const ComplexVector& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace blockest

#endif  // BLOCKEST_LINALG_HPP
