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

#include "blockest/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blockest/error.hpp"

namespace blockest {

double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::kDimensionMismatch, "max_entry_distance: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  return max_entry_distance(m.adjoint() * m, id) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_entry_distance(m, m.adjoint()) <= tol;
}

HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::kNotHermitian, "eig_hermitian: matrix is not square");
  }
  if (!is_hermitian(m, tol)) {
    std::ostringstream os;
    os << "eig_hermitian: deviation from Hermitian exceeds " << tol;
    fail(ErrorCode::kNotHermitian, os.str());
  }
  const ComplexMatrix sym = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix apply_spectral(const HermitianEigen& eig,
                             const std::function<Complex(double)>& f) {
  ComplexVector diag(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) diag(i) = f(eig.values(i));
  return eig.vectors * diag.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix hermitian_exp(const ComplexMatrix& h, double t) {
  const auto eig = eig_hermitian(h);
  return apply_spectral(eig, [t](double e) { return std::polar(1.0, e * t); });
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

ComplexMatrix unitary_dilation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::kDimensionMismatch, "unitary_dilation: matrix is not square");
  }
  const double norm = spectral_norm(m);
  if (norm > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "unitary_dilation: spectral norm " << norm << " exceeds 1";
    fail(ErrorCode::kNormTooLarge, os.str());
  }
  const Eigen::Index d = m.rows();
  ComplexMatrix u(2 * d, 2 * d);
  // Square roots taken through one SVD stay accurate when singular values
  // sit at 1, where separate eigen-decompositions lose half the digits.
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd c(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double s = std::min(svd.singularValues()(i), 1.0);
    c(i) = std::sqrt((1.0 - s) * (1.0 + s));
  }
  u.topLeftCorner(d, d) = m;
  u.topRightCorner(d, d) = svd.matrixU() * c.asDiagonal() * svd.matrixU().adjoint();
  u.bottomLeftCorner(d, d) = svd.matrixV() * c.asDiagonal() * svd.matrixV().adjoint();
  u.bottomRightCorner(d, d) = -m.adjoint();
  return u;
}

ComplexMatrix unitary_with_first_column(const ComplexVector& v) {
  const Eigen::Index n = v.size();
  if (n == 0 || std::abs(v.norm() - 1.0) > 1e-10) {
    fail(ErrorCode::kNotNormalized, "unitary_with_first_column: |v| != 1");
  }
  const double mag0 = std::abs(v(0));
  const Complex phase = mag0 > 0.0 ? v(0) / mag0 : Complex(1.0, 0.0);
  // u = conj(phase) v has a real nonnegative first entry; the reflection
  // I - 2 w w^dagger / |w|^2 with w = e0 - u then maps e0 to u.
  ComplexVector u = v / phase;
  u(0) = Complex(u(0).real(), 0.0);
  ComplexVector w = -u;
  // 1 - u0 written without cancellation.
  const double tail = u.tail(n - 1).squaredNorm();
  w(0) = tail / (1.0 + u(0).real());
  const double w2 = w.squaredNorm();
  ComplexMatrix q = ComplexMatrix::Identity(n, n);
  if (tail > 0.0) q -= (2.0 / w2) * (w * w.adjoint());
  return phase * q;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace blockest
