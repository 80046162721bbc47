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

#ifndef BLOCKEST_CHEBYSHEV_HPP
#define BLOCKEST_CHEBYSHEV_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace blockest {

// sum_k c_k T_k(x).
class ChebyshevPoly {
 public:
  ChebyshevPoly() : coeffs_{0.0} {}
  explicit ChebyshevPoly(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  // Clenshaw recurrence.
  double operator()(double x) const;

 private:
  std::vector<double> coeffs_;
};

double cheb_eval(const ChebyshevPoly& p, double x);

// T_n.
ChebyshevPoly chebyshev_t(std::size_t n);

ChebyshevPoly add(const ChebyshevPoly& p, const ChebyshevPoly& q);
ChebyshevPoly scale(const ChebyshevPoly& p, double factor);

// Exact integral over [-1, 1].
double cheb_integral(const ChebyshevPoly& p);

// Degree-d interpolant of f through the d+1 Chebyshev-Gauss nodes.
ChebyshevPoly chebyshev_interpolant(const std::function<double(double)>& f,
                                    std::size_t degree);

// Values at the d+1 Chebyshev-Gauss nodes cos(pi (j + 1/2) / (d + 1)).
std::vector<double> chebyshev_gauss_nodes(std::size_t count);

/// Jackson damping factors g_0..g_{count-1} for a truncated expansion with
/// `count` terms (N = count):
///
///   g_n = [(N - n + 1) cos(pi n / (N + 1))
///          + sin(pi n / (N + 1)) cot(pi / (N + 1))] / (N + 1).
std::vector<double> jackson_damping(std::size_t count);

/// Jackson-damped degree-n Chebyshev expansion of the trapezoid g that is 1
/// on [a_bar, b_bar], -1 outside [a_bar - kappa, b_bar + kappa] and linear in
/// between. Coefficients of g come from a cosine transform at 4n nodes.
/// Certified on a 10^5-point grid: sup |J - g| <= 1/4 and |J| <= 5/4, else
/// CertificationFailed. Throws BadInterval or OutOfRange (n < 24/kappa).
ChebyshevPoly jackson_approx(double a_bar, double b_bar, double kappa,
                             std::size_t n);

// The trapezoid approximated by jackson_approx.
double jackson_target(double a_bar, double b_bar, double kappa, double x);

/// A_k(x) = sum_{j >= k/2} C(k, j) ((1+x)/2)^j ((1-x)/2)^(k-j), the
/// probability that Binomial(k, (1+x)/2) >= k/2. Throws OutOfRange if k = 0.
ChebyshevPoly amplifying_poly(std::size_t k);

// Direct evaluation of A_k through the binomial tail.
double amplifier_value(std::size_t k, double x);

/// outer(scale_inner * inner(x)) as a polynomial of degree
/// deg(outer) deg(inner), recovered by interpolation at the Chebyshev-Gauss
/// nodes. Throws RangeViolation if |scale_inner * inner| > 1 at a node.
ChebyshevPoly compose(const ChebyshevPoly& outer, const ChebyshevPoly& inner,
                      double scale_inner);

struct WindowCertificate {
  double max_abs = 0.0;        // max |w|
  double inside_min = 1.0;     // min of w on [a_bar, b_bar]
  double outside_max = 0.0;    // max of w outside the kappa strips
  double outside_min = 0.0;    // min of w outside the kappa strips
  double form_mismatch = 0.0;  // coefficient vs factored form
  double max_violation = 0.0;  // worst excess over any envelope
  std::size_t grid_points = 0;
};

struct WindowPoly {
  ChebyshevPoly poly;
  ChebyshevPoly jackson;
  double a_bar = 0.0;
  double b_bar = 0.0;
  double eta_rel = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  std::size_t jackson_degree = 0;
  std::size_t amplifier_order = 0;
  WindowCertificate certificate;

  std::size_t degree() const { return poly.degree(); }
};

inline constexpr double kWindowCertTolerance = 1e-9;
inline constexpr double kWindowMinEta = 0.02;

/// w(x) = A_k(4/5 J(x)) with kappa = eta/4, n = ceil(24/kappa),
/// k = ceil(6 ln(4/eta)), tau = exp(-k/6). Certification checks |w| <= 1,
/// w in [1 - tau, 1] on [a_bar, b_bar] and w in [0, tau] outside
/// [a_bar - kappa, b_bar + kappa] at the 2d+1 extrema (coefficient form)
/// and on a 10^5-point uniform grid (factored form), plus agreement of the
/// two forms at 10^3 random points. Throws OutOfRange for eta outside (0,1)
/// or below 0.02 without allow_small_eta, BadInterval, CertificationFailed.
WindowPoly window_poly(double a_bar, double b_bar, double eta_rel,
                       bool allow_small_eta = false);

/// f(x) = (g_0 mu_0 + 2 sum_{n>=1} g_n mu_n T_n(x)) / (pi sqrt(1 - x^2))
/// with Jackson damping over the N+1 moments. Throws GridOutOfRange unless
/// every grid point lies in (-1, 1).
std::vector<double> kpm_reconstruct(std::span<const double> moments,
                                    std::span<const double> grid);

}  // namespace blockest

#endif  // BLOCKEST_CHEBYSHEV_HPP
