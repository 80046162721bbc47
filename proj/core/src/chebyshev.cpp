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

#include "blockest/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "blockest/error.hpp"
#include "src/dct.hpp"

namespace blockest {

ChebyshevPoly::ChebyshevPoly(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double ChebyshevPoly::operator()(double x) const {
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    const double b0 = coeffs_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + x * b1 - b2;
}

double cheb_eval(const ChebyshevPoly& p, double x) { return p(x); }

ChebyshevPoly chebyshev_t(std::size_t n) {
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  return ChebyshevPoly(std::move(c));
}

ChebyshevPoly add(const ChebyshevPoly& p, const ChebyshevPoly& q) {
  std::vector<double> c(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k] += p.coeffs()[k];
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) c[k] += q.coeffs()[k];
  return ChebyshevPoly(std::move(c));
}

ChebyshevPoly scale(const ChebyshevPoly& p, double factor) {
  std::vector<double> c = p.coeffs();
  for (double& v : c) v *= factor;
  return ChebyshevPoly(std::move(c));
}

double cheb_integral(const ChebyshevPoly& p) {
  double s = 0.0;
  for (std::size_t k = 0; k < p.coeffs().size(); k += 2) {
    const double kk = static_cast<double>(k);
    s += p.coeffs()[k] * 2.0 / (1.0 - kk * kk);
  }
  return s;
}

std::vector<double> chebyshev_gauss_nodes(std::size_t count) {
  return detail::gauss_nodes(count);
}

ChebyshevPoly chebyshev_interpolant(const std::function<double(double)>& f,
                                    std::size_t degree) {
  std::vector<double> values = detail::gauss_nodes(degree + 1);
  for (double& v : values) v = f(v);
  return ChebyshevPoly(detail::coeffs_from_gauss_values(values));
}

std::vector<double> jackson_damping(std::size_t count) {
  std::vector<double> g(count);
  // Moments 0..N with N + 1 = count.
  const double n1 = static_cast<double>(count);
  const double cot = 1.0 / std::tan(std::numbers::pi / n1);
  for (std::size_t n = 0; n < count; ++n) {
    const double a = std::numbers::pi * static_cast<double>(n) / n1;
    g[n] = ((n1 - static_cast<double>(n)) * std::cos(a) + std::sin(a) * cot) / n1;
  }
  return g;
}

double jackson_target(double a_bar, double b_bar, double kappa, double x) {
  if (x >= a_bar && x <= b_bar) return 1.0;
  if (x <= a_bar - kappa || x >= b_bar + kappa) return -1.0;
  const double gap = x < a_bar ? a_bar - x : x - b_bar;
  return 1.0 - 2.0 * gap / kappa;
}

namespace {

constexpr std::size_t kCertGrid = 100000;

double uniform_grid_point(std::size_t i) {
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(kCertGrid - 1);
}

void check_window_interval(double a_bar, double b_bar, double kappa) {
  if (!(kappa > 0.0) || !(a_bar < b_bar) || !(a_bar - kappa > -1.0) ||
      !(b_bar + kappa < 1.0)) {
    fail(ErrorCode::kBadInterval,
         "window needs -1 < a_bar - kappa < a_bar < b_bar < b_bar + kappa < 1");
  }
}

struct JacksonFit {
  ChebyshevPoly poly;
  std::vector<double> grid_values;  // on the uniform certification grid
};

JacksonFit jackson_fit(double a_bar, double b_bar, double kappa, std::size_t n) {
  check_window_interval(a_bar, b_bar, kappa);
  if (static_cast<double>(n) < 24.0 / kappa - 1e-9) {
    fail(ErrorCode::kOutOfRange, "jackson_approx: degree must be >= 24/kappa");
  }
  std::vector<double> values = detail::gauss_nodes(4 * n);
  for (double& v : values) v = jackson_target(a_bar, b_bar, kappa, v);
  std::vector<double> c = detail::coeffs_from_gauss_values(values);
  c.resize(n + 1);
  // One extra slot so the top coefficient keeps a nonzero weight.
  const std::vector<double> g = jackson_damping(n + 2);
  for (std::size_t k = 0; k <= n; ++k) c[k] *= g[k];
  JacksonFit fit{ChebyshevPoly(std::move(c)), std::vector<double>(kCertGrid)};

  double worst_error = 0.0;
  double worst_abs = 0.0;
  for (std::size_t i = 0; i < kCertGrid; ++i) {
    const double x = uniform_grid_point(i);
    const double j = fit.poly(x);
    fit.grid_values[i] = j;
    worst_error = std::max(worst_error,
                           std::abs(j - jackson_target(a_bar, b_bar, kappa, x)));
    worst_abs = std::max(worst_abs, std::abs(j));
  }
  if (worst_error > 0.25 || worst_abs > 1.25) {
    fail(ErrorCode::kCertificationFailed,
         "jackson_approx: sup error " + std::to_string(worst_error) +
             " or sup norm " + std::to_string(worst_abs) + " out of bounds");
  }
  return fit;
}

}  // namespace

ChebyshevPoly jackson_approx(double a_bar, double b_bar, double kappa,
                             std::size_t n) {
  return jackson_fit(a_bar, b_bar, kappa, n).poly;
}

double amplifier_value(std::size_t k, double x) {
  const double p = std::clamp((1.0 + x) / 2.0, 0.0, 1.0);
  const std::size_t first = (k + 1) / 2;
  if (p == 0.0) return first == 0 ? 1.0 : 0.0;
  if (p == 1.0) return 1.0;
  const double kk = static_cast<double>(k);
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  double s = 0.0;
  for (std::size_t j = first; j <= k; ++j) {
    const double jj = static_cast<double>(j);
    s += std::exp(std::lgamma(kk + 1.0) - std::lgamma(jj + 1.0) -
                  std::lgamma(kk - jj + 1.0) + jj * lp + (kk - jj) * lq);
  }
  return std::min(s, 1.0);
}

ChebyshevPoly amplifying_poly(std::size_t k) {
  if (k == 0) fail(ErrorCode::kOutOfRange, "amplifying_poly: k must be >= 1");
  return chebyshev_interpolant([k](double x) { return amplifier_value(k, x); },
                               k);
}

ChebyshevPoly compose(const ChebyshevPoly& outer, const ChebyshevPoly& inner,
                      double scale_inner) {
  const std::size_t d = outer.degree() * inner.degree();
  const std::size_t m = std::max(d + 1, inner.coeffs().size());
  std::vector<double> values = detail::gauss_values_from_coeffs(inner.coeffs(), m);
  for (double& v : values) {
    const double y = scale_inner * v;
    if (std::abs(y) > 1.0 + 1e-9) {
      fail(ErrorCode::kRangeViolation,
           "compose: scaled inner polynomial leaves [-1, 1]");
    }
    v = outer(std::clamp(y, -1.0, 1.0));
  }
  std::vector<double> c = detail::coeffs_from_gauss_values(values);
  c.resize(d + 1);
  return ChebyshevPoly(std::move(c));
}

namespace {

struct Envelope {
  double a_bar, b_bar, kappa, tau;

  void record(double x, double w, WindowCertificate& cert) const {
    cert.max_abs = std::max(cert.max_abs, std::abs(w));
    double excess = std::abs(w) - 1.0;
    if (x >= a_bar && x <= b_bar) {
      cert.inside_min = std::min(cert.inside_min, w);
      excess = std::max(excess, (1.0 - tau) - w);
    } else if (x < a_bar - kappa || x > b_bar + kappa) {
      cert.outside_max = std::max(cert.outside_max, w);
      cert.outside_min = std::min(cert.outside_min, w);
      excess = std::max({excess, w - tau, -w});
    }
    cert.max_violation = std::max(cert.max_violation, excess);
    ++cert.grid_points;
  }
};

}  // namespace

WindowPoly window_poly(double a_bar, double b_bar, double eta_rel,
                       bool allow_small_eta) {
  if (!(eta_rel > 0.0 && eta_rel < 1.0)) {
    fail(ErrorCode::kOutOfRange, "window_poly: eta must lie in (0,1)");
  }
  if (eta_rel < kWindowMinEta && !allow_small_eta) {
    fail(ErrorCode::kOutOfRange,
         "window_poly: eta below 0.02 needs the small-eta override");
  }
  WindowPoly w;
  w.a_bar = a_bar;
  w.b_bar = b_bar;
  w.eta_rel = eta_rel;
  w.kappa = eta_rel / 4.0;
  check_window_interval(a_bar, b_bar, w.kappa);
  w.jackson_degree =
      static_cast<std::size_t>(std::ceil(24.0 / w.kappa - 1e-9));
  w.amplifier_order =
      static_cast<std::size_t>(std::ceil(6.0 * std::log(4.0 / eta_rel) - 1e-9));
  w.tau = std::exp(-static_cast<double>(w.amplifier_order) / 6.0);

  JacksonFit fit = jackson_fit(a_bar, b_bar, w.kappa, w.jackson_degree);
  w.jackson = fit.poly;
  w.poly = compose(amplifying_poly(w.amplifier_order), w.jackson, 0.8);

  const Envelope env{a_bar, b_bar, w.kappa, w.tau};
  WindowCertificate& cert = w.certificate;
  const std::size_t d = w.poly.degree();
  const std::size_t n_ext = std::max<std::size_t>(2 * d, 1);
  const std::vector<double> ext =
      detail::extrema_values_from_coeffs(w.poly.coeffs(), n_ext);
  for (std::size_t j = 0; j <= n_ext; ++j) {
    const double x = std::cos(std::numbers::pi * static_cast<double>(j) /
                              static_cast<double>(n_ext));
    env.record(x, ext[j], cert);
  }
  for (std::size_t i = 0; i < kCertGrid; ++i) {
    env.record(uniform_grid_point(i),
               amplifier_value(w.amplifier_order, 0.8 * fit.grid_values[i]),
               cert);
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = unif(rng);
    const double factored = amplifier_value(w.amplifier_order, 0.8 * w.jackson(x));
    cert.form_mismatch = std::max(cert.form_mismatch, std::abs(w.poly(x) - factored));
  }
  if (cert.max_violation > kWindowCertTolerance || cert.form_mismatch > 1e-8) {
    fail(ErrorCode::kCertificationFailed,
         "window_poly: envelope violation " + std::to_string(cert.max_violation) +
             ", form mismatch " + std::to_string(cert.form_mismatch));
  }
  return w;
}

std::vector<double> kpm_reconstruct(std::span<const double> moments,
                                    std::span<const double> grid) {
  for (double x : grid) {
    if (!(x > -1.0 && x < 1.0)) {
      fail(ErrorCode::kGridOutOfRange, "kpm_reconstruct: grid point outside (-1,1)");
    }
  }
  if (moments.empty()) return std::vector<double>(grid.size(), 0.0);
  const std::vector<double> g = jackson_damping(moments.size());
  std::vector<double> c(moments.size());
  for (std::size_t n = 0; n < moments.size(); ++n) {
    c[n] = (n == 0 ? 1.0 : 2.0) * g[n] * moments[n];
  }
  const ChebyshevPoly series(std::move(c));
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) {
    out.push_back(series(x) / (std::numbers::pi * std::sqrt(1.0 - x * x)));
  }
  return out;
}

}  // namespace blockest
