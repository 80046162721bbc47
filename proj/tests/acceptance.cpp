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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from dense linear algebra in
// support/test_support.hpp, not from the library under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blockest/blockest.hpp"
#include "json.hpp"
#include "support/test_support.hpp"

namespace blockest::acceptance {
namespace {

using testing::Mat;
using testing::Vec;
using Clock = std::chrono::steady_clock;

const Complex kI(0.0, 1.0);

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << " want " << want << " tol " << tol;
    expect(std::abs(got - want) <= tol, os.str());
  }
  void le(double got, double bound, const std::string& what) {
    std::ostringstream os;
    os << what << ": " << got << " > " << bound;
    expect(got <= bound, os.str());
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  std::string note;

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string str(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

std::string tag(int trial) { return "trial " + std::to_string(trial); }

PauliSum single(double c, const char* word) { return PauliSum({{c, word}}); }

std::vector<double> eigenvalues(const PauliSum& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(testing::sum_matrix(h));
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

PreparationUnitary random_preparation(std::mt19937_64& rng, Eigen::Index d, Eigen::Index l) {
  return PreparationUnitary::from_state(testing::random_state(rng, d * l),
                                        static_cast<std::size_t>(l), 3);
}

// Partial trace of the purification, computed without the library.
Mat density_of(const PreparationUnitary& p) {
  const Vec& s = p.state();
  const auto l = static_cast<Eigen::Index>(p.purifier_dim());
  const auto d = static_cast<Eigen::Index>(p.system_dim());
  Mat rho = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index k = 0; k < l; ++k) rho(i, j) += s(i * l + k) * std::conj(s(j * l + k));
    }
  }
  return rho;
}

double trace_distance(const Mat& a, const Mat& b) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a - b);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// 1. LCU block times scale reproduces the dense Pauli sum.
void lcu_correctness(Check& c) {
  std::mt19937_64 rng(101);
  const auto start = Clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const PauliSum s = testing::random_pauli_sum(rng, 1 + trial % 3, 4);
    const BlockEncoding b = encode_pauli_sum(s);
    const double err = testing::max_abs_diff(encoded_block(b) * b.scale(), testing::sum_matrix(s));
    worst = std::max(worst, err);
    c.le(err, 1e-9, tag(trial));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.le(secs, 5.0, "runtime seconds");
  c.note = "50 sums, max err " + str(worst) + ", " + str(secs) + " s";
}

// 2. Observable estimation: exact trace identity, sampled calibration,
// query accounting.
void observable_estimation(Check& c) {
  const auto start = Clock::now();
  std::mt19937_64 rng(202);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t q = 1 + trial % 3;
    const auto d = Eigen::Index{1} << q;
    const PauliSum s = testing::random_pauli_sum(rng, q, 4);
    const PreparationUnitary rho = random_preparation(rng, d, 1 + trial % 3);
    const double truth = (density_of(rho) * testing::sum_matrix(s)).trace().real();
    const auto r = estimate_observable(encode_pauli_sum(s), rho, 0.02, 0.1,
                                       EstimationMode::kExact);
    worst = std::max(worst, std::abs(r.value.real() - truth));
    c.le(std::abs(r.value.real() - truth), 1e-8, "exact " + tag(trial));
  }

  const double eps = 0.02;
  const double delta = 0.1;
  const double allowed = delta + 0.065;
  std::vector<PauliSum> sums;
  std::vector<PreparationUnitary> states;
  std::vector<double> truths;
  for (int i = 0; i < 10; ++i) {
    const std::size_t q = 1 + i % 3;
    sums.push_back(testing::random_pauli_sum(rng, q, 4));
    states.push_back(random_preparation(rng, Eigen::Index{1} << q, 1 + i % 2));
    truths.push_back((density_of(states.back()) * testing::sum_matrix(sums.back())).trace().real());
  }
  int failures = 0;
  int amp_failures = 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t i = seed % sums.size();
    const BlockEncoding a = encode_pauli_sum(sums[i]);
    const auto r = estimate_observable(a, states[i], eps, delta, EstimationMode::kSampled, seed);
    if (std::abs(r.value.real() - truths[i]) > eps) ++failures;
    // The estimator runs amplitude estimation at precision eps / (2 alpha).
    const double amp_eps = eps / (2.0 * a.scale());
    c.le(static_cast<double>(r.grover_queries),
         kQueryBudgetConstant / amp_eps * std::log(1.0 / delta), "observable queries");

    const double amp = unit(rng);
    const auto ar = estimate_amplitude(amp, eps, delta, EstimationMode::kSampled, seed + 1000);
    if (std::abs(ar.value.real() - amp) > eps) ++amp_failures;
    c.le(static_cast<double>(ar.grover_queries),
         kQueryBudgetConstant / eps * std::log(1.0 / delta), "amplitude queries");
  }
  c.le(failures / 200.0, allowed, "observable failure fraction");
  c.le(amp_failures / 200.0, allowed, "amplitude failure fraction");
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.le(secs, 120.0, "runtime seconds");
  c.note = "exact max err " + str(worst) + "; failures " + std::to_string(failures) + "/200 and " +
           std::to_string(amp_failures) + "/200 (allowed " + str(allowed * 200) +
           "); C = " + str(kQueryBudgetConstant) + "; " + str(secs) + " s";
}

double spectral_norm_ref(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

// 3. Error composition for products of perturbed encodings.
void error_composition(Check& c) {
  std::mt19937_64 rng(303);
  double tightest = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 << (trial % 3);
    const int factors = 2 + trial % 4;
    std::vector<BlockEncoding> parts;
    Mat exact = Mat::Identity(d, d);
    Mat approx = Mat::Identity(d, d);
    for (int i = 0; i < factors; ++i) {
      const Mat a = testing::random_contraction(rng, d, 0.9);
      const Mat e = testing::random_contraction(rng, d, 0.005 * (1 + i));
      parts.push_back(encode_matrix(a + e, 1.0, 1, spectral_norm_ref(e)));
      exact = exact * a;
      approx = approx * (a + e);
    }
    const BlockEncoding p = product(parts);
    const double bound = p.accuracy();
    std::vector<double> errs;
    for (const auto& part : parts) errs.push_back(part.accuracy());
    c.near(bound, product_error_bound(errs), 1e-15, "accuracy field " + tag(trial));
    const double actual = spectral_norm_ref(encoded_block(p) - exact);
    c.le(testing::max_abs_diff(encoded_block(p), approx), 1e-9, "product block " + tag(trial));
    c.le(actual, bound + 1e-12, "bound " + tag(trial));
    tightest = std::max(tightest, actual / bound);
  }
  for (std::size_t n = 0; n <= 40; ++n) {
    for (double e0 : {1e-8, 1e-4, 0.01, 0.02}) {
      const std::vector<double> errs(n + 1, e0);
      const double nn = static_cast<double>(n + 1);
      const double got = product_error_bound(errs);
      c.le(got, nn * nn * e0 + 1e-12, "uniform n=" + std::to_string(n));
      c.near(got, nn * nn * e0, 1e-13 * nn * nn, "uniform exact n=" + std::to_string(n));
    }
  }
  c.note = "20 products, max actual/bound " + str(tightest) + "; uniform lists n <= 40";
}

double cheb_sum(const std::vector<double>& coeffs, double x) {
  double t0 = 1.0;
  double t1 = x;
  double s = coeffs[0];
  if (coeffs.size() > 1) s += coeffs[1] * x;
  for (std::size_t k = 2; k < coeffs.size(); ++k) {
    const double t2 = 2.0 * x * t1 - t0;
    s += coeffs[k] * t2;
    t0 = t1;
    t1 = t2;
  }
  return s;
}

// 4. Window polynomial parameters and grid certification.
void window_polynomial(Check& c) {
  struct Expected {
    double eta;
    std::size_t n, k, d;
  };
  // kappa = eta/4, n = ceil(24/kappa), k = ceil(6 ln(4/eta)), d = nk.
  const Expected table[] = {{0.4, 240, 14, 3360}, {0.2, 480, 18, 8640}, {0.1, 960, 23, 22080}};
  const std::pair<double, double> intervals[] = {{-0.3, 0.4}, {-0.8, -0.2}, {0.1, 0.85}};
  std::ostringstream note;
  double worst_runtime = 0.0;
  double worst_excess = 0.0;
  for (const Expected& e : table) {
    const auto start = Clock::now();
    for (const auto& [a, b] : intervals) {
      const std::string what = "eta=" + str(e.eta) + " [" + str(a) + "," + str(b) + "]";
      const WindowPoly w = window_poly(a, b, e.eta);
      const double kappa = e.eta / 4.0;
      const double tau = std::exp(-static_cast<double>(e.k) / 6.0);
      c.expect(w.jackson_degree == e.n, what + " n=" + std::to_string(w.jackson_degree));
      c.expect(w.amplifier_order == e.k, what + " k=" + std::to_string(w.amplifier_order));
      c.expect(w.degree() == e.d, what + " d=" + std::to_string(w.degree()));
      c.expect(static_cast<std::size_t>(std::ceil(6.0 * std::log(4.0 / e.eta))) == e.k,
               what + " k formula");
      c.near(w.kappa, kappa, 1e-15, what + " kappa");
      c.near(w.tau, tau, 1e-15, what + " tau");
      c.le(tau, e.eta / 4.0, what + " tau <= eta/4");
      c.le(w.certificate.max_violation, kWindowCertTolerance, what + " certificate");

      const std::vector<double>& coeffs = w.poly.coeffs();
      const std::size_t m = 20000;
      std::vector<double> grid;
      for (std::size_t j = 0; j <= m; ++j) grid.push_back(-1.0 + 2.0 * j / m);
      for (double x : {a, b, a - kappa, b + kappa}) grid.push_back(x);
      double excess = 0.0;
      for (double x : grid) {
        const double v = cheb_sum(coeffs, x);
        excess = std::max(excess, std::abs(v) - 1.0);
        if (x >= a && x <= b) excess = std::max(excess, (1.0 - tau) - v);
        if (x < a - kappa || x > b + kappa) {
          excess = std::max({excess, v - tau, -v});
        }
      }
      worst_excess = std::max(worst_excess, excess);
      c.le(excess, 1e-9, what + " grid envelope");
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    worst_runtime = std::max(worst_runtime, secs);
    c.le(secs, 60.0, "eta=" + str(e.eta) + " runtime seconds");
  }
  note << "9 windows, (n,k,d) = (240,14,3360) (480,18,8640) (960,23,22080); worst grid excess "
       << str(worst_excess) << "; slowest eta " << str(worst_runtime) << " s";
  c.note = note.str();
}

// 5. Alternating-reflection walk reproduces T_n of the block.
void chebyshev_encodings(Check& c) {
  std::mt19937_64 rng(505);
  double worst = 0.0;
  int cases = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const Eigen::Index d = trial % 2 == 0 ? 4 : 8;
    const Mat a = testing::random_hermitian_contraction(rng, d, trial < 6 ? 1.0 : 0.8);
    const BlockEncoding b = encode_matrix(a, 1.0);
    for (std::size_t n = 0; n <= 16; ++n) {
      const Mat expected = testing::matrix_function(
          a, [n](double x) { return std::cos(n * std::acos(std::clamp(x, -1.0, 1.0))); });
      const double err = testing::max_abs_diff(encoded_block(chebyshev_encoding(b, n)), expected);
      worst = std::max(worst, err);
      c.le(err, 1e-8, tag(trial) + " n=" + std::to_string(n));
      ++cases;
    }
  }
  for (int trial = 0; trial < 4; ++trial) {
    const PauliSum s = testing::random_pauli_sum(rng, 2 + trial % 2, 4);
    const BlockEncoding b = encode_pauli_sum(s);
    const Mat a = testing::sum_matrix(s) / s.scale();
    for (std::size_t n = 0; n <= 16; ++n) {
      const double err = testing::max_abs_diff(encoded_block(chebyshev_encoding(b, n)),
                                               testing::matrix_cheb(a, n));
      worst = std::max(worst, err);
      c.le(err, 1e-8, "lcu " + tag(trial) + " n=" + std::to_string(n));
      ++cases;
    }
  }
  c.note = std::to_string(cases) + " (matrix, n) pairs, max err " + str(worst);
}

// 6. DOS integral against eigenvalue mass.
void dos_integral(Check& c) {
  const double eps = 0.05;
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const PauliSum h = testing::random_pauli_sum(rng, 1 + trial % 3, 4);
    const double alpha = h.scale();
    // Relative endpoints keep a and b at least eta/4 inside (-1, 1).
    const double lo = -0.95;
    const double a_rel = lo + 1.5 * u(rng);
    const double b_rel = a_rel + 0.05 + (0.95 - a_rel - 0.05) * u(rng);
    const double a = alpha * a_rel;
    const double b = alpha * b_rel;
    SketchRequest req{h};
    req.interval = std::pair{a, b};
    req.eps = eps;
    req.allow_small_eta = true;
    const SketchResult r = dos_sketch(req, EstimationMode::kExact);
    const WindowSummary& w = *r.window_meta;
    const double kappa_abs = w.kappa * alpha;
    const std::vector<double> eigs = eigenvalues(h);
    double strip = 0.0;
    double inside = 0.0;
    for (double e : eigs) {
      if (std::abs(e - a) <= kappa_abs || std::abs(e - b) <= kappa_abs) strip += 1.0;
      if (e >= a && e <= b) inside += 1.0;
    }
    strip /= static_cast<double>(eigs.size());
    inside /= static_cast<double>(eigs.size());
    const double tol = w.tau + strip + eps;
    const double err = std::abs(r.values[0].value.real() - inside);
    worst_ratio = std::max(worst_ratio, err / tol);
    c.le(err, tol, tag(trial));
  }
  SketchRequest two{PauliSum({{0.3, "Z"}, {0.2, "X"}})};
  two.interval = std::pair{0.2, 0.45};
  two.eps = eps;
  two.allow_small_eta = true;
  const SketchResult r = dos_sketch(two, EstimationMode::kExact);
  const double kappa_abs = r.window_meta->kappa * 0.5;
  const double e = std::sqrt(0.13);
  const double strip =
      (std::abs(e - 0.2) <= kappa_abs || std::abs(e - 0.45) <= kappa_abs) ? 0.5 : 0.0;
  c.near(r.values[0].value.real(), 0.5, r.window_meta->tau + strip + eps, "0.3Z+0.2X");
  c.note = "25 instances at eps=0.05, worst err/tolerance " + str(worst_ratio) +
           "; two-eigenvalue case " + str(r.values[0].value.real());
}

// 7. Chebyshev moments against dense traces.
void moments(Check& c) {
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t q = 1 + trial % 3;
    const auto d = Eigen::Index{1} << q;
    const PauliSum h = testing::random_pauli_sum(rng, q, 4);
    SketchRequest req{h};
    req.moments = 64;
    std::optional<Mat> weight;
    if (trial % 2 == 1) {
      req.kind = SketchKind::kLdos;
      req.state = prepare_pure(testing::random_state(rng, d));
      weight = density_of(*req.state);
    } else {
      weight = Mat::Identity(d, d) / static_cast<double>(d);
    }
    const SketchResult r = dos_sketch(req, EstimationMode::kExact);
    const Mat scaled = testing::sum_matrix(h) / h.scale();
    Mat t0 = Mat::Identity(d, d);
    Mat t1 = scaled;
    for (std::size_t n = 0; n <= 64; ++n) {
      Mat tn;
      if (n == 0) {
        tn = t0;
      } else if (n == 1) {
        tn = t1;
      } else {
        tn = 2.0 * scaled * t1 - t0;
        t0 = t1;
        t1 = tn;
      }
      const double want = (*weight * tn).trace().real();
      const double got = r.values[n].value.real();
      worst = std::max(worst, std::abs(got - want));
      c.near(got, want, 1e-7, tag(trial) + " n=" + std::to_string(n));
    }
    const auto oracle = oracle_moments(h, h.scale(), 64, *weight);
    for (std::size_t n = 0; n <= 64; ++n) {
      c.near(r.values[n].value.real(), oracle[n], 1e-7, "oracle " + tag(trial));
    }
  }
  SketchRequest z{single(1.0, "Z")};
  z.moments = 64;
  const SketchResult r = dos_sketch(z, EstimationMode::kExact);
  for (std::size_t n = 0; n <= 64; ++n) {
    c.near(r.values[n].value.real(), n % 2 == 0 ? 1.0 : 0.0, 1e-9, "H=Z n=" + std::to_string(n));
  }
  c.note = "6 DOS/LDOS instances to n=64, max err " + str(worst) + "; H=Z exact";
}

// 8. Correlation functions.
void correlations(Check& c) {
  CorrelationSpec spec{single(1.0, "Z"),
                       {{single(1.0, "X"), std::numbers::pi / 4}, {single(1.0, "X"), 0.0}},
                       prepare_basis(2, 0),
                       0.02,
                       0.05};
  const Complex exact = correlate(spec, EstimationMode::kExact).estimate.value;
  c.le(std::abs(exact - kI), 1e-7, "<X(pi/4)X> exact");
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Complex v = correlate(spec, EstimationMode::kSampled, seed).estimate.value;
    if (std::abs(v.real()) <= 0.02 && std::abs(v.imag() - 1.0) <= 0.02) ++hits;
  }
  c.expect(hits >= 90, "sampled hits " + std::to_string(hits));

  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> time(-2.0, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t q = 1 + trial % 3;
    const auto d = Eigen::Index{1} << q;
    const PauliSum h = testing::random_pauli_sum(rng, q, 3);
    std::vector<TimedObservable> obs;
    const int n = 1 + trial % 3;
    for (int i = 0; i < n; ++i) obs.push_back({testing::random_pauli_sum(rng, q, 2), time(rng)});
    const PreparationUnitary state = random_preparation(rng, d, 1 + trial % 2);
    const CorrelationResult r =
        correlate({h, obs, state, 0.05, 0.05}, EstimationMode::kExact);
    // Dense reference: Tr(rho O_1(t_1) ... O_n(t_n)) with O(t) = e^{iHt} O e^{-iHt}.
    const Mat hm = testing::sum_matrix(h);
    Mat prod = Mat::Identity(d, d);
    for (const auto& o : obs) {
      const Mat u = testing::expm_i(hm, o.time);
      prod = prod * (u * testing::sum_matrix(o.observable) * u.adjoint());
    }
    const Complex want = (density_of(state) * prod).trace();
    const Complex oracle = oracle_correlation(h, obs, density_of(state));
    c.le(std::abs(want - oracle), 1e-10, "oracle agrees with dense " + tag(trial));
    const double err = std::max(std::abs(r.estimate.value.real() - oracle.real()),
                                std::abs(r.estimate.value.imag() - oracle.imag()));
    worst = std::max(worst, err);
    c.le(err, 1e-6, tag(trial));
  }
  c.note = "exact i err " + str(std::abs(exact - kI)) + "; sampled " + std::to_string(hits) +
           "/100 within 0.02; 25 random max err " + str(worst);
}

// 9. Linear response.
void linear_response(Check& c) {
  SketchRequest req{single(1.0, "Z")};
  req.kind = SketchKind::kResponse;
  req.moments = 1;
  req.b_op = single(1.0, "X");
  req.c_op = single(1.0, "X");
  req.state = prepare_basis(2, 0);
  const SketchResult r = response_sketch(req, EstimationMode::kExact);
  c.le(std::abs(r.values[0].value - 1.0), 1e-7, "n=0");
  c.le(std::abs(r.values[1].value + 1.0), 1e-7, "n=1");

  std::mt19937_64 rng(909);
  const double eps = 0.05;
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t q = 1 + trial % 3;
    const PauliSum h = testing::random_pauli_sum(rng, q, 3);
    const std::string id(q, 'I');
    SketchRequest dos{h};
    dos.moments = 6;
    dos.eps = eps;
    SketchRequest resp = dos;
    resp.kind = SketchKind::kResponse;
    resp.b_op = single(1.0, id.c_str());
    resp.c_op = single(1.0, id.c_str());
    resp.state = prepare_maximally_mixed(h.dimension());
    for (EstimationMode mode : {EstimationMode::kExact, EstimationMode::kSampled}) {
      const std::uint64_t seed = 100 + 2 * static_cast<std::uint64_t>(trial);
      const SketchResult a = dos_sketch(dos, mode, seed);
      const SketchResult b = response_sketch(resp, mode, seed + 1);
      for (std::size_t n = 0; n <= 6; ++n) {
        const double diff = std::abs(a.values[n].value - b.values[n].value);
        worst = std::max(worst, diff);
        c.le(diff, 2 * eps, tag(trial) + " n=" + std::to_string(n) + " " + to_string(mode));
      }
    }
  }
  c.note = "XZX moments (" + str(r.values[0].value.real()) + ", " +
           str(r.values[1].value.real()) + "); identity B,C vs DOS max diff " + str(worst) +
           " on 10 instances";
}

// 10. Exact maximally mixed preparation.
void maximally_mixed(Check& c) {
  double worst = 0.0;
  double worst_sine = 0.0;
  for (std::size_t d = 2; d <= 16; ++d) {
    const PreparationUnitary p = prepare_maximally_mixed(d);
    const auto n = static_cast<Eigen::Index>(d);
    const double dist =
        trace_distance(density_of(p), Mat::Identity(n, n) / static_cast<double>(d));
    worst = std::max(worst, dist);
    c.le(dist, 1e-9, "D=" + std::to_string(d));
    const MaximallyMixedPlan plan = maximally_mixed_plan(d);
    const double beta = std::sqrt(static_cast<double>(d) / std::ldexp(1.0, plan.qubits));
    c.near(plan.beta, beta, 1e-15, "beta D=" + std::to_string(d));
    const double k = static_cast<double>(plan.amplification.k);
    const double sine = std::sin((2 * k + 1) * std::asin(plan.amplification.gamma * beta));
    worst_sine = std::max(worst_sine, std::abs(sine - 1.0));
    c.near(sine, 1.0, 1e-12, "sine D=" + std::to_string(d));
  }
  c.note = "D = 2..16, max trace distance " + str(worst) + ", max |sin - 1| " + str(worst_sine);
}

// 11. Cost ledger against golden JSON.
void cost_ledger(Check& c) {
  using nlohmann::json;
  auto load = [&](const std::string& name) {
    std::ifstream in(std::string(BLOCKEST_GOLDEN_DIR) + "/" + name);
    c.expect(in.good(), "missing " + name);
    return in.good() ? json::parse(in) : json::object();
  };
  std::size_t values = 0;
  auto match = [&](const ComplexityReport& r, const json& expected) {
    for (const auto& [key, value] : expected.items()) {
      const double want = value.get<double>();
      const double got = key == "total" ? r.total : r.at(key);
      c.near(got, want, 1e-9 * std::max(1.0, std::abs(want)), r.algorithm + " " + key);
      ++values;
    }
  };
  const json corr = load("cost_correlation.json");
  for (const json& e : corr.value("evolution_cost", json::array())) {
    c.near(evolution_cost(e["Q"].get<std::uint64_t>(), e["alpha"].get<double>(),
                          e["t"].get<double>(), e["eps"].get<double>()),
           e["expected"].get<double>(), 1e-12, "evolution_cost");
    ++values;
  }
  for (const json& e : corr.value("correlation", json::array())) {
    const json& cfg = e["config"];
    match(correlation_report(cfg["Q"].get<std::uint64_t>(), cfg["alpha"].get<double>(),
                             cfg["observable_costs"].get<std::vector<std::uint64_t>>(),
                             cfg["times"].get<std::vector<double>>(),
                             cfg["S"].get<std::uint64_t>(), cfg["gamma"].get<double>(),
                             cfg["eps"].get<double>(), cfg["delta"].get<double>()),
          e["expected"]);
  }
  const json dos = load("cost_dos.json");
  for (const json& e : dos.value("dos_integral", json::array())) {
    const json& cfg = e["config"];
    match(dos_integral_report(cfg["Q"].get<std::uint64_t>(), cfg["rho_max"].get<double>(),
                              cfg["eps"].get<double>(), cfg["delta"].get<double>(),
                              cfg["prep_term"].get<double>(), cfg["local"].get<bool>()),
          e["expected"]);
  }
  for (const json& e : dos.value("dos_moment", json::array())) {
    const json& cfg = e["config"];
    match(dos_moment_report(cfg["Q"].get<std::uint64_t>(), cfg["n"].get<std::size_t>(),
                            cfg["eps"].get<double>(), cfg["delta"].get<double>(),
                            cfg["prep_term"].get<double>(), cfg["local"].get<bool>()),
          e["expected"]);
  }
  const json resp = load("cost_response.json");
  for (const json& e : resp.value("response_integral", json::array())) {
    const json& cfg = e["config"];
    match(response_integral_report(
              cfg["Q"].get<std::uint64_t>(), cfg["rho_max"].get<double>(),
              cfg["beta"].get<double>(), cfg["gamma"].get<double>(),
              cfg["S_B"].get<std::uint64_t>(), cfg["S_C"].get<std::uint64_t>(),
              cfg["R"].get<std::uint64_t>(), cfg["eps"].get<double>(), cfg["delta"].get<double>()),
          e["expected"]);
  }
  for (const json& e : resp.value("response_moment", json::array())) {
    const json& cfg = e["config"];
    match(response_moment_report(
              cfg["Q"].get<std::uint64_t>(), cfg["n"].get<std::size_t>(),
              cfg["beta"].get<double>(), cfg["gamma"].get<double>(),
              cfg["S_B"].get<std::uint64_t>(), cfg["S_C"].get<std::uint64_t>(),
              cfg["R"].get<std::uint64_t>(), cfg["eps"].get<double>(), cfg["delta"].get<double>()),
          e["expected"]);
  }
  c.expect(values >= 30, "too few golden values: " + std::to_string(values));
  c.note = "3 fixture files, " + std::to_string(values) + " golden values";
}

// 12. KPM reconstruction of H = Z.
void kpm_sketch_z(Check& c) {
  SketchRequest req{single(1.0, "Z")};
  req.moments = 32;
  const std::size_t m = 201;
  std::vector<double> grid(m);
  for (std::size_t j = 0; j < m; ++j) grid[j] = -1.0 + (2.0 * j + 1.0) / m;
  const KpmSketch k = kpm_sketch(req, grid, EstimationMode::kExact);
  double asym = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    asym = std::max(asym, std::abs(k.reconstruction[j] - k.reconstruction[m - 1 - j]));
  }
  c.le(asym, 1e-6, "asymmetry");
  std::vector<std::size_t> order(m);
  for (std::size_t j = 0; j < m; ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return k.reconstruction[a] > k.reconstruction[b]; });
  for (int i = 0; i < 2; ++i) {
    c.expect(std::abs(grid[order[i]]) > 0.9, "peak at x=" + str(grid[order[i]]));
  }
  c.note = "N=32 on 201 points, asymmetry " + str(asym) + ", peaks at " + str(grid[order[0]]) +
           " and " + str(grid[order[1]]);
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace

int run_all() {
  const std::vector<Criterion> criteria = {
      {1, "LCU correctness", lcu_correctness},
      {2, "observable estimation", observable_estimation},
      {3, "error composition", error_composition},
      {4, "window polynomial", window_polynomial},
      {5, "Chebyshev encodings", chebyshev_encodings},
      {6, "DOS integral", dos_integral},
      {7, "DOS/LDOS moments", moments},
      {8, "correlation functions", correlations},
      {9, "linear response", linear_response},
      {10, "maximally mixed preparation", maximally_mixed},
      {11, "cost ledger", cost_ledger},
      {12, "KPM sketch", kpm_sketch_z},
  };
  const auto suite_start = Clock::now();
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!check.ok()) ++failed;
    std::printf("%s  [%2d] %-28s %6.1fs  %zu checks  %s\n", check.ok() ? "PASS" : "FAIL", cr.id,
                cr.name, secs, check.count(), check.note.c_str());
    for (const std::string& f : check.failures()) std::printf("        %s\n", f.c_str());
    if (check.failed() > check.failures().size()) {
      std::printf("        ... %zu more\n", check.failed() - check.failures().size());
    }
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), total);
  return failed == 0 ? 0 : 1;
}

}  // namespace blockest::acceptance

int main() { return blockest::acceptance::run_all(); }
