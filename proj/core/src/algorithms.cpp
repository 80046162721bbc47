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

#include "blockest/algorithms.hpp"

#include <cmath>

#include "blockest/block_encoding.hpp"
#include "blockest/error.hpp"
#include "blockest/spectral_transform.hpp"

namespace blockest {

namespace {

void check_eps_delta(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) {
    fail(ErrorCode::kOutOfRange, "eps must lie in (0,1)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    fail(ErrorCode::kOutOfRange, "delta must lie in (0,1)");
  }
}

std::vector<double> observation_times(const CorrelationSpec& spec) {
  std::vector<double> times;
  for (const auto& o : spec.observables) times.push_back(o.time);
  return times;
}

void check_correlation(const CorrelationSpec& spec) {
  if (spec.observables.empty()) {
    fail(ErrorCode::kEmptyObservables, "correlate needs at least one observable");
  }
  check_eps_delta(spec.eps, spec.delta);
  const std::size_t q = spec.hamiltonian.qubits();
  for (const auto& o : spec.observables) {
    if (o.observable.qubits() != q) {
      fail(ErrorCode::kDimensionMismatch,
           "observable and Hamiltonian act on different qubit counts");
    }
    if (!std::isfinite(o.time)) {
      fail(ErrorCode::kOutOfRange, "observation times must be finite");
    }
  }
  if (spec.state.system_dim() != spec.hamiltonian.dimension()) {
    fail(ErrorCode::kDimensionMismatch, "state and Hamiltonian dimensions differ");
  }
}

}  // namespace

ComplexityReport complexity_report(const CorrelationSpec& spec) {
  check_correlation(spec);
  std::vector<std::uint64_t> costs;
  double gamma = 1.0;
  for (const auto& o : spec.observables) {
    costs.push_back(o.observable.size());
    gamma *= o.observable.scale();
  }
  const std::vector<double> times = observation_times(spec);
  return correlation_report(spec.hamiltonian.size(), spec.hamiltonian.scale(),
                            costs, times, spec.state.cost(), gamma, spec.eps,
                            spec.delta);
}

CorrelationResult correlate(const CorrelationSpec& spec, EstimationMode mode,
                            std::uint64_t seed) {
  check_correlation(spec);
  const std::size_t n = spec.observables.size();
  const double n1 = static_cast<double>(n + 1);
  const double eps0 = spec.eps / (2.0 * n1 * n1);

  std::vector<BlockEncoding> factors;
  double gamma = 1.0;
  double previous = 0.0;
  for (const auto& o : spec.observables) {
    factors.push_back(evolution_encoding(spec.hamiltonian, o.time - previous, eps0));
    factors.push_back(encode_pauli_sum(o.observable));
    gamma *= o.observable.scale();
    previous = o.time;
  }
  factors.push_back(evolution_encoding(spec.hamiltonian, -previous, eps0));
  const BlockEncoding gamma_enc = product(factors);

  CorrelationResult r;
  r.estimate = estimate_complex(gamma_enc, spec.state, spec.eps / 2.0,
                                spec.delta, mode, seed);
  r.estimate.target_eps = spec.eps;
  r.gamma = gamma;
  r.evolution_accuracy = eps0;
  r.composed_accuracy = gamma_enc.accuracy();
  r.encoding_cost = gamma_enc.cost();
  r.report = complexity_report(spec);
  return r;
}

namespace {

void check_request(const SketchRequest& req) {
  check_eps_delta(req.eps, req.delta);
  if (!(req.rho_max > 0.0)) {
    fail(ErrorCode::kOutOfRange, "rho_max must be positive");
  }
  if (req.kind != SketchKind::kDos && !req.state) {
    fail(ErrorCode::kValidationError, "this sketch needs a state");
  }
  if (req.state && req.state->system_dim() != req.hamiltonian.dimension()) {
    fail(ErrorCode::kDimensionMismatch, "state and Hamiltonian dimensions differ");
  }
  if (req.kind == SketchKind::kResponse) {
    if (!req.b_op || !req.c_op) {
      fail(ErrorCode::kValidationError, "response sketch needs B and C");
    }
    if (req.b_op->qubits() != req.hamiltonian.qubits() ||
        req.c_op->qubits() != req.hamiltonian.qubits()) {
      fail(ErrorCode::kDimensionMismatch,
           "B, C and the Hamiltonian act on different qubit counts");
    }
  }
  if (req.interval) {
    const double alpha = req.hamiltonian.scale();
    const auto [a, b] = *req.interval;
    if (!(-alpha < a && a < b && b < alpha)) {
      fail(ErrorCode::kBadInterval, "integral needs -alpha < a < b < alpha");
    }
  }
}

WindowSummary summarize(const WindowPoly& w) {
  return {w.a_bar,          w.b_bar,          w.eta_rel,  w.kappa, w.tau,
          w.jackson_degree, w.amplifier_order, w.degree(), w.certificate, w.poly};
}

}  // namespace

SketchResult dos_sketch(const SketchRequest& req, EstimationMode mode,
                        std::uint64_t seed) {
  if (req.kind == SketchKind::kResponse) {
    fail(ErrorCode::kValidationError, "dos_sketch got a response request");
  }
  check_request(req);
  const PauliSum& h = req.hamiltonian;
  const BlockEncoding h_enc = encode_pauli_sum(h);
  const PreparationUnitary state = req.kind == SketchKind::kDos
                                       ? prepare_maximally_mixed(h.dimension())
                                       : *req.state;
  SketchResult r;
  if (req.interval) {
    const double alpha = h.scale();
    const WindowPoly w =
        window_poly(req.interval->first / alpha, req.interval->second / alpha,
                    req.eps / (3.0 * req.rho_max), req.allow_small_eta);
    const BlockEncoding enc = apply_polynomial(h_enc, w.poly, req.eps / 3.0);
    r.values.push_back(
        estimate_observable(enc, state, req.eps / 3.0, req.delta, mode, seed));
    r.window_meta = summarize(w);
  } else {
    for_each_chebyshev_encoding(
        h_enc, req.moments, [&](std::size_t n, const BlockEncoding& enc) {
          r.values.push_back(estimate_observable(enc, state, req.eps, req.delta,
                                                 mode, seed + 2 * n));
          r.chebyshev_orders.push_back(n);
        });
  }
  r.cost_report = complexity_report(req);
  return r;
}

SketchResult response_sketch(const SketchRequest& req, EstimationMode mode,
                             std::uint64_t seed) {
  if (req.kind != SketchKind::kResponse) {
    fail(ErrorCode::kValidationError, "response_sketch got a density request");
  }
  check_request(req);
  const PauliSum& h = req.hamiltonian;
  const BlockEncoding h_enc = encode_pauli_sum(h);
  const BlockEncoding b_enc = encode_pauli_sum(*req.b_op);
  const BlockEncoding c_enc = encode_pauli_sum(*req.c_op);
  const double bg = b_enc.scale() * c_enc.scale();

  SketchResult r;
  if (req.interval) {
    const double alpha = h.scale();
    const WindowPoly w =
        window_poly(req.interval->first / alpha, req.interval->second / alpha,
                    req.eps / (3.0 * req.rho_max * bg), req.allow_small_eta);
    const std::vector<BlockEncoding> parts{
        b_enc, apply_polynomial(h_enc, w.poly, req.eps / 3.0), c_enc};
    r.values.push_back(estimate_complex(product(parts), *req.state,
                                        req.eps / 3.0, req.delta, mode, seed));
    r.window_meta = summarize(w);
  } else {
    for_each_chebyshev_encoding(
        h_enc, req.moments, [&](std::size_t n, const BlockEncoding& enc) {
          const std::vector<BlockEncoding> parts{b_enc, enc, c_enc};
          r.values.push_back(estimate_complex(product(parts), *req.state,
                                              req.eps, req.delta, mode,
                                              seed + 2 * n));
          r.chebyshev_orders.push_back(n);
        });
  }
  r.cost_report = complexity_report(req);
  return r;
}

SketchResult sketch(const SketchRequest& req, EstimationMode mode,
                    std::uint64_t seed) {
  return req.kind == SketchKind::kResponse ? response_sketch(req, mode, seed)
                                           : dos_sketch(req, mode, seed);
}

KpmSketch kpm_sketch(const SketchRequest& req, std::span<const double> grid,
                     EstimationMode mode, std::uint64_t seed) {
  if (req.interval) {
    fail(ErrorCode::kValidationError, "kpm_sketch needs moments mode");
  }
  for (double x : grid) {
    if (!(x > -1.0 && x < 1.0)) {
      fail(ErrorCode::kGridOutOfRange, "kpm grid point outside (-1,1)");
    }
  }
  KpmSketch out{sketch(req, mode, seed), {}};
  std::vector<double> moments;
  for (const auto& v : out.sketch.values) moments.push_back(v.value.real());
  out.reconstruction = kpm_reconstruct(moments, grid);
  return out;
}

ComplexityReport complexity_report(const SketchRequest& req) {
  check_request(req);
  const std::uint64_t q = req.hamiltonian.size();
  if (req.kind == SketchKind::kResponse) {
    const double beta = req.b_op->scale();
    const double gamma = req.c_op->scale();
    const std::uint64_t r_cost = req.state->cost();
    if (req.interval) {
      return response_integral_report(q, req.rho_max, beta, gamma,
                                      req.b_op->size(), req.c_op->size(),
                                      r_cost, req.eps, req.delta);
    }
    return response_moment_report(q, req.moments, beta, gamma, req.b_op->size(),
                                  req.c_op->size(), r_cost, req.eps, req.delta);
  }
  const bool local = req.kind == SketchKind::kLdos;
  const double prep = local ? static_cast<double>(req.state->cost())
                            : static_cast<double>(req.hamiltonian.qubits());
  if (req.interval) {
    return dos_integral_report(q, req.rho_max, req.eps, req.delta, prep, local);
  }
  return dos_moment_report(q, req.moments, req.eps, req.delta, prep, local);
}

}  // namespace blockest
