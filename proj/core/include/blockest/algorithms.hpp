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

#ifndef BLOCKEST_ALGORITHMS_HPP
#define BLOCKEST_ALGORITHMS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "blockest/chebyshev.hpp"
#include "blockest/complexity.hpp"
#include "blockest/estimation.hpp"
#include "blockest/pauli.hpp"
#include "blockest/state_prep.hpp"

namespace blockest {

struct CorrelationSpec {
  PauliSum hamiltonian;
  std::vector<TimedObservable> observables;
  PreparationUnitary state;
  double eps;
  double delta;
};

struct CorrelationResult {
  EstimationResult estimate;
  double gamma = 1.0;                // product of observable scales
  double evolution_accuracy = 0.0;   // eps / (2 (n+1)^2)
  double composed_accuracy = 0.0;    // product_error_bound over all factors
  std::uint64_t encoding_cost = 0;   // cost of the product encoding
  ComplexityReport report;
};

/// Tr(rho O_1(t_1) ... O_n(t_n)) with O(t) = e^{iHt} O e^{-iHt}. The product
/// is rewritten as e^{iH tau_0} O_1 e^{iH tau_1} ... O_n e^{iH tau_n}
/// (tau_j = t_{j+1} - t_j, t_0 = t_{n+1} = 0), each evolution encoded to
/// eps / (2 (n+1)^2), and the real and imaginary parts estimated to eps/2.
/// Throws EmptyObservables, DimensionMismatch or OutOfRange.
CorrelationResult correlate(const CorrelationSpec& spec, EstimationMode mode,
                            std::uint64_t seed = 0);

enum class SketchKind { kDos, kLdos, kResponse };

struct SketchRequest {
  PauliSum hamiltonian;
  SketchKind kind = SketchKind::kDos;
  // Site state (LDOS) or system state (response); ignored for DOS.
  std::optional<PreparationUnitary> state;
  std::optional<PauliSum> b_op;
  std::optional<PauliSum> c_op;
  // Integral over [a, b] when set, otherwise moments 0..moments.
  std::optional<std::pair<double, double>> interval;
  std::size_t moments = 0;
  double eps = 0.05;
  double delta = 0.05;
  double rho_max = 1.0;
  bool allow_small_eta = false;
};

struct WindowSummary {
  double a_bar, b_bar, eta_rel, kappa, tau;
  std::size_t jackson_degree, amplifier_order, degree;
  WindowCertificate certificate;
  ChebyshevPoly poly;
};

struct SketchResult {
  std::vector<EstimationResult> values;
  std::vector<std::size_t> chebyshev_orders;  // empty in integral mode
  ComplexityReport cost_report;
  std::optional<WindowSummary> window_meta;
};

/// Density of states (maximally mixed state) or local density of states
/// (the request's site state) of H with alpha = H.scale().
///
/// Integral mode: window w over [a/alpha, b/alpha] with
/// eta = eps / (3 rho_max), its encoding at accuracy eps/3 and estimation of
/// Tr(rho w(H/alpha)) to eps/3. Moments mode: Tr(rho T_n(H/alpha)) to eps
/// for n = 0..N; moment n uses seed + 2n.
/// Throws BadInterval unless -alpha < a < b < alpha, ValidationError for a
/// missing LDOS state.
SketchResult dos_sketch(const SketchRequest& req, EstimationMode mode,
                        std::uint64_t seed = 0);

/// <B f(H/alpha) C> in the request's state, for f the window (integral mode,
/// eta = eps / (3 rho_max beta gamma), estimation to eps/3) or T_n (moments,
/// estimation to eps), through product([B, f(H/alpha), C]) and complex
/// estimation.
SketchResult response_sketch(const SketchRequest& req, EstimationMode mode,
                             std::uint64_t seed = 0);

// Dispatch on req.kind.
SketchResult sketch(const SketchRequest& req, EstimationMode mode,
                    std::uint64_t seed = 0);

struct KpmSketch {
  SketchResult sketch;
  std::vector<double> reconstruction;
};

// Moments from sketch(), real parts fed to kpm_reconstruct on the grid.
KpmSketch kpm_sketch(const SketchRequest& req, std::span<const double> grid,
                     EstimationMode mode, std::uint64_t seed = 0);

ComplexityReport complexity_report(const CorrelationSpec& spec);
ComplexityReport complexity_report(const SketchRequest& req);

}  // namespace blockest

#endif  // BLOCKEST_ALGORITHMS_HPP
