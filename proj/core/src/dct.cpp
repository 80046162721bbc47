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

#include "src/dct.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace blockest::detail {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void run_r2r(std::vector<double>& data, fftw_r2r_kind kind) {
  fftw_plan plan = nullptr;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_r2r_1d(static_cast<int>(data.size()), data.data(),
                            data.data(), kind, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

std::vector<double> gauss_nodes(std::size_t m) {
  std::vector<double> x(m);
  for (std::size_t j = 0; j < m; ++j) {
    x[j] = std::cos(std::numbers::pi * (static_cast<double>(j) + 0.5) /
                    static_cast<double>(m));
  }
  return x;
}

std::vector<double> coeffs_from_gauss_values(const std::vector<double>& values) {
  const std::size_t m = values.size();
  if (m == 0) return {};
  std::vector<double> y = values;
  // REDFT10: Y_k = 2 sum_j x_j cos(pi k (j + 1/2) / m).
  run_r2r(y, FFTW_REDFT10);
  const double inv = 1.0 / static_cast<double>(m);
  for (double& v : y) v *= inv;
  y[0] *= 0.5;
  return y;
}

std::vector<double> gauss_values_from_coeffs(const std::vector<double>& coeffs,
                                             std::size_t m) {
  if (m == 0) return {};
  std::vector<double> x(m, 0.0);
  for (std::size_t k = 0; k < coeffs.size() && k < m; ++k) {
    x[k] = k == 0 ? coeffs[0] : 0.5 * coeffs[k];
  }
  // REDFT01: Y_j = X_0 + 2 sum_{k>=1} X_k cos(pi k (j + 1/2) / m).
  run_r2r(x, FFTW_REDFT01);
  return x;
}

std::vector<double> extrema_values_from_coeffs(const std::vector<double>& coeffs,
                                               std::size_t n) {
  if (n == 0) {
    double s = 0.0;
    for (double c : coeffs) s += c;
    return {s};
  }
  std::vector<double> x(n + 1, 0.0);
  for (std::size_t k = 0; k < coeffs.size() && k <= n; ++k) {
    x[k] = (k == 0 || k == n) ? coeffs[k] : 0.5 * coeffs[k];
  }
  // REDFT00: Y_j = X_0 + (-1)^j X_n + 2 sum_{k=1}^{n-1} X_k cos(pi j k / n).
  run_r2r(x, FFTW_REDFT00);
  return x;
}

}  // namespace blockest::detail
