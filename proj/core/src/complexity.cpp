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

#include "blockest/complexity.hpp"

#include <cmath>

#include "blockest/error.hpp"
#include "blockest/spectral_transform.hpp"

namespace blockest {

double ComplexityReport::at(const std::string& key) const {
  for (const auto& [k, v] : inputs) {
    if (k == key) return v;
  }
  for (const auto& [k, v] : breakdown) {
    if (k == key) return v;
  }
  fail(ErrorCode::kOutOfRange, "complexity report has no entry " + key);
}

namespace {

void check_eps_delta(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0)) {
    fail(ErrorCode::kOutOfRange, "complexity report needs eps, delta in (0,1)");
  }
}

double u64(std::uint64_t v) { return static_cast<double>(v); }

}  // namespace

ComplexityReport correlation_report(std::uint64_t q, double alpha,
                                    std::span<const std::uint64_t> observable_costs,
                                    std::span<const double> times,
                                    std::uint64_t state_cost, double gamma,
                                    double eps, double delta) {
  check_eps_delta(eps, delta);
  if (times.empty() || times.size() != observable_costs.size()) {
    fail(ErrorCode::kEmptyObservables,
         "correlation report needs one time per observable");
  }
  const std::size_t n = times.size();
  const double n1 = static_cast<double>(n + 1);
  const double eps0 = eps / (2.0 * n1 * n1);

  ComplexityReport r;
  r.algorithm = "correlation";
  r.inputs = {{"Q", u64(q)},          {"alpha", alpha},
              {"n", static_cast<double>(n)}, {"S", u64(state_cost)},
              {"gamma", gamma},       {"eps", eps},
              {"delta", delta}};

  double r_sum = 0.0;
  for (auto c : observable_costs) r_sum += u64(c);
  double t_sum = 0.0;
  double tau_abs = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double before = j == 0 ? 0.0 : times[j - 1];
    const double after = j == n ? 0.0 : times[j];
    const double tau = after - before;
    const double t = evolution_cost(q, alpha, tau, eps0);
    r.breakdown.emplace_back("T_" + std::to_string(j), t);
    t_sum += t;
    tau_abs += std::abs(tau);
  }
  const double qd = u64(q);
  const double nd = static_cast<double>(n);
  const double w = r_sum + t_sum;
  const double w_loose = r_sum + qd * alpha * tau_abs + qd * n1 * std::log(1.0 / eps0);
  const double w_round = r_sum + qd * alpha * tau_abs + qd * nd * nd * std::log(nd / eps);
  r.breakdown.emplace_back("sum_R", r_sum);
  r.breakdown.emplace_back("evolution_accuracy", eps0);
  r.breakdown.emplace_back("W", w);
  r.breakdown.emplace_back("W_loose", w_loose);
  r.breakdown.emplace_back("W_rounded", w_round);
  r.total = (u64(state_cost) + w) * (gamma / eps) * std::log(1.0 / delta);
  return r;
}

ComplexityReport dos_integral_report(std::uint64_t q, double rho_max, double eps,
                                     double delta, double prep_term, bool local) {
  check_eps_delta(eps, delta);
  ComplexityReport r;
  r.algorithm = local ? "ldos-integral" : "dos-integral";
  r.inputs = {{"Q", u64(q)},   {"rho_max", rho_max}, {"eps", eps},
              {"delta", delta}, {local ? "R" : "log2_D", prep_term}};
  const double ratio = rho_max / eps;
  const double degree_term = u64(q) * ratio * std::log(ratio);
  const double repetitions = (1.0 / eps) * std::log(1.0 / delta);
  r.breakdown = {{"degree_term", degree_term},
                 {"preparation_term", prep_term},
                 {"repetitions", repetitions}};
  r.total = (degree_term + prep_term) * repetitions;
  return r;
}

ComplexityReport dos_moment_report(std::uint64_t q, std::size_t n, double eps,
                                   double delta, double prep_term, bool local) {
  check_eps_delta(eps, delta);
  ComplexityReport r;
  r.algorithm = local ? "ldos-moment" : "dos-moment";
  r.inputs = {{"Q", u64(q)},   {"n", static_cast<double>(n)}, {"eps", eps},
              {"delta", delta}, {local ? "R" : "log2_D", prep_term}};
  const double encoding = u64(q) * static_cast<double>(n);
  const double repetitions = (1.0 / eps) * std::log(1.0 / delta);
  r.breakdown = {{"encoding_term", encoding},
                 {"preparation_term", prep_term},
                 {"repetitions", repetitions}};
  r.total = (encoding + prep_term) * repetitions;
  return r;
}

ComplexityReport response_integral_report(std::uint64_t q, double rho_max,
                                          double beta, double gamma,
                                          std::uint64_t s_b, std::uint64_t s_c,
                                          std::uint64_t r_cost, double eps,
                                          double delta) {
  check_eps_delta(eps, delta);
  ComplexityReport r;
  r.algorithm = "response-integral";
  r.inputs = {{"Q", u64(q)},       {"rho_max", rho_max}, {"beta", beta},
              {"gamma", gamma},    {"S_B", u64(s_b)},    {"S_C", u64(s_c)},
              {"R", u64(r_cost)},  {"eps", eps},         {"delta", delta}};
  const double ratio = rho_max * beta * gamma / eps;
  const double d = ratio * std::log(ratio);
  const double repetitions = (beta * gamma / eps) * std::log(1.0 / delta);
  r.breakdown = {{"degree", d},
                 {"encoding_term", u64(q) * d},
                 {"repetitions", repetitions}};
  r.total = (u64(q) * d + u64(s_b) + u64(s_c) + u64(r_cost)) * repetitions;
  return r;
}

ComplexityReport response_moment_report(std::uint64_t q, std::size_t n,
                                        double beta, double gamma,
                                        std::uint64_t s_b, std::uint64_t s_c,
                                        std::uint64_t r_cost, double eps,
                                        double delta) {
  check_eps_delta(eps, delta);
  ComplexityReport r;
  r.algorithm = "response-moment";
  r.inputs = {{"Q", u64(q)},      {"n", static_cast<double>(n)}, {"beta", beta},
              {"gamma", gamma},   {"S_B", u64(s_b)},             {"S_C", u64(s_c)},
              {"R", u64(r_cost)}, {"eps", eps},                  {"delta", delta}};
  const double encoding = u64(q) * static_cast<double>(n);
  const double repetitions = beta * gamma / eps;
  r.breakdown = {{"encoding_term", encoding}, {"repetitions", repetitions}};
  r.total = (encoding + u64(s_b) + u64(s_c) + u64(r_cost)) * repetitions;
  return r;
}

}  // namespace blockest
