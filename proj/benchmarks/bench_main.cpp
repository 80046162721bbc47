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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "blockest/blockest.hpp"

namespace blockest {
namespace {

PauliSum chain(std::size_t qubits) {
  std::vector<PauliTerm> terms;
  for (std::size_t i = 0; i + 1 < qubits; ++i) {
    std::string zz(qubits, 'I');
    zz[i] = 'Z';
    zz[i + 1] = 'Z';
    terms.emplace_back(1.0, zz);
  }
  for (std::size_t i = 0; i < qubits; ++i) {
    std::string x(qubits, 'I');
    x[i] = 'X';
    terms.emplace_back(0.7, x);
  }
  return PauliSum(std::move(terms));
}

void BM_EncodePauliSum(benchmark::State& state) {
  const PauliSum h = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(encode_pauli_sum(h));
  state.counters["terms"] = static_cast<double>(h.terms().size());
}
BENCHMARK(BM_EncodePauliSum)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_ChebyshevEncoding(benchmark::State& state) {
  const BlockEncoding b = encode_pauli_sum(chain(3));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_encoding(b, n));
}
BENCHMARK(BM_ChebyshevEncoding)->RangeMultiplier(4)->Range(1, 64)->Unit(benchmark::kMicrosecond);

void BM_ChebyshevSweep(benchmark::State& state) {
  const BlockEncoding b = encode_pauli_sum(chain(3));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    for_each_chebyshev_encoding(b, n, [](std::size_t, const BlockEncoding& t) {
      benchmark::DoNotOptimize(t.unitary().data());
    });
  }
}
BENCHMARK(BM_ChebyshevSweep)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_WindowPoly(benchmark::State& state) {
  const double eta = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(window_poly(-0.3, 0.4, eta));
  state.counters["degree"] = static_cast<double>(window_poly(-0.3, 0.4, eta).degree());
}
BENCHMARK(BM_WindowPoly)->Arg(4)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_SampledAmplitude(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_amplitude(0.37, eps, 0.05, EstimationMode::kSampled, seed++));
  }
}
BENCHMARK(BM_SampledAmplitude)->RangeMultiplier(10)->Range(10, 10000);

void BM_SampledObservable(benchmark::State& state) {
  const PauliSum h = chain(3);
  const BlockEncoding a = encode_pauli_sum(h);
  const PreparationUnitary rho = prepare_maximally_mixed(h.dimension());
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_observable(a, rho, 0.02, 0.05, EstimationMode::kSampled, seed++));
  }
}
BENCHMARK(BM_SampledObservable)->Unit(benchmark::kMicrosecond);

void BM_DosMoments(benchmark::State& state) {
  SketchRequest req{chain(3)};
  req.moments = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dos_sketch(req, EstimationMode::kExact));
}
BENCHMARK(BM_DosMoments)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace blockest

BENCHMARK_MAIN();
