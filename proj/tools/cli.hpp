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

#ifndef BLOCKEST_TOOLS_CLI_HPP
#define BLOCKEST_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockest/blockest.hpp"

namespace blockest::cli {

enum class Command { kCorrelate, kDos, kLdos, kResponse, kKpm, kWindowPoly, kCost };

inline constexpr std::size_t kMaxQubits = 6;
inline constexpr std::size_t kMaxMoments = 4096;

struct ObservableArg {
  std::filesystem::path path;
  double time = 0.0;
};

struct RunConfig {
  Command command = Command::kDos;
  std::optional<std::filesystem::path> hamiltonian;
  std::vector<ObservableArg> observables;
  std::optional<std::filesystem::path> state;
  std::optional<std::filesystem::path> b_op;
  std::optional<std::filesystem::path> c_op;
  double eps = 0.05;
  double delta = 0.05;
  std::uint64_t seed = 0;
  EstimationMode mode = EstimationMode::kSampled;
  double rho_max = 1.0;
  std::optional<std::size_t> moments;
  std::optional<std::pair<double, double>> interval;
  std::optional<std::filesystem::path> output;
  bool emit_oracle = false;
  bool allow_small_eta = false;
  // window-poly
  double window_a = 0.0;
  double window_b = 0.0;
  double window_eta = 0.1;
  bool summary_only = false;
  // kpm
  std::size_t grid_points = 201;
  // cost
  std::string cost_kind = "dos";
};

struct Inputs {
  std::optional<PauliSum> hamiltonian;
  std::vector<TimedObservable> observables;
  std::optional<PreparationUnitary> state;
  std::optional<PauliSum> b_op;
  std::optional<PauliSum> c_op;
};

// Reads and validates every file named by the config; matrices are only
// allocated after the qubit limit has been checked.
Inputs parse_inputs(const RunConfig& config);

/// State file: one of `pure <amplitudes>`, `mixed`, `thermal <beta>` or
/// `basis <index>`; `#` starts a comment. Amplitudes are written as `0.5`,
/// `0.5+0.5i`, `-0.25i` or `(0.5,0.5)`.
PreparationUnitary parse_state(std::string_view text, std::string_view source,
                               std::size_t system_dim,
                               const PauliSum* hamiltonian = nullptr);

// Twelve significant digits; the form used in every output file.
std::string format_number(double x);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line handling (argv[0] included); returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockest::cli

#endif  // BLOCKEST_TOOLS_CLI_HPP
