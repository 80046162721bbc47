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

#ifndef BLOCKEST_PAULI_HPP
#define BLOCKEST_PAULI_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockest/linalg.hpp"

namespace blockest {

// A real multiple of a Pauli word. The first character of the word acts on
// the most significant qubit.
class PauliTerm {
 public:
  PauliTerm(double coefficient, std::string word);

  double coefficient() const { return coefficient_; }
  const std::string& word() const { return word_; }
  std::size_t qubits() const { return word_.size(); }

 private:
  double coefficient_;
  std::string word_;
};

// Weighted sum of Pauli words on a fixed number of qubits. Duplicate words
// are merged on construction (terms that cancel exactly are dropped).
class PauliSum {
 public:
  explicit PauliSum(std::vector<PauliTerm> terms);

  std::span<const PauliTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t qubits() const { return qubits_; }
  std::size_t dimension() const { return std::size_t{1} << qubits_; }

  // Sum of |coefficient|; the natural block-encoding scale.
  double scale() const;

  /// Reads the text format: one `<coefficient> <word>` pair per line, `#`
  /// starts a comment, blank lines are ignored. Errors name the source and
  /// the line number.
  static PauliSum parse(std::istream& in, std::string_view source = "<input>");
  static PauliSum parse(std::string_view text, std::string_view source = "<input>");
  static PauliSum from_file(const std::filesystem::path& path);

 private:
  std::vector<PauliTerm> terms_;
  std::size_t qubits_ = 0;
};

// An observable O evaluated in the Heisenberg picture at time t.
struct TimedObservable {
  PauliSum observable;
  double time;
};

ComplexMatrix pauli_term_matrix(const PauliTerm& term);
ComplexMatrix pauli_sum_matrix(const PauliSum& sum);

}  // namespace blockest

#endif  // BLOCKEST_PAULI_HPP
