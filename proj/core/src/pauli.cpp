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

#include "blockest/pauli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "blockest/error.hpp"

namespace blockest {

PauliTerm::PauliTerm(double coefficient, std::string word)
    : coefficient_(coefficient), word_(std::move(word)) {
  if (word_.empty()) fail(ErrorCode::kValidationError, "Pauli word is empty");
  for (char c : word_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      fail(ErrorCode::kValidationError,
           "Pauli word '" + word_ + "' contains a letter outside {I,X,Y,Z}");
    }
  }
  if (!std::isfinite(coefficient_) || coefficient_ == 0.0) {
    fail(ErrorCode::kValidationError,
         "coefficient of '" + word_ + "' must be finite and nonzero");
  }
}

PauliSum::PauliSum(std::vector<PauliTerm> terms) {
  if (terms.empty()) fail(ErrorCode::kEmptySum, "Pauli sum has no terms");
  qubits_ = terms.front().qubits();
  std::vector<std::pair<std::string, double>> merged;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& t : terms) {
    if (t.qubits() != qubits_) {
      fail(ErrorCode::kDimensionMismatch,
           "Pauli word '" + t.word() + "' has length " +
               std::to_string(t.qubits()) + ", expected " +
               std::to_string(qubits_));
    }
    auto [it, inserted] = index.emplace(t.word(), merged.size());
    if (inserted) {
      merged.emplace_back(t.word(), t.coefficient());
    } else {
      merged[it->second].second += t.coefficient();
    }
  }
  for (auto& [word, coefficient] : merged) {
    if (coefficient != 0.0) terms_.emplace_back(coefficient, std::move(word));
  }
  if (terms_.empty()) fail(ErrorCode::kEmptySum, "all Pauli terms cancel");
}

double PauliSum::scale() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient());
  return s;
}

PauliSum PauliSum::parse(std::istream& in, std::string_view source) {
  std::vector<PauliTerm> terms;
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] {
    return std::string(source) + ":" + std::to_string(line_no) + ": ";
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string coeff_text, word, extra;
    if (!(fields >> coeff_text)) continue;
    if (!(fields >> word)) {
      fail(ErrorCode::kParseError, where() + "expected '<coefficient> <word>'");
    }
    if (fields >> extra) {
      fail(ErrorCode::kParseError, where() + "unexpected token '" + extra + "'");
    }
    double coefficient = 0.0;
    try {
      std::size_t used = 0;
      coefficient = std::stod(coeff_text, &used);
      if (used != coeff_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(ErrorCode::kParseError,
           where() + "bad coefficient '" + coeff_text + "'");
    }
    try {
      terms.emplace_back(coefficient, word);
    } catch (const Error& e) {
      fail(ErrorCode::kParseError, where() + e.what());
    }
  }
  if (terms.empty()) {
    fail(ErrorCode::kParseError, std::string(source) + ": no Pauli terms");
  }
  try {
    return PauliSum(std::move(terms));
  } catch (const Error& e) {
    fail(ErrorCode::kParseError, std::string(source) + ": " + e.what());
  }
}

PauliSum PauliSum::parse(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse(in, source);
}

PauliSum PauliSum::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, path.string() + ": cannot open file");
  return parse(in, path.string());
}

ComplexMatrix pauli_term_matrix(const PauliTerm& term) {
  const std::size_t n = term.qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::size_t flip = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const char c = term.word()[q];
    if (c == 'X' || c == 'Y') flip |= std::size_t{1} << (n - 1 - q);
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  const Complex i1(0.0, 1.0);
  for (std::size_t col = 0; col < dim; ++col) {
    Complex amp = term.coefficient();
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (col >> (n - 1 - q)) & 1U;
      switch (term.word()[q]) {
        case 'Y': amp *= bit ? -i1 : i1; break;
        case 'Z': if (bit) amp = -amp; break;
        default: break;
      }
    }
    m(col ^ flip, col) = amp;
  }
  return m;
}

ComplexMatrix pauli_sum_matrix(const PauliSum& sum) {
  ComplexMatrix m = ComplexMatrix::Zero(sum.dimension(), sum.dimension());
  for (const auto& t : sum.terms()) m += pauli_term_matrix(t);
  return m;
}

}  // namespace blockest
