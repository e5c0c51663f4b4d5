// Copyright 2026 The eqnn-noise-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqnn {

/// Single-qubit Pauli letter. The numeric values double as base-4 digits of
/// the Pauli-basis index (I=0, X=1, Y=2, Z=3).
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Product of two Pauli letters, a*b = i^phase_exp * letter with
/// phase_exp in {0,1,2,3} counting powers of i.
struct PauliProduct {
  Pauli letter;
  int phase_exp;
};
PauliProduct multiply(Pauli a, Pauli b);

/// An n-qubit Pauli string. letters[q] is the letter on qubit q; qubit 0 is
/// the least-significant base-4 digit of the basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

  /// Identity string on n qubits.
  static PauliString identity(int n);
  /// Single non-identity letter p on qubit `target` of an n-qubit string.
  static PauliString single(int n, int target, Pauli p);
  /// Parse "XZI..." with index 0 = qubit 0.
  static PauliString from_label(const std::string& label);

  int num_qubits() const { return static_cast<int>(letters_.size()); }
  Pauli operator[](int q) const { return letters_[static_cast<std::size_t>(q)]; }
  Pauli& operator[](int q) { return letters_[static_cast<std::size_t>(q)]; }

  bool is_identity() const;
  /// Qubits carrying a non-identity letter, ascending.
  std::vector<int> support() const;
  int weight() const { return static_cast<int>(support().size()); }

  /// Base-4 little-endian index into the 4^n coefficient vector.
  std::size_t basis_index() const;
  static PauliString from_basis_index(int n, std::size_t index);

  /// Label with qubit 0 first, e.g. "XY" = X on qubit 0, Y on qubit 1.
  std::string label() const;

  bool operator==(const PauliString& other) const { return letters_ == other.letters_; }

 private:
  std::vector<Pauli> letters_;
};

/// Full product a*b = i^phase_exp * string.
struct PauliStringProduct {
  PauliString string;
  int phase_exp;
};
PauliStringProduct multiply(const PauliString& a, const PauliString& b);

/// True iff the strings commute (even number of anticommuting positions).
bool commutes(const PauliString& a, const PauliString& b);

/// Real-weighted sum of Pauli strings, used for observables and twirls.
struct PauliTerm {
  double weight;
  PauliString string;
};

class Observable {
 public:
  Observable() = default;
  Observable(int n, std::vector<PauliTerm> terms);

  /// Single Pauli string with unit weight.
  static Observable single(PauliString s);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /// Spectrum bounds used for mapping predictions onto [0,1]. For sums of
  /// commuting strings (all observables in this project) the bounds
  /// +/- sum_k |w_k| are attained.
  double lambda_min() const { return -weight_abs_sum_; }
  double lambda_max() const { return weight_abs_sum_; }

  /// O^2 expanded back into Pauli terms. Requires pairwise commuting terms so
  /// that all product phases are real.
  Observable squared() const;

  std::string label() const;

 private:
  int num_qubits_ = 0;
  std::vector<PauliTerm> terms_;
  double weight_abs_sum_ = 0.0;
};

}  // namespace eqnn
