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

#include "eqnn/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace eqnn {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("invalid Pauli letter");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliProduct multiply(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  // XY = iZ and cyclic; reversed order picks up i^3.
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  const int ic = 6 - ia - ib;  // the remaining letter
  const bool cyclic = (ib - ia + 3) % 3 == 1;  // X->Y, Y->Z, Z->X
  return {static_cast<Pauli>(ic), cyclic ? 1 : 3};
}

PauliString PauliString::identity(int n) {
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I));
}

PauliString PauliString::single(int n, int target, Pauli p) {
  if (target < 0 || target >= n) throw std::out_of_range("Pauli target out of range");
  PauliString s = identity(n);
  s[target] = p;
  return s;
}

PauliString PauliString::from_label(const std::string& label) {
  std::vector<Pauli> letters;
  letters.reserve(label.size());
  for (char c : label) letters.push_back(pauli_from_char(c));
  return PauliString(std::move(letters));
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::vector<int> PauliString::support() const {
  std::vector<int> qubits;
  for (int q = 0; q < num_qubits(); ++q)
    if ((*this)[q] != Pauli::I) qubits.push_back(q);
  return qubits;
}

std::size_t PauliString::basis_index() const {
  std::size_t index = 0;
  for (int q = num_qubits() - 1; q >= 0; --q)
    index = index * 4 + static_cast<std::size_t>((*this)[q]);
  return index;
}

PauliString PauliString::from_basis_index(int n, std::size_t index) {
  std::vector<Pauli> letters(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    letters[static_cast<std::size_t>(q)] = static_cast<Pauli>(index & 3);
    index >>= 2;
  }
  return PauliString(std::move(letters));
}

std::string PauliString::label() const {
  std::string out;
  out.reserve(letters_.size());
  for (Pauli p : letters_) out.push_back(to_char(p));
  return out;
}

PauliStringProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("Pauli string length mismatch");
  std::vector<Pauli> letters(static_cast<std::size_t>(a.num_qubits()));
  int phase = 0;
  for (int q = 0; q < a.num_qubits(); ++q) {
    PauliProduct p = multiply(a[q], b[q]);
    letters[static_cast<std::size_t>(q)] = p.letter;
    phase = (phase + p.phase_exp) % 4;
  }
  return {PauliString(std::move(letters)), phase};
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("Pauli string length mismatch");
  int anti = 0;
  for (int q = 0; q < a.num_qubits(); ++q) {
    Pauli pa = a[q], pb = b[q];
    if (pa != Pauli::I && pb != Pauli::I && pa != pb) ++anti;
  }
  return anti % 2 == 0;
}

Observable::Observable(int n, std::vector<PauliTerm> terms)
    : num_qubits_(n), terms_(std::move(terms)) {
  for (const PauliTerm& t : terms_) {
    if (t.string.num_qubits() != n)
      throw std::invalid_argument("observable term length mismatch");
    weight_abs_sum_ += std::abs(t.weight);
  }
}

Observable Observable::single(PauliString s) {
  const int n = s.num_qubits();
  return Observable(n, {{1.0, std::move(s)}});
}

Observable Observable::squared() const {
  std::map<std::size_t, std::pair<PauliString, double>> accum;
  for (const PauliTerm& a : terms_) {
    for (const PauliTerm& b : terms_) {
      if (!commutes(a.string, b.string))
        throw std::invalid_argument("observable square requires commuting terms");
      PauliStringProduct p = multiply(a.string, b.string);
      // Commuting Hermitian strings multiply to a Hermitian result: phase +/-1.
      const double sign = (p.phase_exp == 0) ? 1.0 : (p.phase_exp == 2 ? -1.0 : 0.0);
      if (sign == 0.0) throw std::logic_error("imaginary phase in commuting product");
      auto [it, inserted] = accum.try_emplace(p.string.basis_index(),
                                              std::make_pair(p.string, 0.0));
      it->second.second += sign * a.weight * b.weight;
      (void)inserted;
    }
  }
  std::vector<PauliTerm> out;
  out.reserve(accum.size());
  for (auto& [index, entry] : accum) {
    (void)index;
    if (entry.second != 0.0) out.push_back({entry.second, entry.first});
  }
  return Observable(num_qubits_, std::move(out));
}

std::string Observable::label() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += "+";
    out += std::to_string(terms_[i].weight) + "*" + terms_[i].string.label();
  }
  return out;
}

}  // namespace eqnn
