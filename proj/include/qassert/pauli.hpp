// Copyright 2026 The qassert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QASSERT_PAULI_HPP_
#define QASSERT_PAULI_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qassert/linalg.hpp"

namespace qassert {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter_char(PauliLetter l);
CMatrix pauli_letter_matrix(PauliLetter l);

// Tensor product of single-qubit Paulis; the 4^n strings form an orthogonal
// operator basis with <P^j, P^k>_F = 2^n delta_jk. Strings are indexed in
// base 4 (I=0, X=1, Y=2, Z=3) with qubit 0 as the most significant digit.
class PauliString {
 public:
  explicit PauliString(std::vector<PauliLetter> letters);
  static PauliString identity(int n_qubits);
  static PauliString parse(const std::string& text);  // e.g. "XZI"
  static PauliString from_index(int n_qubits, std::uint64_t index);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  PauliLetter operator[](int q) const { return letters_[static_cast<std::size_t>(q)]; }
  const std::vector<PauliLetter>& letters() const noexcept { return letters_; }

  std::uint64_t index() const;
  bool is_identity() const;
  int weight() const;  // number of non-identity letters

  CMatrix matrix() const;
  std::string to_string() const;

  // Parity (+1/-1) of a computational-basis outcome under this string,
  // evaluated over the non-identity positions; outcome bit 2^(n-1-q) belongs
  // to qubit q.
  int outcome_parity(std::uint64_t outcome) const;

  // True when this string can be estimated from counts taken in `setting`
  // (every non-identity letter matches).
  bool compatible_with_setting(const PauliString& setting) const;

  bool operator==(const PauliString& other) const {
    return letters_ == other.letters_;
  }
  bool operator<(const PauliString& other) const {
    return letters_ < other.letters_;
  }

 private:
  std::vector<PauliLetter> letters_;
};

// All 3^n measurement settings (strings over {X, Y, Z}), in lexicographic
// order of (X < Y < Z) digits with qubit 0 most significant.
std::vector<PauliString> enumerate_measurement_settings(int n_qubits);

// The canonical setting that covers `target`: non-identity letters kept,
// identities filled with X.
PauliString covering_setting(const PauliString& target);

// Single-qubit basis-change unitary mapping the letter's eigenbasis onto the
// computational basis (X -> H, Y -> H S^dag, Z -> I).
CMatrix measurement_rotation_1q(PauliLetter l);

// Tensor-product rotation for a full setting, on `n` qubits; identity letters
// are measured in Z.
CMatrix measurement_rotation(const PauliString& setting);

}  // namespace qassert

#endif  // QASSERT_PAULI_HPP_
