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

#include "qassert/pauli.hpp"

#include <cmath>
#include <complex>

#include "qassert/errors.hpp"

namespace qassert {

namespace {
using namespace std::complex_literals;
}

char pauli_letter_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

CMatrix pauli_letter_matrix(PauliLetter l) {
  CMatrix m(2, 2);
  switch (l) {
    case PauliLetter::I:
      m << 1, 0, 0, 1;
      break;
    case PauliLetter::X:
      m << 0, 1, 1, 0;
      break;
    case PauliLetter::Y:
      m << 0.0, -1i, 1i, 0.0;
      break;
    case PauliLetter::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

PauliString::PauliString(std::vector<PauliLetter> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty Pauli string");
  }
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(std::vector<PauliLetter>(
      static_cast<std::size_t>(n_qubits), PauliLetter::I));
}

PauliString PauliString::parse(const std::string& text) {
  std::vector<PauliLetter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I':
      case 'i':
        letters.push_back(PauliLetter::I);
        break;
      case 'X':
      case 'x':
        letters.push_back(PauliLetter::X);
        break;
      case 'Y':
      case 'y':
        letters.push_back(PauliLetter::Y);
        break;
      case 'Z':
      case 'z':
        letters.push_back(PauliLetter::Z);
        break;
      default:
        throw Error(ErrorCode::InvalidArgument,
                    std::string("bad Pauli letter '") + c + "'");
    }
  }
  return PauliString(std::move(letters));
}

PauliString PauliString::from_index(int n_qubits, std::uint64_t index) {
  std::vector<PauliLetter> letters(static_cast<std::size_t>(n_qubits));
  for (int q = n_qubits - 1; q >= 0; --q) {
    letters[static_cast<std::size_t>(q)] =
        static_cast<PauliLetter>(index & 3u);
    index >>= 2;
  }
  if (index != 0) {
    throw Error(ErrorCode::IndexOutOfRange, "Pauli index out of range");
  }
  return PauliString(std::move(letters));
}

std::uint64_t PauliString::index() const {
  std::uint64_t idx = 0;
  for (PauliLetter l : letters_) {
    idx = (idx << 2) | static_cast<std::uint64_t>(l);
  }
  return idx;
}

bool PauliString::is_identity() const {
  for (PauliLetter l : letters_) {
    if (l != PauliLetter::I) return false;
  }
  return true;
}

int PauliString::weight() const {
  int w = 0;
  for (PauliLetter l : letters_) {
    if (l != PauliLetter::I) ++w;
  }
  return w;
}

CMatrix PauliString::matrix() const {
  CMatrix m = pauli_letter_matrix(letters_[0]);
  for (std::size_t q = 1; q < letters_.size(); ++q) {
    m = kron(m, pauli_letter_matrix(letters_[q]));
  }
  return m;
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (PauliLetter l : letters_) s += pauli_letter_char(l);
  return s;
}

int PauliString::outcome_parity(std::uint64_t outcome) const {
  const int n = size();
  int parity = 1;
  for (int q = 0; q < n; ++q) {
    if (letters_[static_cast<std::size_t>(q)] == PauliLetter::I) continue;
    if ((outcome >> (n - 1 - q)) & 1u) parity = -parity;
  }
  return parity;
}

bool PauliString::compatible_with_setting(const PauliString& setting) const {
  if (setting.size() != size()) return false;
  for (int q = 0; q < size(); ++q) {
    const PauliLetter mine = letters_[static_cast<std::size_t>(q)];
    if (mine != PauliLetter::I && mine != setting[q]) return false;
  }
  return true;
}

std::vector<PauliString> enumerate_measurement_settings(int n_qubits) {
  std::vector<PauliString> settings;
  std::uint64_t count = 1;
  for (int q = 0; q < n_qubits; ++q) count *= 3;
  settings.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::vector<PauliLetter> letters(static_cast<std::size_t>(n_qubits));
    std::uint64_t rem = s;
    for (int q = n_qubits - 1; q >= 0; --q) {
      letters[static_cast<std::size_t>(q)] =
          static_cast<PauliLetter>(1 + (rem % 3));
      rem /= 3;
    }
    settings.emplace_back(std::move(letters));
  }
  return settings;
}

PauliString covering_setting(const PauliString& target) {
  std::vector<PauliLetter> letters = target.letters();
  for (auto& l : letters) {
    if (l == PauliLetter::I) l = PauliLetter::X;
  }
  return PauliString(std::move(letters));
}

CMatrix measurement_rotation_1q(PauliLetter l) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2);
  h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
  switch (l) {
    case PauliLetter::X:
      return h;
    case PauliLetter::Y: {
      CMatrix sdg(2, 2);
      sdg << 1.0, 0.0, 0.0, -1i;
      return h * sdg;
    }
    default:
      return CMatrix::Identity(2, 2);
  }
}

CMatrix measurement_rotation(const PauliString& setting) {
  CMatrix u = measurement_rotation_1q(setting[0]);
  for (int q = 1; q < setting.size(); ++q) {
    u = kron(u, measurement_rotation_1q(setting[q]));
  }
  return u;
}

}  // namespace qassert
