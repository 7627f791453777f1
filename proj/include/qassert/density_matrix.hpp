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

#ifndef QASSERT_DENSITY_MATRIX_HPP_
#define QASSERT_DENSITY_MATRIX_HPP_

#include <cstdint>

#include "qassert/linalg.hpp"

namespace qassert {

// 2^n x 2^n state matrix. Construction validates hermiticity (1e-10,
// Frobenius), unit trace (1e-10) and positivity (min eigenvalue >= -1e-9).
// Immutable afterwards.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(int n_qubits, CMatrix data);
  static DensityMatrix pure(const CVector& statevector);
  static DensityMatrix computational_basis(int n_qubits, std::uint64_t index);
  static DensityMatrix zero_state(int n_qubits) {
    return computational_basis(n_qubits, 0);
  }
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return data_.rows(); }
  const CMatrix& data() const noexcept { return data_; }

  double purity() const { return (data_ * data_).trace().real(); }

  DensityMatrix reduced(const std::vector<int>& keep_qubits) const;

 private:
  DensityMatrix(int n_qubits, CMatrix data)
      : n_qubits_(n_qubits), data_(std::move(data)) {}

  int n_qubits_;
  CMatrix data_;
};

}  // namespace qassert

#endif  // QASSERT_DENSITY_MATRIX_HPP_
