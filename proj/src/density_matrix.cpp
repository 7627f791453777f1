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

#include "qassert/density_matrix.hpp"

#include <cmath>
#include <string>

#include "qassert/errors.hpp"

namespace qassert {

DensityMatrix DensityMatrix::from_matrix(int n_qubits, CMatrix data) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (data.rows() != dim || data.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " matrix");
  }
  if ((data - data.adjoint()).norm() >= 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "state is not Hermitian");
  }
  if (std::abs(data.trace().real() - 1.0) >= 1e-10 ||
      std::abs(data.trace().imag()) >= 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "state trace is not 1");
  }
  const double min_eig = min_eigenvalue_hermitian(data);
  if (min_eig < -1e-9) {
    throw Error(ErrorCode::NotPsd, "state has eigenvalue " +
                                       std::to_string(min_eig));
  }
  return DensityMatrix(n_qubits, std::move(data));
}

DensityMatrix DensityMatrix::pure(const CVector& statevector) {
  const Eigen::Index dim = statevector.size();
  int n = 0;
  while ((Eigen::Index(1) << n) < dim) ++n;
  if ((Eigen::Index(1) << n) != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "statevector length is not a power of two");
  }
  const double norm = statevector.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "statevector is not normalized");
  }
  return DensityMatrix(n, statevector * statevector.adjoint());
}

DensityMatrix DensityMatrix::computational_basis(int n_qubits,
                                                 std::uint64_t index) {
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  if (index >= dim) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
  }
  return DensityMatrix(n_qubits, basis_projector(n_qubits, index));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  return DensityMatrix(n_qubits,
                       CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::reduced(const std::vector<int>& keep_qubits) const {
  CMatrix sub = partial_trace(data_, n_qubits_, keep_qubits);
  return DensityMatrix(static_cast<int>(keep_qubits.size()), std::move(sub));
}

}  // namespace qassert
