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

#include "qassert/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "qassert/errors.hpp"

namespace qassert {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).norm() < tol;
}

CMatrix basis_projector(int n_qubits, std::uint64_t index) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  CMatrix m = CMatrix::Zero(dim, dim);
  m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return m;
}

CVector basis_vector(int n_qubits, std::uint64_t index) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  CVector v = CVector::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

CMatrix hermitian_sqrt(const CMatrix& m, double clamp_tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(m));
  RVector vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < 0.0) {
      if (vals(i) < -clamp_tol) {
        throw Error(ErrorCode::NotPsd,
                    "matrix square root of non-PSD input, min eigenvalue " +
                        std::to_string(vals(i)));
      }
      vals(i) = 0.0;
    }
  }
  return es.eigenvectors() * vals.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

CMatrix partial_trace(const CMatrix& rho, int n_qubits,
                      const std::vector<int>& keep) {
  const int n_keep = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end())
      traced.push_back(q);
  }
  const std::uint64_t dim_keep = std::uint64_t(1) << n_keep;
  const std::uint64_t dim_tr = std::uint64_t(1) << traced.size();
  // bit position of qubit q within a full basis index
  auto bit_of = [n_qubits](int q) { return n_qubits - 1 - q; };

  CMatrix out = CMatrix::Zero(dim_keep, dim_keep);
  for (std::uint64_t r = 0; r < dim_keep; ++r) {
    for (std::uint64_t c = 0; c < dim_keep; ++c) {
      std::uint64_t base_r = 0, base_c = 0;
      for (int i = 0; i < n_keep; ++i) {
        const std::uint64_t bit = n_keep - 1 - i;
        base_r |= ((r >> bit) & 1u) << bit_of(keep[i]);
        base_c |= ((c >> bit) & 1u) << bit_of(keep[i]);
      }
      std::complex<double> sum = 0.0;
      for (std::uint64_t t = 0; t < dim_tr; ++t) {
        std::uint64_t extra = 0;
        for (std::size_t i = 0; i < traced.size(); ++i) {
          const std::uint64_t bit = traced.size() - 1 - i;
          extra |= ((t >> bit) & 1u) << bit_of(traced[i]);
        }
        sum += rho(static_cast<Eigen::Index>(base_r | extra),
                   static_cast<Eigen::Index>(base_c | extra));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
    }
  }
  return out;
}

CMatrix embed_operator(int n_qubits, const std::vector<int>& qubits,
                       const CMatrix& op) {
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index sub = Eigen::Index(1) << k;
  if (op.rows() != sub || op.cols() != sub) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator dimension does not match qubit tuple size");
  }
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "qubit " + std::to_string(q) + " outside register of size " +
                      std::to_string(n_qubits));
    }
  }
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  auto bit_of = [n_qubits](int q) { return n_qubits - 1 - q; };

  CMatrix full = CMatrix::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    // sub-index of `col` on the gate's qubits, first listed qubit most
    // significant
    std::uint64_t j = 0;
    for (int i = 0; i < k; ++i) {
      j = (j << 1) | ((col >> bit_of(qubits[i])) & 1u);
    }
    std::uint64_t cleared = col;
    for (int i = 0; i < k; ++i) cleared &= ~(std::uint64_t(1) << bit_of(qubits[i]));
    for (Eigen::Index i = 0; i < sub; ++i) {
      std::uint64_t row = cleared;
      for (int b = 0; b < k; ++b) {
        row |= ((static_cast<std::uint64_t>(i) >> (k - 1 - b)) & 1u)
               << bit_of(qubits[b]);
      }
      const auto v = op(i, static_cast<Eigen::Index>(j));
      if (v != std::complex<double>(0.0, 0.0)) {
        full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
            v;
      }
    }
  }
  return full;
}

double min_eigenvalue_hermitian(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(m),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace qassert
