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

#ifndef QASSERT_LINALG_HPP_
#define QASSERT_LINALG_HPP_

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qassert {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

CMatrix kron(const CMatrix& a, const CMatrix& b);

inline CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

inline CMatrix hermitize(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

inline double frobenius_norm(const CMatrix& m) { return m.norm(); }

// <A, B>_F = tr(A^dag B)
inline std::complex<double> frobenius_inner(const CMatrix& a,
                                            const CMatrix& b) {
  return (a.adjoint() * b).trace();
}

bool is_unitary(const CMatrix& u, double tol = 1e-10);

// |index><index| on 2^n_qubits dimensions
CMatrix basis_projector(int n_qubits, std::uint64_t index);
CVector basis_vector(int n_qubits, std::uint64_t index);

// Hermitian square root via eigendecomposition; negative eigenvalues within
// `clamp_tol` of zero are clamped, larger ones are an error upstream.
CMatrix hermitian_sqrt(const CMatrix& m, double clamp_tol = 1e-9);

// Partial trace keeping the qubits in `keep` (ascending order), qubit 0 being
// the most significant bit of basis indices.
CMatrix partial_trace(const CMatrix& rho, int n_qubits,
                      const std::vector<int>& keep);

// Embeds `op` (acting on the ordered qubit tuple `qubits`, each qubit index
// addressing the bit 2^(n-1-q) of basis states) into the full 2^n space.
CMatrix embed_operator(int n_qubits, const std::vector<int>& qubits,
                       const CMatrix& op);

double min_eigenvalue_hermitian(const CMatrix& m);

}  // namespace qassert

#endif  // QASSERT_LINALG_HPP_
