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

#ifndef QASSERT_CHANNEL_REPS_HPP_
#define QASSERT_CHANNEL_REPS_HPP_

#include "qassert/circuit.hpp"
#include "qassert/kraus.hpp"
#include "qassert/noise.hpp"
#include "qassert/pauli.hpp"

namespace qassert {

// Channel action in the Pauli basis, normalized so entries lie in [-1, 1]:
// R_jk = (1/2^n) tr(P^j Phi(P^k)). Trace-preserving channels have first row
// (1, 0, ..., 0).
struct PauliTransferMatrix {
  int n_qubits = 0;
  RMatrix data;  // 4^n x 4^n

  static PauliTransferMatrix identity(int n_qubits);
};

// Channel-state dual: C = (id (x) Phi)(|Omega><Omega|) with the maximally
// entangled |Omega> = (1/sqrt(d)) sum_i |i>|i>; unit trace for TP channels,
// so a valid density matrix. The identity channel maps to |Omega><Omega|.
struct ChoiMatrix {
  int n_qubits = 0;
  CMatrix data;  // d^2 x d^2, d = 2^n

  // Validates hermiticity / trace / PSD at the given tolerance, throwing
  // NotPsd on violation.
  void validate(double psd_tol = 1e-9) const;

  // Frobenius projection onto unit-trace PSD matrices (eigenvalue truncation
  // with redistribution).
  ChoiMatrix projected() const;
};

ChoiMatrix ptm_to_choi(const PauliTransferMatrix& ptm);
PauliTransferMatrix choi_to_ptm(const ChoiMatrix& choi);

// Eigendecomposition of the Choi state; eigenvalues below 1e-10 are dropped.
// Inputs failing PSD beyond `psd_tol` signal an unphysical reconstruction and
// raise NotPsd; smaller violations are projected away first.
KrausChannel choi_to_kraus(const ChoiMatrix& choi, double psd_tol = 1e-6);
ChoiMatrix kraus_to_choi(const KrausChannel& kraus);

// Exact representations of a simulated circuit-plus-noise channel.
ChoiMatrix choi_of_circuit(const Circuit& circuit,
                           const NoiseModel& noise = NoiseModel::noiseless());
PauliTransferMatrix ptm_of_circuit(const Circuit& circuit,
                                   const NoiseModel& noise = NoiseModel::noiseless());

// Applies a PTM to a state by expanding it in the Pauli basis.
CMatrix apply_ptm(const PauliTransferMatrix& ptm, const CMatrix& rho);

// SGS eigenvalue truncation-and-redistribution: nearest (Frobenius)
// unit-trace PSD matrix to a Hermitian unit-trace input.
CMatrix psd_project_unit_trace(const CMatrix& hermitian);

}  // namespace qassert

#endif  // QASSERT_CHANNEL_REPS_HPP_
