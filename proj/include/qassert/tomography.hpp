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

#ifndef QASSERT_TOMOGRAPHY_HPP_
#define QASSERT_TOMOGRAPHY_HPP_

#include <functional>
#include <map>

#include "qassert/channel_reps.hpp"
#include "qassert/counts.hpp"
#include "qassert/density_matrix.hpp"
#include "qassert/pauli.hpp"

namespace qassert {

// Executors hand back outcome weights per computational-basis outcome after
// the setting's basis rotation. Counts adapt via Counts::weights(); exact
// (infinite-shot surrogate) executors return the outcome probabilities
// directly. Executors must tolerate concurrent invocation; the
// setting_index identifies the configuration for sub-seed derivation.
using WeightsExecutor =
    std::function<RVector(const PauliString& setting, std::size_t setting_index)>;
using CountsExecutor =
    std::function<Counts(const PauliString& setting, std::size_t setting_index)>;

WeightsExecutor adapt_counts_executor(CountsExecutor executor);

// Expectation table over all 4^n Pauli strings, identity fixed at 1.
struct PauliExpectations {
  int n_qubits = 0;
  RVector values;  // indexed by PauliString::index()

  double operator[](const PauliString& p) const {
    return values(static_cast<Eigen::Index>(p.index()));
  }
};

// Measures the 3^n full-weight settings once each; strings containing I are
// marginalized from their covering setting.
PauliExpectations estimate_pauli_expectations(const WeightsExecutor& executor,
                                              int n_qubits);

// Linear inversion rho = (1/2^n) sum_k <P^k> P^k followed by the PSD
// projection.
DensityMatrix state_tomography(const WeightsExecutor& executor, int n_qubits);

// Per-qubit preparations for process tomography: |0>, |1>, |+>, |+i>
// (indices 0-3); 4^n preparations indexed in base 4, qubit 0 most
// significant.
CMatrix preparation_state_1q(int which);
CMatrix preparation_unitary(int n_qubits, std::uint64_t prep_index);

// tr(P^k rho_prep) for every (string, preparation) pair; invertible because
// the preparation set is informationally complete.
RMatrix preparation_expansion_matrix(int n_qubits);

using ProcessExecutor = std::function<RVector(
    std::uint64_t prep_index, const PauliString& setting,
    std::size_t config_index)>;
using ProcessCountsExecutor = std::function<Counts(
    std::uint64_t prep_index, const PauliString& setting,
    std::size_t config_index)>;

ProcessExecutor adapt_process_counts_executor(ProcessCountsExecutor executor);

// Pauli transfer matrix from 4^n preparations x 3^n measurement settings,
// assembled by inverting the known preparation expansion.
PauliTransferMatrix process_tomography(const ProcessExecutor& executor,
                                       int n_qubits, int n_qubit_cap = 4);

}  // namespace qassert

#endif  // QASSERT_TOMOGRAPHY_HPP_
