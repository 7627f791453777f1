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

#ifndef QASSERT_SIMULATOR_HPP_
#define QASSERT_SIMULATOR_HPP_

#include <cstdint>

#include "qassert/circuit.hpp"
#include "qassert/counts.hpp"
#include "qassert/density_matrix.hpp"
#include "qassert/kraus.hpp"
#include "qassert/noise.hpp"

namespace qassert {

// Qubit reset channel: rho -> tr(rho) |0...0><0...0|.
DensityMatrix reset_channel(const DensityMatrix& rho);

// Preparation channel: U_pre applied to the reset state.
DensityMatrix prepare_channel(const DensityMatrix& rho, const CMatrix& u_pre);

// Exact channel evolution, gates in order; noise applied after each gate to
// the qubits the gate touches.
DensityMatrix apply_circuit(const DensityMatrix& rho, const Circuit& circuit,
                            const NoiseModel& noise = NoiseModel::noiseless());

// Destructive measurement channel after basis change u_meas: a diagonal
// density matrix whose entries are the outcome probabilities.
DensityMatrix measure_channel(const DensityMatrix& rho, const CMatrix& u_meas);

// Probabilities from a diagonal state (throws NotDiagonal beyond 1e-10).
RVector diagonal_probabilities(const DensityMatrix& rho_diag);

// Multinomial draw with the Philox counter RNG; the same (seed, shots, rho)
// triple always yields identical counts.
Counts sample_counts(const DensityMatrix& rho_diag, std::uint64_t shots,
                     std::uint64_t seed);
Counts sample_counts(const RVector& probabilities, std::uint64_t shots,
                     std::uint64_t seed);

// Total unitary of a reset-free circuit.
CMatrix circuit_unitary(const Circuit& circuit);

// Exact Kraus set of a circuit-plus-noise channel, via its Choi matrix.
// Capped (default 6 qubits) because it builds a 4^n-dimensional object.
KrausChannel circuit_to_kraus(const Circuit& circuit,
                              const NoiseModel& noise = NoiseModel::noiseless(),
                              int n_qubit_cap = 6);

// Channel action on an arbitrary operator (not necessarily a state); used by
// channel-level constructions and oracles.
CMatrix apply_circuit_to_operator(const CMatrix& op, const Circuit& circuit,
                                  const NoiseModel& noise);

}  // namespace qassert

#endif  // QASSERT_SIMULATOR_HPP_
