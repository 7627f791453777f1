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

#ifndef QASSERT_GATE_LIBRARY_HPP_
#define QASSERT_GATE_LIBRARY_HPP_

#include <cstdint>

#include "qassert/circuit.hpp"

namespace qassert {

// Quantum Fourier transform on n qubits (H + controlled-phase ladder followed
// by the bit-reversal swaps), |x> -> (1/sqrt(2^n)) sum_y exp(2 pi i x y / 2^n)
// |y>, indices read with qubit 0 as the most significant bit.
Circuit build_qft(int n_qubits);

// Adjoint of build_qft. build_qft_inverse(1) is a single H.
Circuit build_qft_inverse(int n_qubits);

// Permutation matrix |x> -> |multiplier * x mod modulus> for x < modulus,
// identity on x >= modulus, over n = floor(log2(modulus-1)) + 1 qubits.
// Requires gcd(multiplier, modulus) = 1.
CMatrix modular_multiplication_matrix(std::int64_t multiplier,
                                      std::int64_t modulus);

// Controlled modular-multiplication gate with multiplier a^(2^theta) mod N,
// labeled M_b; `control` ahead of the target block `targets`.
Gate build_controlled_modmul(std::int64_t a, std::int64_t modulus,
                             std::int64_t theta, int control,
                             const std::vector<int>& targets);

// Register width needed for values below `modulus`.
int modulus_register_size(std::int64_t modulus);

}  // namespace qassert

#endif  // QASSERT_GATE_LIBRARY_HPP_
