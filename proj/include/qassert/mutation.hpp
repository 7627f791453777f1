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

#ifndef QASSERT_MUTATION_HPP_
#define QASSERT_MUTATION_HPP_

#include <cstddef>
#include <optional>
#include <variant>

#include "qassert/circuit.hpp"

namespace qassert {

// Replaces one occurrence of old_index with new_index in the gate at
// gate_pos. Involutive: swapping back restores the original gate list.
struct QubitIndexSwap {
  std::size_t gate_pos;
  int old_index;
  int new_index;
};

// Replaces the gate kind at gate_pos, keeping its qubits. `angle` is required
// when the new kind takes one.
struct GateSubstitution {
  std::size_t gate_pos;
  GateKind new_kind;
  std::optional<double> angle;
};

// Inserts `gate` before the gate currently at `position` (== size appends).
struct GateInsertion {
  std::size_t position;
  Gate gate;
};

struct GateDeletion {
  std::size_t gate_pos;
};

using Mutation =
    std::variant<QubitIndexSwap, GateSubstitution, GateInsertion, GateDeletion>;

// Returns a mutated copy; the input circuit is unchanged. Throws
// InvalidPosition for out-of-range positions and IllFormedResult when the
// mutation cannot produce a well-formed circuit.
Circuit apply_mutation(const Circuit& circuit, const Mutation& mutation);

}  // namespace qassert

#endif  // QASSERT_MUTATION_HPP_
