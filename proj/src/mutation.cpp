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

#include "qassert/mutation.hpp"

#include <algorithm>
#include <string>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

void check_position(const Circuit& c, std::size_t pos, bool allow_end) {
  const std::size_t limit = c.size() + (allow_end ? 1 : 0);
  if (pos >= limit) {
    throw Error(ErrorCode::InvalidPosition,
                "gate position " + std::to_string(pos) +
                    " in a circuit of " + std::to_string(c.size()) +
                    " gate(s)");
  }
}

Circuit rebuild(const Circuit& original, const std::vector<Gate>& gates) {
  Circuit out(original.n_qubits(), original.name());
  for (const Gate& g : gates) {
    try {
      out.append(g);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IndexOutOfRange ||
          e.code() == ErrorCode::IllFormedResult ||
          e.code() == ErrorCode::ArityMismatch) {
        throw Error(ErrorCode::IllFormedResult,
                    std::string("mutated circuit is ill-formed: ") + e.what());
      }
      throw;
    }
  }
  return out;
}

}  // namespace

Circuit apply_mutation(const Circuit& circuit, const Mutation& mutation) {
  std::vector<Gate> gates = circuit.gates();

  if (const auto* m = std::get_if<QubitIndexSwap>(&mutation)) {
    check_position(circuit, m->gate_pos, false);
    Gate& g = gates[m->gate_pos];
    bool found = false;
    for (auto* list : {&g.targets, &g.controls}) {
      auto it = std::find(list->begin(), list->end(), m->old_index);
      if (it != list->end()) {
        *it = m->new_index;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::IllFormedResult,
                  "gate at position " + std::to_string(m->gate_pos) +
                      " does not reference qubit " +
                      std::to_string(m->old_index));
    }
  } else if (const auto* m = std::get_if<GateSubstitution>(&mutation)) {
    check_position(circuit, m->gate_pos, false);
    Gate& g = gates[m->gate_pos];
    if (m->new_kind == GateKind::Unitary) {
      throw Error(ErrorCode::IllFormedResult,
                  "substitution to a matrix-defined gate is not supported");
    }
    if (gate_kind_arity(m->new_kind) !=
        static_cast<int>(g.targets.size() + g.controls.size())) {
      throw Error(ErrorCode::IllFormedResult,
                  std::string("cannot substitute ") +
                      gate_kind_name(g.kind) + " by " +
                      gate_kind_name(m->new_kind) + ": arity differs");
    }
    std::vector<int> qubits = g.qubits();
    g = Gate{m->new_kind, std::move(qubits), {}};
    if (gate_kind_takes_angle(m->new_kind)) {
      if (!m->angle) {
        throw Error(ErrorCode::IllFormedResult,
                    std::string(gate_kind_name(m->new_kind)) +
                        " substitution requires an angle");
      }
      g.angle = *m->angle;
    }
  } else if (const auto* m = std::get_if<GateInsertion>(&mutation)) {
    check_position(circuit, m->position, true);
    gates.insert(gates.begin() + static_cast<std::ptrdiff_t>(m->position),
                 m->gate);
  } else if (const auto* m = std::get_if<GateDeletion>(&mutation)) {
    check_position(circuit, m->gate_pos, false);
    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(m->gate_pos));
  }

  return rebuild(circuit, gates);
}

}  // namespace qassert
