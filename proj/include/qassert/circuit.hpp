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

#ifndef QASSERT_CIRCUIT_HPP_
#define QASSERT_CIRCUIT_HPP_

#include <string>
#include <vector>

#include "qassert/linalg.hpp"

namespace qassert {

enum class GateKind { H, X, Y, Z, S, Sdg, T, CX, CP, Swap, Unitary, Reset };

const char* gate_kind_name(GateKind kind);

// Number of target qubits a fixed-kind gate acts on (Unitary is payload
// dependent and returns 0 here).
int gate_kind_arity(GateKind kind);

bool gate_kind_takes_angle(GateKind kind);

// One instruction. `targets` are the qubits the gate matrix acts on, in
// order; `controls` (only for Unitary payloads) condition the application on
// all control qubits being |1>. Qubit 0 is the leftmost ket label and the
// most significant bit of computational-basis indices.
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  std::vector<int> controls;
  double angle = 0.0;    // CP only
  CMatrix matrix;        // Unitary only, 2^k x 2^k
  std::string label;     // Unitary only

  static Gate h(int q) { return {GateKind::H, {q}, {}}; }
  static Gate x(int q) { return {GateKind::X, {q}, {}}; }
  static Gate y(int q) { return {GateKind::Y, {q}, {}}; }
  static Gate z(int q) { return {GateKind::Z, {q}, {}}; }
  static Gate s(int q) { return {GateKind::S, {q}, {}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q}, {}}; }
  static Gate t(int q) { return {GateKind::T, {q}, {}}; }
  static Gate cx(int control, int target) {
    return {GateKind::CX, {control, target}, {}};
  }
  static Gate cp(double angle, int control, int target) {
    Gate g{GateKind::CP, {control, target}, {}};
    g.angle = angle;
    return g;
  }
  static Gate swap(int a, int b) { return {GateKind::Swap, {a, b}, {}}; }
  static Gate reset(int q) { return {GateKind::Reset, {q}, {}}; }
  // Matrix-defined gate; throws unless `matrix` is unitary within 1e-10.
  static Gate unitary(CMatrix matrix, std::string label,
                      std::vector<int> targets, std::vector<int> controls = {});

  // All qubits the gate touches, in the axis order of local_matrix()
  // (controls first, then targets).
  std::vector<int> qubits() const;

  // The gate's local matrix including controls, acting on
  // (controls..., targets...) with the first qubit most significant.
  CMatrix local_matrix() const;

  // Adjoint gate (Reset has none and throws).
  Gate adjoint() const;

  bool operator==(const Gate& other) const;
};

// Immutable after construction; `append` validates qubit bounds,
// target/control disjointness and Unitary payload unitarity.
class Circuit {
 public:
  Circuit(int n_qubits, std::string name = "");

  void append(Gate gate);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  bool has_reset() const;

  bool operator==(const Circuit& other) const;

 private:
  int n_qubits_;
  std::string name_;
  std::vector<Gate> gates_;
};

}  // namespace qassert

#endif  // QASSERT_CIRCUIT_HPP_
