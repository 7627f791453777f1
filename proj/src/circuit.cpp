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

#include "qassert/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

using namespace std::complex_literals;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

CMatrix mat2(std::complex<double> a, std::complex<double> b,
             std::complex<double> c, std::complex<double> d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix fixed_kind_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      return mat2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
    case GateKind::X:
      return mat2(0, 1, 1, 0);
    case GateKind::Y:
      return mat2(0, -1i, 1i, 0);
    case GateKind::Z:
      return mat2(1, 0, 0, -1);
    case GateKind::S:
      return mat2(1, 0, 0, 1i);
    case GateKind::Sdg:
      return mat2(1, 0, 0, -1i);
    case GateKind::T:
      return mat2(1, 0, 0, std::exp(1i * (M_PI / 4.0)));
    case GateKind::CX: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    }
    case GateKind::CP: {
      CMatrix m = CMatrix::Identity(4, 4);
      m(3, 3) = std::exp(1i * g.angle);
      return m;
    }
    case GateKind::Swap: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      return m;
    }
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "gate kind has no fixed matrix form");
  }
}

}  // namespace

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::Y:
      return "y";
    case GateKind::Z:
      return "z";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::T:
      return "t";
    case GateKind::CX:
      return "cx";
    case GateKind::CP:
      return "cp";
    case GateKind::Swap:
      return "swap";
    case GateKind::Unitary:
      return "unitary";
    case GateKind::Reset:
      return "reset";
  }
  return "?";
}

int gate_kind_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CP:
    case GateKind::Swap:
      return 2;
    case GateKind::Unitary:
      return 0;
    default:
      return 1;
  }
}

bool gate_kind_takes_angle(GateKind kind) { return kind == GateKind::CP; }

Gate Gate::unitary(CMatrix matrix, std::string label, std::vector<int> targets,
                   std::vector<int> controls) {
  const Eigen::Index dim = Eigen::Index(1) << targets.size();
  if (matrix.rows() != dim || matrix.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "unitary payload dimension does not match target count");
  }
  if (!is_unitary(matrix, 1e-10)) {
    throw Error(ErrorCode::InvalidArgument,
                "matrix payload is not unitary within 1e-10");
  }
  Gate g{GateKind::Unitary, std::move(targets), std::move(controls)};
  g.matrix = std::move(matrix);
  g.label = std::move(label);
  return g;
}

std::vector<int> Gate::qubits() const {
  std::vector<int> qs = controls;
  qs.insert(qs.end(), targets.begin(), targets.end());
  return qs;
}

CMatrix Gate::local_matrix() const {
  if (kind == GateKind::Reset) {
    throw Error(ErrorCode::InvalidArgument, "reset has no unitary matrix");
  }
  CMatrix base = (kind == GateKind::Unitary) ? matrix : fixed_kind_matrix(*this);
  if (controls.empty()) return base;
  // controls first (most significant): identity except on the all-ones
  // control block
  const Eigen::Index cdim = Eigen::Index(1) << controls.size();
  const Eigen::Index tdim = base.rows();
  CMatrix full = CMatrix::Identity(cdim * tdim, cdim * tdim);
  full.block((cdim - 1) * tdim, (cdim - 1) * tdim, tdim, tdim) = base;
  return full;
}

Gate Gate::adjoint() const {
  if (kind == GateKind::Reset) {
    throw Error(ErrorCode::InvalidArgument, "reset channel has no adjoint gate");
  }
  Gate g = *this;
  switch (kind) {
    case GateKind::S:
      g.kind = GateKind::Sdg;
      break;
    case GateKind::Sdg:
      g.kind = GateKind::S;
      break;
    case GateKind::T:
      g.kind = GateKind::Unitary;
      g.matrix = fixed_kind_matrix(*this).adjoint();
      g.label = "tdg";
      break;
    case GateKind::CP:
      g.angle = -angle;
      break;
    case GateKind::Unitary:
      g.matrix = matrix.adjoint();
      g.label = label + "_dg";
      break;
    default:
      break;  // self-adjoint kinds
  }
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || targets != other.targets ||
      controls != other.controls)
    return false;
  if (kind == GateKind::CP && angle != other.angle) return false;
  if (kind == GateKind::Unitary) {
    if (matrix.rows() != other.matrix.rows()) return false;
    if ((matrix - other.matrix).norm() > 1e-12) return false;
  }
  return true;
}

Circuit::Circuit(int n_qubits, std::string name)
    : n_qubits_(n_qubits), name_(std::move(name)) {
  if (n_qubits < 1) {
    throw Error(ErrorCode::InvalidArgument, "circuit needs at least 1 qubit");
  }
}

void Circuit::append(Gate gate) {
  const int arity = gate_kind_arity(gate.kind);
  if (arity != 0 && static_cast<int>(gate.targets.size()) != arity) {
    throw Error(ErrorCode::ArityMismatch,
                std::string(gate_kind_name(gate.kind)) + " expects " +
                    std::to_string(arity) + " target(s)");
  }
  std::set<int> seen;
  for (int q : gate.qubits()) {
    if (q < 0 || q >= n_qubits_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "qubit " + std::to_string(q) + " outside register of size " +
                      std::to_string(n_qubits_));
    }
    if (!seen.insert(q).second) {
      throw Error(ErrorCode::IllFormedResult,
                  "gate references qubit " + std::to_string(q) + " twice");
    }
  }
  if (gate.kind == GateKind::Unitary) {
    const Eigen::Index dim = Eigen::Index(1) << gate.targets.size();
    if (gate.matrix.rows() != dim || gate.matrix.cols() != dim ||
        !is_unitary(gate.matrix, 1e-10)) {
      throw Error(ErrorCode::InvalidArgument,
                  "matrix payload is not unitary within 1e-10");
    }
  } else if (!gate.controls.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "controls are only supported on unitary payloads");
  }
  gates_.push_back(std::move(gate));
}

bool Circuit::has_reset() const {
  return std::any_of(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.kind == GateKind::Reset;
  });
}

bool Circuit::operator==(const Circuit& other) const {
  return n_qubits_ == other.n_qubits_ && gates_ == other.gates_;
}

}  // namespace qassert
