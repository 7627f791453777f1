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

#ifndef QASSERT_SUBROUTINE_HPP_
#define QASSERT_SUBROUTINE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qassert/circuit.hpp"

namespace qassert {

// Classical subroutine parameter (rotation angle, modulus exponent, ...).
using Param = std::variant<std::int64_t, double>;
using ParamVector = std::vector<Param>;

double param_real(const Param& p);
std::int64_t param_int(const Param& p);

// Angle operand in a parsed gate statement: a literal or a reference to one
// of the subroutine's declared angle parameters.
struct AngleExpr {
  bool is_param = false;
  double value = 0.0;
  int param_index = 0;
};

struct TemplateGate {
  GateKind kind;
  std::vector<int> qubits;
  AngleExpr angle;
};

// A parametrized circuit family: builder maps a parameter vector to a
// concrete Circuit. Builders must be pure, so equal parameter vectors always
// produce structurally identical circuits.
struct SubroutineSpec {
  std::string name;
  int n_qubits = 0;
  int param_arity = 0;
  std::function<Circuit(const ParamVector&)> builder;

  // Populated by the parser; empty for programmatically built specs.
  bool has_template = false;
  std::string register_name;
  std::vector<std::string> param_names;
  std::vector<TemplateGate> body;
};

// Binds parameters, producing a concrete circuit. Throws ArityMismatch when
// theta length differs from param_arity.
Circuit bind(const SubroutineSpec& spec, const ParamVector& theta);

// Wraps a fixed circuit as a zero-parameter spec.
SubroutineSpec subroutine_of_circuit(Circuit circuit);

}  // namespace qassert

#endif  // QASSERT_SUBROUTINE_HPP_
