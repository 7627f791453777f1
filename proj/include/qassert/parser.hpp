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

#ifndef QASSERT_PARSER_HPP_
#define QASSERT_PARSER_HPP_

#include <string>
#include <string_view>

#include "qassert/subroutine.hpp"

namespace qassert {

// Parses a single subroutine definition:
//
//   def name(qubit[N] q) {            // '//' comments allowed
//     x q[0];
//     cp(pi/2) q[1], q[0];
//     ...
//   }
//
// Supported gates: x y z h s sdg t cx cp swap reset. Optional angle
// parameters may be declared after the register ("def f(qubit[2] q, angle
// t)") and referenced in cp(...). Angle literals accept decimal numbers and
// the forms pi, k*pi, pi/m, k*pi/m with optional sign.
//
// Errors: SyntaxError (with line:column and the expected token), UnknownGate,
// IndexOutOfRange.
SubroutineSpec parse_subroutine(std::string_view source);

// Canonical source text for a parsed spec; round-trips through
// parse_subroutine to a structurally equal spec.
std::string serialize_subroutine(const SubroutineSpec& spec);

// Source text for a concrete circuit (no Unitary payloads).
std::string serialize_circuit(const Circuit& circuit);

}  // namespace qassert

#endif  // QASSERT_PARSER_HPP_
