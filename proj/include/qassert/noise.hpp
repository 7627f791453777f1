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

#ifndef QASSERT_NOISE_HPP_
#define QASSERT_NOISE_HPP_

#include <string>

namespace qassert {

// Parametric gate noise, applied as an exact channel after each gate to
// every qubit the gate touches:
//   BitFlip:      rho -> (1-p) rho + p X rho X
//   Depolarizing: rho -> (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z)
// Stochasticity enters only at terminal sampling, never here.
struct NoiseModel {
  enum class Kind { Noiseless, BitFlip, Depolarizing };

  Kind kind = Kind::Noiseless;
  double p = 0.0;

  static NoiseModel noiseless() { return {}; }
  static NoiseModel bit_flip(double p);
  static NoiseModel depolarizing(double p);

  bool is_noiseless() const {
    return kind == Kind::Noiseless || p == 0.0;
  }

  std::string to_string() const;
  static NoiseModel from_string(const std::string& text);  // "bitflip:0.01"
};

}  // namespace qassert

#endif  // QASSERT_NOISE_HPP_
