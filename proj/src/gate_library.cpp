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

#include "qassert/gate_library.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qassert/errors.hpp"

namespace qassert {

Circuit build_qft(int n_qubits) {
  if (n_qubits < 1) {
    throw Error(ErrorCode::InvalidArgument, "qft needs at least 1 qubit");
  }
  Circuit c(n_qubits, "qft" + std::to_string(n_qubits));
  for (int j = 0; j < n_qubits; ++j) {
    c.append(Gate::h(j));
    for (int k = j + 1; k < n_qubits; ++k) {
      c.append(Gate::cp(M_PI / std::pow(2.0, k - j), k, j));
    }
  }
  for (int j = 0; j < n_qubits / 2; ++j) {
    c.append(Gate::swap(j, n_qubits - 1 - j));
  }
  return c;
}

Circuit build_qft_inverse(int n_qubits) {
  const Circuit fwd = build_qft(n_qubits);
  Circuit c(n_qubits, "iqft" + std::to_string(n_qubits));
  for (auto it = fwd.gates().rbegin(); it != fwd.gates().rend(); ++it) {
    c.append(it->adjoint());
  }
  return c;
}

int modulus_register_size(std::int64_t modulus) {
  if (modulus < 2) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be >= 2");
  }
  return static_cast<int>(std::floor(std::log2(modulus - 1))) + 1;
}

CMatrix modular_multiplication_matrix(std::int64_t multiplier,
                                      std::int64_t modulus) {
  if (std::gcd(multiplier, modulus) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(multiplier) + ", " +
                    std::to_string(modulus) + ") > 1");
  }
  const int n = modulus_register_size(modulus);
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix u = CMatrix::Zero(dim, dim);
  for (std::int64_t x = 0; x < modulus; ++x) {
    u((multiplier * x) % modulus, x) = 1.0;
  }
  for (Eigen::Index x = modulus; x < dim; ++x) {
    u(x, x) = 1.0;
  }
  return u;
}

Gate build_controlled_modmul(std::int64_t a, std::int64_t modulus,
                             std::int64_t theta, int control,
                             const std::vector<int>& targets) {
  if (theta < 0) {
    throw Error(ErrorCode::InvalidArgument, "theta must be >= 0");
  }
  if (std::gcd(a, modulus) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(a) + ", " +
                                           std::to_string(modulus) + ") > 1");
  }
  // b = a^(2^theta) mod N by repeated squaring
  std::int64_t b = a % modulus;
  for (std::int64_t i = 0; i < theta; ++i) {
    b = (b * b) % modulus;
  }
  const int n = modulus_register_size(modulus);
  if (static_cast<int>(targets.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "modulus " + std::to_string(modulus) + " needs " +
                    std::to_string(n) + " target qubits");
  }
  return Gate::unitary(modular_multiplication_matrix(b, modulus),
                       "M_" + std::to_string(b), targets, {control});
}

}  // namespace qassert
