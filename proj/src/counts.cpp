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

#include "qassert/counts.hpp"

#include <numeric>

#include "qassert/errors.hpp"

namespace qassert {

std::uint64_t Counts::total() const {
  std::uint64_t sum = 0;
  for (const auto& [outcome, n] : table) sum += n;
  return sum;
}

RVector Counts::weights() const {
  const Eigen::Index dim = Eigen::Index(1) << n_bits;
  RVector w = RVector::Zero(dim);
  for (const auto& [outcome, n] : table) {
    if (outcome >= static_cast<std::uint64_t>(dim)) {
      throw Error(ErrorCode::IndexOutOfRange, "outcome exceeds register size");
    }
    w(static_cast<Eigen::Index>(outcome)) = static_cast<double>(n);
  }
  return w;
}

Counts Counts::marginal(const std::vector<int>& keep_qubits) const {
  Counts out;
  out.n_bits = static_cast<int>(keep_qubits.size());
  out.shots = shots;
  out.seed = seed;
  for (const auto& [outcome, n] : table) {
    std::uint64_t reduced = 0;
    for (int q : keep_qubits) {
      const int bit = n_bits - 1 - q;
      reduced = (reduced << 1) | ((outcome >> bit) & 1u);
    }
    out.table[reduced] += n;
  }
  return out;
}

std::string Counts::bitstring(std::uint64_t outcome) const {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int i = 0; i < n_bits; ++i) {
    if ((outcome >> (n_bits - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

}  // namespace qassert
