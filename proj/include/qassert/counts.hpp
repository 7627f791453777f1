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

#ifndef QASSERT_COUNTS_HPP_
#define QASSERT_COUNTS_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "qassert/linalg.hpp"

namespace qassert {

// Measurement record of one circuit configuration: occurrences per
// computational-basis outcome. Outcome bit 2^(n-1) corresponds to qubit 0
// (leftmost label), matching the bitstring order in the JSON form.
struct Counts {
  int n_bits = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::uint64_t, std::uint64_t> table;

  std::uint64_t total() const;

  // Occurrence weights as a dense vector of length 2^n_bits.
  RVector weights() const;

  // Marginal counts over the given qubits (ascending positions).
  Counts marginal(const std::vector<int>& keep_qubits) const;

  std::string bitstring(std::uint64_t outcome) const;
};

}  // namespace qassert

#endif  // QASSERT_COUNTS_HPP_
