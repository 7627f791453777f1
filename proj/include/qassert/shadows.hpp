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

#ifndef QASSERT_SHADOWS_HPP_
#define QASSERT_SHADOWS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "qassert/pauli.hpp"

namespace qassert {

struct ShadowEstimate {
  PauliString observable;
  double value = 0.0;
  std::size_t n_snapshots = 0;
  std::size_t k_medians = 0;
};

// One randomized snapshot: measure a single shot in the given per-qubit Pauli
// basis (letters in {X, Y, Z}) and return the outcome bits.
using SnapshotExecutor = std::function<std::uint64_t(
    const PauliString& basis, std::size_t snapshot_index)>;

// Pauli-basis classical shadows with the per-snapshot inverse-channel
// estimator (factor 3 per matching non-identity letter, 0 on a basis
// mismatch) and median-of-means over k_medians groups. Estimates are clamped
// to [-1, 1], the range of Pauli observables. Snapshot bases are drawn from
// CounterRng(seed, snapshot_index).
std::vector<ShadowEstimate> classical_shadows(
    const SnapshotExecutor& executor,
    const std::vector<PauliString>& observables, std::size_t n_snapshots,
    std::size_t k_medians, std::uint64_t seed);

}  // namespace qassert

#endif  // QASSERT_SHADOWS_HPP_
