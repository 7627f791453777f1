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

#include "qassert/shadows.hpp"

#include <algorithm>
#include <cmath>

#include "qassert/errors.hpp"
#include "qassert/rng.hpp"

namespace qassert {

std::vector<ShadowEstimate> classical_shadows(
    const SnapshotExecutor& executor,
    const std::vector<PauliString>& observables, std::size_t n_snapshots,
    std::size_t k_medians, std::uint64_t seed) {
  if (observables.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no observables given");
  }
  if (k_medians < 1 || n_snapshots < k_medians) {
    throw Error(ErrorCode::InvalidArgument,
                "need n_snapshots >= k_medians >= 1");
  }
  const int n = observables.front().size();
  for (const auto& obs : observables) {
    if (obs.size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "observables act on different register sizes");
    }
  }

  // per-observable, per-group running means
  std::vector<std::vector<double>> group_sum(
      observables.size(), std::vector<double>(k_medians, 0.0));
  std::vector<std::uint64_t> group_count(k_medians, 0);

  for (std::size_t snap = 0; snap < n_snapshots; ++snap) {
    CounterRng rng(seed, snap);
    std::vector<PauliLetter> basis(static_cast<std::size_t>(n));
    for (auto& l : basis) {
      l = static_cast<PauliLetter>(1 + (rng.next_u64() % 3));
    }
    const PauliString basis_string(basis);
    std::uint64_t outcome = 0;
    try {
      outcome = executor(basis_string, snap);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ExecutorFailure, e.what());
    }
    const std::size_t group = snap % k_medians;
    ++group_count[group];
    for (std::size_t o = 0; o < observables.size(); ++o) {
      const PauliString& obs = observables[o];
      double estimate = 1.0;
      for (int q = 0; q < n; ++q) {
        const PauliLetter l = obs[q];
        if (l == PauliLetter::I) continue;
        if (l != basis_string[q]) {
          estimate = 0.0;
          break;
        }
        const int bit =
            static_cast<int>((outcome >> (n - 1 - q)) & 1u);
        estimate *= 3.0 * (1 - 2 * bit);
      }
      group_sum[o][group] += estimate;
    }
  }

  std::vector<ShadowEstimate> out;
  out.reserve(observables.size());
  for (std::size_t o = 0; o < observables.size(); ++o) {
    std::vector<double> means(k_medians);
    for (std::size_t g = 0; g < k_medians; ++g) {
      means[g] = group_sum[o][g] / static_cast<double>(group_count[g]);
    }
    std::sort(means.begin(), means.end());
    const std::size_t mid = k_medians / 2;
    double median = (k_medians % 2 == 1)
                        ? means[mid]
                        : 0.5 * (means[mid - 1] + means[mid]);
    if (observables[o].is_identity()) {
      median = 1.0;  // tr(rho) = 1 regardless of data
    }
    median = std::clamp(median, -1.0, 1.0);
    out.push_back({observables[o], median, n_snapshots, k_medians});
  }
  return out;
}

}  // namespace qassert
