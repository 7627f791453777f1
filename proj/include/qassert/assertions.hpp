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

#ifndef QASSERT_ASSERTIONS_HPP_
#define QASSERT_ASSERTIONS_HPP_

#include <cstdint>
#include <string>
#include <variant>

#include "qassert/channel_reps.hpp"
#include "qassert/counts.hpp"
#include "qassert/density_matrix.hpp"
#include "qassert/pauli.hpp"

namespace qassert {

// ---------------------------------------------------------------------------
// Assertion kinds
// ---------------------------------------------------------------------------

struct StateEquals {
  DensityMatrix expected;
};

struct ChoiEquals {
  ChoiMatrix expected;
};

struct DistributionEquals {
  RVector expected;  // probabilities over 2^n outcomes, sums to 1 (1e-9)
};

enum class Functional { Expectation, Purity };

struct FunctionalEquals {
  Functional functional = Functional::Expectation;
  PauliString observable = PauliString::identity(1);  // Expectation only
  double expected = 0.0;
  double tolerance = 0.05;
};

struct Deterministic {
  std::uint64_t expected_outcome = 0;
};

using Assertion = std::variant<StateEquals, ChoiEquals, DistributionEquals,
                               FunctionalEquals, Deterministic>;

const char* assertion_kind_name(const Assertion& assertion);

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

enum class Method { Fidelity, ProcessFidelity, Chi2PValue, ExactMatch };

const char* method_name(Method m);

// Pr(A|B_n) together with the pass decision at `threshold`.
struct AssertionVerdict {
  double probability = 0.0;
  bool passed = false;
  double threshold = 0.5;
  Method method = Method::Fidelity;

  static AssertionVerdict at_threshold(double probability, double threshold,
                                       Method method) {
    return {probability, probability >= threshold, threshold, method};
  }
};

// ---------------------------------------------------------------------------
// State and channel distance measures
// ---------------------------------------------------------------------------

// (1/2) sum |eigenvalues(rho - sigma)|, in [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Squared Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to
// [0, 1]; equals |<psi|phi>|^2 on pure states.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// ---------------------------------------------------------------------------
// Assertion evaluation
// ---------------------------------------------------------------------------

AssertionVerdict assert_state_equals(const DensityMatrix& estimated,
                                     const DensityMatrix& expected,
                                     double threshold = 0.5);

// Process fidelity of the (projected) Choi states.
AssertionVerdict assert_choi_equals(const ChoiMatrix& estimated,
                                    const ChoiMatrix& expected,
                                    double threshold = 0.5);

// Pearson goodness of fit of counts against the expected distribution;
// probability is the p-value. Bins with expected count below
// `min_expected_pool` are pooled (see stats.hpp).
AssertionVerdict chi2_assert(const Counts& counts, const RVector& expected,
                             double threshold = 0.5,
                             double min_expected_pool = 5.0);

// Fraction of shots matching the expected outcome; passes only when every
// shot matches.
AssertionVerdict deterministic_assert(const Counts& counts,
                                      std::uint64_t expected_outcome);

// Purity functional from a reconstructed state: linear ramp
// 1 - min(1, |tr(rho^2) - expected| / tolerance).
AssertionVerdict functional_assert(const DensityMatrix& estimated,
                                   const FunctionalEquals& assertion,
                                   double threshold = 0.5);

// Expectation functional from counts measured in the observable's eigenbasis:
// chi-squared test against the two-outcome parity model implied by the
// expected value.
AssertionVerdict functional_assert(const Counts& counts,
                                   const FunctionalEquals& assertion,
                                   double threshold = 0.5);

// Expectation functional from a shadow (or other direct) estimate: the same
// linear ramp as the purity form.
AssertionVerdict functional_assert_estimate(double estimate,
                                            const FunctionalEquals& assertion,
                                            double threshold = 0.5);

}  // namespace qassert

#endif  // QASSERT_ASSERTIONS_HPP_
