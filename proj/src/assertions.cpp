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

#include "qassert/assertions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qassert/errors.hpp"
#include "qassert/stats.hpp"

namespace qassert {

const char* assertion_kind_name(const Assertion& assertion) {
  if (std::holds_alternative<StateEquals>(assertion)) return "state_equals";
  if (std::holds_alternative<ChoiEquals>(assertion)) return "choi_equals";
  if (std::holds_alternative<DistributionEquals>(assertion))
    return "distribution_equals";
  if (std::holds_alternative<FunctionalEquals>(assertion)) return "functional";
  return "deterministic";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Fidelity:
      return "fidelity";
    case Method::ProcessFidelity:
      return "process_fidelity";
    case Method::Chi2PValue:
      return "chi2_p_value";
    case Method::ExactMatch:
      return "exact_match";
  }
  return "?";
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "states act on different registers");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(
      hermitize(rho.data() - sigma.data()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "states act on different registers");
  }
  const CMatrix sqrt_rho = hermitian_sqrt(rho.data());
  const CMatrix inner = hermitize(sqrt_rho * sigma.data() * sqrt_rho);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(inner, Eigen::EigenvaluesOnly);
  double trace_sqrt = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    trace_sqrt += std::sqrt(std::max(0.0, es.eigenvalues()(i)));
  }
  return std::clamp(trace_sqrt * trace_sqrt, 0.0, 1.0);
}

AssertionVerdict assert_state_equals(const DensityMatrix& estimated,
                                     const DensityMatrix& expected,
                                     double threshold) {
  return AssertionVerdict::at_threshold(fidelity(estimated, expected),
                                        threshold, Method::Fidelity);
}

AssertionVerdict assert_choi_equals(const ChoiMatrix& estimated,
                                    const ChoiMatrix& expected,
                                    double threshold) {
  if (estimated.data.rows() != expected.data.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "Choi matrices have different sizes");
  }
  const ChoiMatrix est = estimated.projected();
  const ChoiMatrix exp = expected.projected();
  const int dual_qubits = 2 * est.n_qubits;
  const double f =
      fidelity(DensityMatrix::from_matrix(dual_qubits, est.data),
               DensityMatrix::from_matrix(dual_qubits, exp.data));
  return AssertionVerdict::at_threshold(f, threshold, Method::ProcessFidelity);
}

AssertionVerdict chi2_assert(const Counts& counts, const RVector& expected,
                             double threshold, double min_expected_pool) {
  if (counts.shots < 1) {
    throw Error(ErrorCode::InvalidArgument, "counts have no shots");
  }
  if (std::abs(expected.sum() - 1.0) > 1e-9 || expected.minCoeff() < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "expected distribution is not a probability vector");
  }
  const PearsonResult result =
      pearson_chi_squared(counts.weights(), expected,
                          static_cast<double>(counts.total()),
                          min_expected_pool);
  return AssertionVerdict::at_threshold(result.p_value, threshold,
                                        Method::Chi2PValue);
}

AssertionVerdict deterministic_assert(const Counts& counts,
                                      std::uint64_t expected_outcome) {
  const std::uint64_t total = counts.total();
  std::uint64_t matching = 0;
  const auto it = counts.table.find(expected_outcome);
  if (it != counts.table.end()) matching = it->second;
  const double fraction =
      total == 0 ? 0.0
                 : static_cast<double>(matching) / static_cast<double>(total);
  // determinism demands every shot to match
  return {fraction, matching == total && total > 0, 1.0, Method::ExactMatch};
}

AssertionVerdict functional_assert(const DensityMatrix& estimated,
                                   const FunctionalEquals& assertion,
                                   double threshold) {
  double value = 0.0;
  switch (assertion.functional) {
    case Functional::Purity:
      value = estimated.purity();
      break;
    case Functional::Expectation: {
      if (assertion.observable.size() != estimated.n_qubits()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "observable does not match register size");
      }
      value = (assertion.observable.matrix() * estimated.data()).trace().real();
      break;
    }
    default:
      throw Error(ErrorCode::UnsupportedFunctional, "unknown functional");
  }
  return functional_assert_estimate(value, assertion, threshold);
}

AssertionVerdict functional_assert(const Counts& counts,
                                   const FunctionalEquals& assertion,
                                   double threshold) {
  if (assertion.functional != Functional::Expectation) {
    throw Error(ErrorCode::UnsupportedFunctional,
                "only expectation functionals can be evaluated from counts");
  }
  if (std::abs(assertion.expected) > 1.0) {
    throw Error(ErrorCode::InvalidArgument,
                "Pauli expectation outside [-1, 1]");
  }
  // two-outcome parity model: P(+1) = (1 + <O>)/2
  RVector parity_counts = RVector::Zero(2);
  for (const auto& [outcome, n] : counts.table) {
    const int parity = assertion.observable.outcome_parity(outcome);
    parity_counts(parity > 0 ? 0 : 1) += static_cast<double>(n);
  }
  RVector expected(2);
  expected << (1.0 + assertion.expected) / 2.0,
      (1.0 - assertion.expected) / 2.0;
  const PearsonResult result = pearson_chi_squared(
      parity_counts, expected, static_cast<double>(counts.total()),
      /*min_expected=*/0.0);
  return AssertionVerdict::at_threshold(result.p_value, threshold,
                                        Method::Chi2PValue);
}

AssertionVerdict functional_assert_estimate(double estimate,
                                            const FunctionalEquals& assertion,
                                            double threshold) {
  if (assertion.tolerance <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be > 0");
  }
  const double probability =
      1.0 - std::min(1.0, std::abs(estimate - assertion.expected) /
                              assertion.tolerance);
  return AssertionVerdict::at_threshold(probability, threshold,
                                        Method::Fidelity);
}

}  // namespace qassert
