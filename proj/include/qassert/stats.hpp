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

#ifndef QASSERT_STATS_HPP_
#define QASSERT_STATS_HPP_

#include <cstdint>
#include <vector>

#include "qassert/linalg.hpp"

namespace qassert {

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x),
// series expansion for x < a + 1 and continued fraction otherwise.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Survival function of the chi-squared distribution, Q(df/2, x/2).
double chi_squared_survival(double statistic, double degrees_of_freedom);

struct PearsonResult {
  double statistic = 0.0;
  int pooled_bins = 0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
};

// Pearson goodness of fit of observed counts against expected probabilities.
// Bins whose expected count falls below `min_expected` (and all zero-expected
// bins) are merged with their smaller-expectation adjacent neighbor;
// degrees of freedom = pooled bins - 1. Throws DegenerateExpected when fewer
// than 2 pooled bins remain.
PearsonResult pearson_chi_squared(const RVector& observed_counts,
                                  const RVector& expected_probabilities,
                                  double total_shots,
                                  double min_expected = 5.0);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y);

double mean(const std::vector<double>& v);
double sample_stddev(const std::vector<double>& v);

}  // namespace qassert

#endif  // QASSERT_STATS_HPP_
