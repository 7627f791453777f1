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

#include "qassert/stats.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

// lower-incomplete gamma series: P(a,x) = x^a e^-x / Gamma(a) * sum
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 10000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// upper-incomplete gamma continued fraction (modified Lentz)
double gamma_q_continued_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "incomplete gamma needs a > 0, x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "incomplete gamma needs a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

double chi_squared_survival(double statistic, double degrees_of_freedom) {
  if (degrees_of_freedom <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "degrees of freedom must be > 0");
  }
  if (statistic <= 0.0) return 1.0;
  if (!std::isfinite(statistic)) return 0.0;
  return regularized_gamma_q(0.5 * degrees_of_freedom, 0.5 * statistic);
}

PearsonResult pearson_chi_squared(const RVector& observed_counts,
                                  const RVector& expected_probabilities,
                                  double total_shots, double min_expected) {
  if (observed_counts.size() != expected_probabilities.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "observed and expected sizes differ");
  }
  struct Bin {
    double observed;
    double expected;
  };
  std::vector<Bin> bins;
  bins.reserve(static_cast<std::size_t>(observed_counts.size()));
  for (Eigen::Index i = 0; i < observed_counts.size(); ++i) {
    bins.push_back({observed_counts(i),
                    total_shots * expected_probabilities(i)});
  }

  // merge under-populated bins into the smaller-expectation adjacent
  // neighbor until every bin reaches min_expected (zero-expectation bins are
  // always merged); stop rather than collapse below 2 bins
  auto needs_merge = [&](const Bin& b) {
    return b.expected <= 0.0 || b.expected < min_expected;
  };
  while (bins.size() > 2) {
    std::size_t worst = bins.size();
    double worst_expected = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < bins.size(); ++i) {
      if (needs_merge(bins[i]) && bins[i].expected < worst_expected) {
        worst = i;
        worst_expected = bins[i].expected;
      }
    }
    if (worst == bins.size()) break;
    std::size_t neighbor;
    if (worst == 0) {
      neighbor = 1;
    } else if (worst == bins.size() - 1) {
      neighbor = bins.size() - 2;
    } else {
      neighbor = (bins[worst - 1].expected <= bins[worst + 1].expected)
                     ? worst - 1
                     : worst + 1;
    }
    bins[neighbor].observed += bins[worst].observed;
    bins[neighbor].expected += bins[worst].expected;
    bins.erase(bins.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  // a final zero-expectation bin cannot enter the statistic
  if (bins.size() == 2 && (bins[0].expected <= 0.0 || bins[1].expected <= 0.0)) {
    bins[0].observed += bins[1].observed;
    bins[0].expected += bins[1].expected;
    bins.pop_back();
  }
  if (bins.size() < 2) {
    throw Error(ErrorCode::DegenerateExpected,
                "fewer than 2 pooled bins; the expected distribution is a "
                "point mass");
  }

  PearsonResult result;
  result.pooled_bins = static_cast<int>(bins.size());
  result.degrees_of_freedom = static_cast<double>(bins.size() - 1);
  for (const Bin& b : bins) {
    const double diff = b.observed - b.expected;
    result.statistic += diff * diff / b.expected;
  }
  result.p_value =
      chi_squared_survival(result.statistic, result.degrees_of_freedom);
  return result;
}

LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "need >= 2 points to fit");
  }
  const double n = static_cast<double>(x.size());
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r_squared = 1.0;  // constant data is fit exactly
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - (fit.intercept + fit.slope * x[i]);
      ss_res += r * r;
    }
    fit.r_squared = 1.0 - ss_res / syy;
  }
  (void)n;
  return fit;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

double sample_stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace qassert
