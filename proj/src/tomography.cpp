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

#include "qassert/tomography.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

using namespace std::complex_literals;

RVector normalized_weights(RVector w) {
  const double total = w.sum();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error(ErrorCode::ExecutorFailure,
                "executor returned weights with non-positive total");
  }
  return w / total;
}

// expectation of `target` from weights measured in a compatible setting
double expectation_from_weights(const PauliString& target, const RVector& w) {
  double value = 0.0;
  for (Eigen::Index outcome = 0; outcome < w.size(); ++outcome) {
    if (w(outcome) == 0.0) continue;
    value += w(outcome) *
             target.outcome_parity(static_cast<std::uint64_t>(outcome));
  }
  return value;
}

}  // namespace

WeightsExecutor adapt_counts_executor(CountsExecutor executor) {
  return [executor = std::move(executor)](const PauliString& setting,
                                          std::size_t index) -> RVector {
    return executor(setting, index).weights();
  };
}

PauliExpectations estimate_pauli_expectations(const WeightsExecutor& executor,
                                              int n_qubits) {
  const auto settings = enumerate_measurement_settings(n_qubits);
  std::map<PauliString, RVector> measured;
  std::size_t index = 0;
  for (const PauliString& setting : settings) {
    RVector w;
    try {
      w = executor(setting, index);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ExecutorFailure, e.what());
    }
    if (w.size() != (Eigen::Index(1) << n_qubits)) {
      throw Error(ErrorCode::ExecutorFailure,
                  "executor returned " + std::to_string(w.size()) +
                      " outcome weights for " + std::to_string(n_qubits) +
                      " qubits");
    }
    measured.emplace(setting, normalized_weights(std::move(w)));
    ++index;
  }

  const Eigen::Index n_strings = Eigen::Index(1) << (2 * n_qubits);
  PauliExpectations out;
  out.n_qubits = n_qubits;
  out.values = RVector::Zero(n_strings);
  for (Eigen::Index k = 0; k < n_strings; ++k) {
    const PauliString p =
        PauliString::from_index(n_qubits, static_cast<std::uint64_t>(k));
    if (p.is_identity()) {
      out.values(k) = 1.0;
      continue;
    }
    out.values(k) =
        expectation_from_weights(p, measured.at(covering_setting(p)));
  }
  return out;
}

DensityMatrix state_tomography(const WeightsExecutor& executor, int n_qubits) {
  const PauliExpectations exps =
      estimate_pauli_expectations(executor, n_qubits);
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  CMatrix rho = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < exps.values.size(); ++k) {
    if (exps.values(k) == 0.0) continue;
    rho += exps.values(k) *
           PauliString::from_index(n_qubits, static_cast<std::uint64_t>(k))
               .matrix();
  }
  rho /= static_cast<double>(d);
  return DensityMatrix::from_matrix(n_qubits, psd_project_unit_trace(rho));
}

CMatrix preparation_state_1q(int which) {
  CVector v(2);
  switch (which) {
    case 0:
      v << 1.0, 0.0;
      break;
    case 1:
      v << 0.0, 1.0;
      break;
    case 2:
      v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
      break;
    case 3:
      v << 1.0 / std::sqrt(2.0), 1i / std::sqrt(2.0);
      break;
    default:
      throw Error(ErrorCode::IndexOutOfRange, "preparation index must be 0-3");
  }
  return v * v.adjoint();
}

CMatrix preparation_unitary(int n_qubits, std::uint64_t prep_index) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2), x(2, 2), s(2, 2);
  h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
  x << 0, 1, 1, 0;
  s << 1.0, 0.0, 0.0, 1i;

  CMatrix u = CMatrix::Identity(1, 1);
  std::vector<int> digits(static_cast<std::size_t>(n_qubits));
  for (int q = n_qubits - 1; q >= 0; --q) {
    digits[static_cast<std::size_t>(q)] = static_cast<int>(prep_index & 3u);
    prep_index >>= 2;
  }
  for (int q = 0; q < n_qubits; ++q) {
    CMatrix u1q;
    switch (digits[static_cast<std::size_t>(q)]) {
      case 0:
        u1q = CMatrix::Identity(2, 2);
        break;
      case 1:
        u1q = x;
        break;
      case 2:
        u1q = h;
        break;
      default:
        u1q = s * h;  // |+i>
        break;
    }
    u = kron(u, u1q);
  }
  return u;
}

RMatrix preparation_expansion_matrix(int n_qubits) {
  // per-qubit table a(letter, prep) = tr(P s_prep)
  RMatrix a1(4, 4);
  a1 << 1, 1, 1, 1,  // I
      0, 0, 1, 0,    // X
      0, 0, 0, 1,    // Y
      1, -1, 0, 0;   // Z
  const Eigen::Index nd = Eigen::Index(1) << (2 * n_qubits);
  RMatrix a = RMatrix::Ones(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    RMatrix next(a.rows() * 4, a.cols() * 4);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        next.block(i * 4, j * 4, 4, 4) = a(i, j) * a1;
      }
    }
    a = std::move(next);
  }
  if (a.rows() != nd) {
    throw Error(ErrorCode::InvalidArgument, "internal expansion size error");
  }
  return a;
}

ProcessExecutor adapt_process_counts_executor(ProcessCountsExecutor executor) {
  return [executor = std::move(executor)](
             std::uint64_t prep, const PauliString& setting,
             std::size_t index) -> RVector {
    return executor(prep, setting, index).weights();
  };
}

PauliTransferMatrix process_tomography(const ProcessExecutor& executor,
                                       int n_qubits, int n_qubit_cap) {
  if (n_qubits > n_qubit_cap) {
    throw Error(ErrorCode::TooLarge,
                "process tomography capped at " + std::to_string(n_qubit_cap) +
                    " qubits, requested " + std::to_string(n_qubits));
  }
  const Eigen::Index nd = Eigen::Index(1) << (2 * n_qubits);
  const std::uint64_t n_preps = static_cast<std::uint64_t>(nd);
  const auto settings = enumerate_measurement_settings(n_qubits);

  // measured(j, prep) = tr(P^j Phi(rho_prep))
  RMatrix measured(nd, nd);
  std::size_t config = 0;
  for (std::uint64_t prep = 0; prep < n_preps; ++prep) {
    std::map<PauliString, RVector> per_setting;
    for (const PauliString& setting : settings) {
      RVector w;
      try {
        w = executor(prep, setting, config);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        throw Error(ErrorCode::ExecutorFailure, e.what());
      }
      per_setting.emplace(setting, normalized_weights(std::move(w)));
      ++config;
    }
    for (Eigen::Index j = 0; j < nd; ++j) {
      const PauliString p =
          PauliString::from_index(n_qubits, static_cast<std::uint64_t>(j));
      measured(j, static_cast<Eigen::Index>(prep)) =
          p.is_identity()
              ? 1.0
              : expectation_from_weights(p, per_setting.at(covering_setting(p)));
    }
  }

  // measured = R * A with A the known preparation expansion
  const RMatrix a = preparation_expansion_matrix(n_qubits);
  RMatrix r = a.transpose()
                  .partialPivLu()
                  .solve(measured.transpose())
                  .transpose();
  return {n_qubits, std::move(r)};
}

}  // namespace qassert
