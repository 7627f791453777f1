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

#include "qassert/channel_reps.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qassert/errors.hpp"
#include "qassert/simulator.hpp"

namespace qassert {

PauliTransferMatrix PauliTransferMatrix::identity(int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << (2 * n_qubits);
  return {n_qubits, RMatrix::Identity(dim, dim)};
}

void ChoiMatrix::validate(double psd_tol) const {
  if ((data - data.adjoint()).norm() >= 1e-9) {
    throw Error(ErrorCode::NotPsd, "Choi matrix is not Hermitian");
  }
  if (std::abs(data.trace().real() - 1.0) >= 1e-9) {
    throw Error(ErrorCode::NotPsd, "Choi matrix trace is not 1");
  }
  const double min_eig = min_eigenvalue_hermitian(data);
  if (min_eig < -psd_tol) {
    throw Error(ErrorCode::NotPsd,
                "Choi matrix has eigenvalue " + std::to_string(min_eig));
  }
}

ChoiMatrix ChoiMatrix::projected() const {
  CMatrix h = hermitize(data);
  h /= h.trace().real();
  return {n_qubits, psd_project_unit_trace(h)};
}

CMatrix psd_project_unit_trace(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(hermitian));
  RVector vals = es.eigenvalues();  // ascending
  const Eigen::Index d = vals.size();
  // Truncate negative eigenvalues in ascending order, spreading the removed
  // mass uniformly over the rest; keeps the trace and is the Frobenius
  // projection onto the density-matrix cone for unit-trace input.
  double carried = 0.0;
  Eigen::Index first_kept = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double share = carried / static_cast<double>(d - i);
    if (vals(i) + share < 0.0) {
      carried += vals(i);
      vals(i) = 0.0;
      first_kept = i + 1;
    } else {
      break;
    }
  }
  if (first_kept < d) {
    const double share = carried / static_cast<double>(d - first_kept);
    for (Eigen::Index i = first_kept; i < d; ++i) vals(i) += share;
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

ChoiMatrix ptm_to_choi(const PauliTransferMatrix& ptm) {
  const int n = ptm.n_qubits;
  const Eigen::Index d = Eigen::Index(1) << n;
  const Eigen::Index d4 = d * d;
  // C = (1/d^2) sum_jk R_jk (P^k)^T (x) P^j
  CMatrix choi = CMatrix::Zero(d4, d4);
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(ptm.data.cols());
       ++k) {
    const CMatrix pk_t =
        PauliString::from_index(n, static_cast<std::uint64_t>(k))
            .matrix()
            .transpose();
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(ptm.data.rows());
         ++j) {
      const double r = ptm.data(j, k);
      if (r == 0.0) continue;
      choi += r * kron(pk_t,
                       PauliString::from_index(n, static_cast<std::uint64_t>(j))
                           .matrix());
    }
  }
  choi /= static_cast<double>(d4);
  return {n, hermitize(choi)};
}

PauliTransferMatrix choi_to_ptm(const ChoiMatrix& choi) {
  const int n = choi.n_qubits;
  const Eigen::Index nd = Eigen::Index(1) << (2 * n);
  RMatrix r(nd, nd);
  // R_jk = tr(C ((P^k)^T (x) P^j))
  for (Eigen::Index k = 0; k < nd; ++k) {
    const CMatrix pk_t =
        PauliString::from_index(n, static_cast<std::uint64_t>(k))
            .matrix()
            .transpose();
    for (Eigen::Index j = 0; j < nd; ++j) {
      const CMatrix pj =
          PauliString::from_index(n, static_cast<std::uint64_t>(j)).matrix();
      r(j, k) = (choi.data * kron(pk_t, pj)).trace().real();
    }
  }
  return {n, std::move(r)};
}

KrausChannel choi_to_kraus(const ChoiMatrix& choi, double psd_tol) {
  const double min_eig = min_eigenvalue_hermitian(choi.data);
  if (min_eig < -psd_tol) {
    throw Error(ErrorCode::NotPsd,
                "Choi matrix has eigenvalue " + std::to_string(min_eig) +
                    ", reconstruction is unphysical");
  }
  const ChoiMatrix proj = choi.projected();
  const Eigen::Index d = Eigen::Index(1) << choi.n_qubits;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(proj.data);
  std::vector<CMatrix> kraus;
  for (Eigen::Index q = es.eigenvalues().size() - 1; q >= 0; --q) {
    const double eig = es.eigenvalues()(q);
    if (eig < 1e-10) continue;
    const CVector v = es.eigenvectors().col(q);
    CMatrix k(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
      k.col(col) = v.segment(col * d, d);
    }
    kraus.push_back(std::sqrt(eig * static_cast<double>(d)) * k);
  }
  return KrausChannel(std::move(kraus));
}

ChoiMatrix kraus_to_choi(const KrausChannel& kraus) {
  const Eigen::Index d = kraus.dim();
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  for (const CMatrix& k : kraus.operators()) {
    CVector v(d * d);
    for (Eigen::Index col = 0; col < d; ++col) {
      v.segment(col * d, d) = k.col(col);
    }
    choi += v * v.adjoint();
  }
  choi /= static_cast<double>(d);
  return {n, std::move(choi)};
}

ChoiMatrix choi_of_circuit(const Circuit& circuit, const NoiseModel& noise) {
  const int n = circuit.n_qubits();
  const Eigen::Index d = Eigen::Index(1) << n;
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      CMatrix unit = CMatrix::Zero(d, d);
      unit(i, j) = 1.0;
      choi.block(i * d, j * d, d, d) =
          apply_circuit_to_operator(unit, circuit, noise) /
          static_cast<double>(d);
    }
  }
  return {n, hermitize(choi)};
}

PauliTransferMatrix ptm_of_circuit(const Circuit& circuit,
                                   const NoiseModel& noise) {
  const int n = circuit.n_qubits();
  const Eigen::Index d = Eigen::Index(1) << n;
  const Eigen::Index nd = d * d;
  RMatrix r(nd, nd);
  for (Eigen::Index k = 0; k < nd; ++k) {
    const CMatrix mapped = apply_circuit_to_operator(
        PauliString::from_index(n, static_cast<std::uint64_t>(k)).matrix(),
        circuit, noise);
    for (Eigen::Index j = 0; j < nd; ++j) {
      const CMatrix pj =
          PauliString::from_index(n, static_cast<std::uint64_t>(j)).matrix();
      r(j, k) = (pj * mapped).trace().real() / static_cast<double>(d);
    }
  }
  return {n, std::move(r)};
}

CMatrix apply_ptm(const PauliTransferMatrix& ptm, const CMatrix& rho) {
  const int n = ptm.n_qubits;
  const Eigen::Index d = Eigen::Index(1) << n;
  const Eigen::Index nd = d * d;
  if (rho.rows() != d || rho.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "state does not match PTM size");
  }
  RVector in_coeffs(nd);
  for (Eigen::Index k = 0; k < nd; ++k) {
    in_coeffs(k) =
        (PauliString::from_index(n, static_cast<std::uint64_t>(k)).matrix() *
         rho)
            .trace()
            .real();
  }
  const RVector out_coeffs = ptm.data * in_coeffs;
  CMatrix out = CMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < nd; ++j) {
    if (out_coeffs(j) == 0.0) continue;
    out += out_coeffs(j) *
           PauliString::from_index(n, static_cast<std::uint64_t>(j)).matrix();
  }
  return out / static_cast<double>(d);
}

}  // namespace qassert
