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

#include "qassert/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qassert/errors.hpp"
#include "qassert/rng.hpp"

namespace qassert {

namespace {

using namespace std::complex_literals;

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, -1i, 1i, 0.0;
  return m;
}
CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix conjugate_on_qubit(const CMatrix& rho, int n_qubits, int qubit,
                           const CMatrix& op1q) {
  const CMatrix full = embed_operator(n_qubits, {qubit}, op1q);
  return full * rho * full.adjoint();
}

CMatrix apply_noise_to_qubit(const CMatrix& rho, int n_qubits, int qubit,
                             const NoiseModel& noise) {
  switch (noise.kind) {
    case NoiseModel::Kind::Noiseless:
      return rho;
    case NoiseModel::Kind::BitFlip: {
      return (1.0 - noise.p) * rho +
             noise.p * conjugate_on_qubit(rho, n_qubits, qubit, pauli_x());
    }
    case NoiseModel::Kind::Depolarizing: {
      CMatrix out = (1.0 - noise.p) * rho;
      const double w = noise.p / 3.0;
      out += w * conjugate_on_qubit(rho, n_qubits, qubit, pauli_x());
      out += w * conjugate_on_qubit(rho, n_qubits, qubit, pauli_y());
      out += w * conjugate_on_qubit(rho, n_qubits, qubit, pauli_z());
      return out;
    }
  }
  return rho;
}

CMatrix apply_reset_to_qubit(const CMatrix& rho, int n_qubits, int qubit) {
  CMatrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, 0;  // |0><0|
  k1 << 0, 1, 0, 0;  // |0><1|
  const CMatrix f0 = embed_operator(n_qubits, {qubit}, k0);
  const CMatrix f1 = embed_operator(n_qubits, {qubit}, k1);
  return f0 * rho * f0.adjoint() + f1 * rho * f1.adjoint();
}

CMatrix evolve_operator(CMatrix op, const Circuit& circuit,
                        const NoiseModel& noise) {
  const int n = circuit.n_qubits();
  for (const Gate& gate : circuit.gates()) {
    if (gate.kind == GateKind::Reset) {
      op = apply_reset_to_qubit(op, n, gate.targets[0]);
    } else {
      const CMatrix full = embed_operator(n, gate.qubits(), gate.local_matrix());
      op = full * op * full.adjoint();
    }
    if (!noise.is_noiseless()) {
      for (int q : gate.qubits()) {
        op = apply_noise_to_qubit(op, n, q, noise);
      }
    }
  }
  return op;
}

}  // namespace

NoiseModel NoiseModel::bit_flip(double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "probability outside [0, 1]");
  }
  return {Kind::BitFlip, p};
}

NoiseModel NoiseModel::depolarizing(double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "probability outside [0, 1]");
  }
  return {Kind::Depolarizing, p};
}

std::string NoiseModel::to_string() const {
  switch (kind) {
    case Kind::Noiseless:
      return "noiseless";
    case Kind::BitFlip:
      return "bitflip:" + std::to_string(p);
    case Kind::Depolarizing:
      return "depolarizing:" + std::to_string(p);
  }
  return "?";
}

NoiseModel NoiseModel::from_string(const std::string& text) {
  if (text == "noiseless" || text.empty()) return noiseless();
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  double p = 0.0;
  if (colon != std::string::npos) {
    try {
      p = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument,
                  "bad noise probability in '" + text + "'");
    }
  }
  if (kind == "bitflip") return bit_flip(p);
  if (kind == "depolarizing") return depolarizing(p);
  throw Error(ErrorCode::InvalidArgument, "unknown noise kind '" + kind + "'");
}

DensityMatrix reset_channel(const DensityMatrix& rho) {
  return DensityMatrix::zero_state(rho.n_qubits());
}

DensityMatrix prepare_channel(const DensityMatrix& rho, const CMatrix& u_pre) {
  if (u_pre.rows() != rho.dim() || u_pre.cols() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "preparation unitary does not match register size");
  }
  const DensityMatrix zero = reset_channel(rho);
  return DensityMatrix::from_matrix(rho.n_qubits(),
                                    u_pre * zero.data() * u_pre.adjoint());
}

DensityMatrix apply_circuit(const DensityMatrix& rho, const Circuit& circuit,
                            const NoiseModel& noise) {
  if (rho.n_qubits() != circuit.n_qubits()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state register (" + std::to_string(rho.n_qubits()) +
                    " qubits) does not match circuit (" +
                    std::to_string(circuit.n_qubits()) + ")");
  }
  CMatrix out = evolve_operator(rho.data(), circuit, noise);
  return DensityMatrix::from_matrix(rho.n_qubits(), hermitize(out));
}

CMatrix apply_circuit_to_operator(const CMatrix& op, const Circuit& circuit,
                                  const NoiseModel& noise) {
  if (op.rows() != (Eigen::Index(1) << circuit.n_qubits())) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator does not match circuit register");
  }
  return evolve_operator(op, circuit, noise);
}

DensityMatrix measure_channel(const DensityMatrix& rho, const CMatrix& u_meas) {
  if (u_meas.rows() != rho.dim() || u_meas.cols() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "measurement unitary does not match register size");
  }
  const CMatrix rotated = u_meas * rho.data() * u_meas.adjoint();
  CMatrix diag = CMatrix::Zero(rho.dim(), rho.dim());
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    diag(i, i) = std::max(0.0, rotated(i, i).real());
  }
  diag /= diag.trace().real();
  return DensityMatrix::from_matrix(rho.n_qubits(), std::move(diag));
}

RVector diagonal_probabilities(const DensityMatrix& rho_diag) {
  const CMatrix& m = rho_diag.data();
  CMatrix off = m;
  off.diagonal().setZero();
  if (off.norm() >= 1e-10) {
    throw Error(ErrorCode::NotDiagonal,
                "state has off-diagonal weight " + std::to_string(off.norm()));
  }
  RVector p = m.diagonal().real().cwiseMax(0.0);
  p /= p.sum();
  return p;
}

Counts sample_counts(const RVector& probabilities, std::uint64_t shots,
                     std::uint64_t seed) {
  if (shots < 1) {
    throw Error(ErrorCode::InvalidArgument, "shots must be >= 1");
  }
  // cumulative distribution over outcomes with nonzero probability
  std::vector<double> cdf;
  std::vector<std::uint64_t> outcome;
  cdf.reserve(static_cast<std::size_t>(probabilities.size()));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    if (probabilities(i) > 0.0) {
      acc += probabilities(i);
      cdf.push_back(acc);
      outcome.push_back(static_cast<std::uint64_t>(i));
    }
  }
  if (cdf.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no outcome has probability > 0");
  }
  cdf.back() = 1.0 + 1e-12;

  int n_bits = 0;
  while ((Eigen::Index(1) << n_bits) < probabilities.size()) ++n_bits;

  Counts counts;
  counts.n_bits = n_bits;
  counts.shots = shots;
  counts.seed = seed;
  CounterRng rng(seed, /*stream=*/0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx =
        std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    ++counts.table[outcome[idx]];
  }
  return counts;
}

Counts sample_counts(const DensityMatrix& rho_diag, std::uint64_t shots,
                     std::uint64_t seed) {
  return sample_counts(diagonal_probabilities(rho_diag), shots, seed);
}

CMatrix circuit_unitary(const Circuit& circuit) {
  if (circuit.has_reset()) {
    throw Error(ErrorCode::InvalidArgument,
                "circuit with reset has no total unitary");
  }
  const Eigen::Index dim = Eigen::Index(1) << circuit.n_qubits();
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const Gate& gate : circuit.gates()) {
    u = embed_operator(circuit.n_qubits(), gate.qubits(), gate.local_matrix()) *
        u;
  }
  return u;
}

KrausChannel circuit_to_kraus(const Circuit& circuit, const NoiseModel& noise,
                              int n_qubit_cap) {
  const int n = circuit.n_qubits();
  if (n > n_qubit_cap) {
    throw Error(ErrorCode::TooLarge,
                "kraus extraction capped at " + std::to_string(n_qubit_cap) +
                    " qubits, circuit has " + std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  // Choi matrix (1/d) sum_ij |i><j| (x) Phi(|i><j|), assembled by linearity
  CMatrix choi = CMatrix::Zero(dim * dim, dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      CMatrix unit = CMatrix::Zero(dim, dim);
      unit(i, j) = 1.0;
      const CMatrix mapped = evolve_operator(unit, circuit, noise);
      choi.block(i * dim, j * dim, dim, dim) = mapped / static_cast<double>(dim);
    }
  }
  choi = hermitize(choi);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(choi);
  std::vector<CMatrix> kraus;
  for (Eigen::Index q = es.eigenvalues().size() - 1; q >= 0; --q) {
    const double eig = es.eigenvalues()(q);
    if (eig < 1e-10) continue;
    const CVector v = es.eigenvectors().col(q);
    CMatrix k(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      k.col(col) = v.segment(col * dim, dim);
    }
    kraus.push_back(std::sqrt(eig * static_cast<double>(dim)) * k);
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel::KrausChannel(std::vector<CMatrix> operators)
    : ops_(std::move(operators)) {
  if (ops_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty Kraus set");
  }
  const Eigen::Index dim = ops_.front().cols();
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const CMatrix& k : ops_) {
    if (k.cols() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "Kraus operators have mixed input dimensions");
    }
    sum += k.adjoint() * k;
  }
  if ((sum - CMatrix::Identity(dim, dim)).norm() >= 1e-9) {
    throw Error(ErrorCode::InvalidArgument,
                "Kraus set is not trace preserving");
  }
}

CMatrix KrausChannel::apply(const CMatrix& rho) const {
  CMatrix out = CMatrix::Zero(ops_.front().rows(), ops_.front().rows());
  for (const CMatrix& k : ops_) {
    out += k * rho * k.adjoint();
  }
  return out;
}

}  // namespace qassert
