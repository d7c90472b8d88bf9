// SPDX-License-Identifier: Apache-2.0
#include "state_vector.hpp"

#include <algorithm>
#include <cmath>

namespace qhhl {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  require(n_qubits >= 1 && n_qubits <= 24, ErrorCode::InvalidArgument,
          "qubit count out of range: " + std::to_string(n_qubits));
  amps_.assign(std::size_t{1} << n_qubits, cplx{0, 0});
  amps_[0] = cplx{1, 0};
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  require(amps_.size() == (std::size_t{1} << n_qubits),
          ErrorCode::InvalidArgument, "amplitude length is not 2^n_qubits");
  double n = norm();
  require(n > 1e-300, ErrorCode::InvalidArgument, "zero state vector");
  if (std::abs(n - 1.0) > 1e-12) {
    for (auto& a : amps_) a /= n;
  }
}

StateVector StateVector::basis_state(int n_qubits, std::size_t index) {
  StateVector s(n_qubits);
  require(index < s.dim(), ErrorCode::InvalidArgument,
          "basis index out of range");
  s.amps_[0] = cplx{0, 0};
  s.amps_[index] = cplx{1, 0};
  return s;
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  double n = norm();
  require(n > 1e-300, ErrorCode::Validation, "cannot normalize zero vector");
  for (auto& a : amps_) a /= n;
}

CVector StateVector::to_eigen() const {
  CVector v(static_cast<Eigen::Index>(amps_.size()));
  for (std::size_t i = 0; i < amps_.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = amps_[i];
  return v;
}

namespace {

void check_operands(int n_qubits, std::span<const int> targets,
                    std::span<const int> controls) {
  std::vector<int> seen;
  for (int q : targets) {
    require(q >= 0 && q < n_qubits, ErrorCode::InvalidArgument,
            "target qubit out of range: " + std::to_string(q));
    seen.push_back(q);
  }
  for (int q : controls) {
    require(q >= 0 && q < n_qubits, ErrorCode::InvalidArgument,
            "control qubit out of range: " + std::to_string(q));
    seen.push_back(q);
  }
  std::sort(seen.begin(), seen.end());
  require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
          ErrorCode::InvalidArgument, "target/control qubits collide");
}

}  // namespace

void apply_gate(StateVector& state, const CMatrix& gate,
                std::span<const int> targets, std::span<const int> controls) {
  const int n = state.n_qubits_;
  check_operands(n, targets, controls);
  const std::size_t t = targets.size();
  require(t >= 1, ErrorCode::InvalidArgument, "gate needs at least one target");
  const std::size_t gdim = std::size_t{1} << t;
  require(static_cast<std::size_t>(gate.rows()) == gdim &&
              static_cast<std::size_t>(gate.cols()) == gdim,
          ErrorCode::InvalidArgument, "gate dimension does not match targets");
#ifndef NDEBUG
  require(is_unitary(gate, 1e-10), ErrorCode::Validation,
          "gate matrix is not unitary");
#endif

  // Bit position (from the LSB of the state index) of each qubit.
  std::vector<std::size_t> tbit(t);
  for (std::size_t k = 0; k < t; ++k)
    tbit[k] = std::size_t{1} << (n - 1 - targets[k]);
  std::size_t tmask = 0;
  for (auto b : tbit) tmask |= b;
  std::size_t cmask = 0;
  for (int q : controls) cmask |= std::size_t{1} << (n - 1 - q);

  std::vector<cplx> in(gdim), out(gdim);
  auto& amps = state.amps_;
  const std::size_t dim = amps.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & tmask) continue;
    if ((base & cmask) != cmask) continue;
    for (std::size_t g = 0; g < gdim; ++g) {
      std::size_t idx = base;
      // Gate-index bit 0 is the least significant target bit, i.e. the
      // last entry of `targets`.
      for (std::size_t k = 0; k < t; ++k)
        if (g & (std::size_t{1} << (t - 1 - k))) idx |= tbit[k];
      in[g] = amps[idx];
    }
    for (std::size_t r = 0; r < gdim; ++r) {
      cplx acc{0, 0};
      for (std::size_t c = 0; c < gdim; ++c)
        acc += gate(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      out[r] = acc;
    }
    for (std::size_t g = 0; g < gdim; ++g) {
      std::size_t idx = base;
      for (std::size_t k = 0; k < t; ++k)
        if (g & (std::size_t{1} << (t - 1 - k))) idx |= tbit[k];
      amps[idx] = out[g];
    }
  }
}

StateVector evolve(const StateVector& state, const CMatrix& hamiltonian,
                   double time) {
  require(static_cast<std::size_t>(hamiltonian.rows()) == state.dim() &&
              static_cast<std::size_t>(hamiltonian.cols()) == state.dim(),
          ErrorCode::InvalidArgument, "Hamiltonian dimension mismatch");
  require(is_hermitian(hamiltonian, 1e-12), ErrorCode::Validation,
          "Hamiltonian is not Hermitian");
  CMatrix u = expi_hermitian(hamiltonian, time);
  CVector v = u * state.to_eigen();
  std::vector<cplx> amps(state.dim());
  for (std::size_t i = 0; i < amps.size(); ++i)
    amps[i] = v(static_cast<Eigen::Index>(i));
  return StateVector(state.n_qubits(), std::move(amps));
}

void apply_phases(StateVector& state, const std::vector<double>& diag,
                  double time) {
  require(diag.size() == state.dim(), ErrorCode::InvalidArgument,
          "diagonal length mismatch");
  for (std::size_t i = 0; i < diag.size(); ++i)
    state.amps_[i] *= std::exp(kI * (time * diag[i]));
}

double outcome_probability(const StateVector& state, int qubit, int outcome) {
  require(qubit >= 0 && qubit < state.n_qubits(), ErrorCode::InvalidArgument,
          "qubit index out of range");
  require(outcome == 0 || outcome == 1, ErrorCode::InvalidArgument,
          "outcome must be 0 or 1");
  const std::size_t bit = std::size_t{1} << (state.n_qubits() - 1 - qubit);
  double p = 0;
  for (std::size_t i = 0; i < state.dim(); ++i)
    if (((i & bit) != 0) == (outcome == 1)) p += std::norm(state.amplitude(i));
  return p;
}

std::pair<StateVector, double> post_select(const StateVector& state, int qubit,
                                           int outcome) {
  double p = outcome_probability(state, qubit, outcome);
  require(p > 1e-300, ErrorCode::DegenerateInstance,
          "impossible outcome: branch probability is zero");
  const std::size_t bit = std::size_t{1} << (state.n_qubits() - 1 - qubit);
  std::vector<cplx> amps(state.dim(), cplx{0, 0});
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < state.dim(); ++i)
    if (((i & bit) != 0) == (outcome == 1))
      amps[i] = state.amplitude(i) * scale;
  return {StateVector(state.n_qubits(), std::move(amps)), p};
}

double expectation(const StateVector& state, const CMatrix& obs) {
  require(static_cast<std::size_t>(obs.rows()) == state.dim() &&
              static_cast<std::size_t>(obs.cols()) == state.dim(),
          ErrorCode::InvalidArgument, "observable dimension mismatch");
  require(is_hermitian(obs, 1e-12), ErrorCode::Validation,
          "observable is not Hermitian");
  CVector v = state.to_eigen();
  cplx val = v.dot(obs * v);
  require(std::abs(val.imag()) < 1e-10, ErrorCode::Validation,
          "expectation has non-negligible imaginary part");
  return val.real();
}

std::vector<double> marginal_distribution(const StateVector& state, int first,
                                          int count) {
  require(first >= 0 && count >= 1 && first + count <= state.n_qubits(),
          ErrorCode::InvalidArgument, "marginal range out of bounds");
  const int n = state.n_qubits();
  const int shift = n - first - count;  // bits below the range
  const std::size_t mask = (std::size_t{1} << count) - 1;
  std::vector<double> probs(std::size_t{1} << count, 0.0);
  for (std::size_t i = 0; i < state.dim(); ++i)
    probs[(i >> shift) & mask] += std::norm(state.amplitude(i));
  return probs;
}

}  // namespace qhhl
