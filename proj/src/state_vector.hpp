// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <utility>

#include "linalg.hpp"
#include "types.hpp"

namespace qhhl {

// Basis convention: qubit 0 occupies the most significant bit of the state
// index, so |q0 q1 ... q_{n-1}> maps to index q0*2^{n-1} + ... + q_{n-1}.
// Qubit 0 is the ancilla, qubits 1..n_R the register (qubit 1 = most
// significant eigenvalue bit), the rest memory.
class StateVector {
 public:
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  static StateVector basis_state(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  CVector to_eigen() const;

 private:
  int n_qubits_;
  std::vector<cplx> amps_;

  friend void apply_gate(StateVector&, const CMatrix&, std::span<const int>,
                         std::span<const int>);
  friend void apply_phases(StateVector&, const std::vector<double>&, double);
};

/// In-place controlled gate application. `gate` acts on `targets` (first
/// target = most significant gate-index bit); active when every control
/// qubit reads 1.
void apply_gate(StateVector& state, const CMatrix& gate,
                std::span<const int> targets, std::span<const int> controls = {});

/// state <- exp(i * time * h) state, exact Hermitian eigendecomposition.
StateVector evolve(const StateVector& state, const CMatrix& hamiltonian,
                   double time);

/// Diagonal-Hamiltonian fast path: amp[b] *= exp(i * time * diag[b]).
void apply_phases(StateVector& state, const std::vector<double>& diag,
                  double time);

/// Probability of reading `outcome` on `qubit`.
double outcome_probability(const StateVector& state, int qubit, int outcome);

/// Renormalized conditional state plus the branch probability.
std::pair<StateVector, double> post_select(const StateVector& state, int qubit,
                                           int outcome);

/// <psi| obs |psi>; obs must be Hermitian.
double expectation(const StateVector& state, const CMatrix& obs);

/// Marginal probability distribution over a contiguous qubit range
/// [first, first+count).
std::vector<double> marginal_distribution(const StateVector& state, int first,
                                          int count);

}  // namespace qhhl
