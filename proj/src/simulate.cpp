// SPDX-License-Identifier: Apache-2.0
#include "simulate.hpp"

#include <array>
#include <cstdlib>

namespace qhhl {

void apply_instruction(StateVector& state, const Instruction& instr) {
  switch (instr.kind) {
    case GateKind::Cnot: {
      std::array<int, 1> t{instr.qubits[1]};
      std::array<int, 1> c{instr.qubits[0]};
      apply_gate(state, mat_x(), t, c);
      return;
    }
    case GateKind::Cz: {
      std::array<int, 1> t{instr.qubits[1]};
      std::array<int, 1> c{instr.qubits[0]};
      apply_gate(state, mat_z(), t, c);
      return;
    }
    case GateKind::Swap: {
      std::array<int, 2> t{instr.qubits[0], instr.qubits[1]};
      apply_gate(state, mat_swap(), t);
      return;
    }
    case GateKind::ControlledUnitary:
      apply_gate(state, instr.matrix, instr.qubits, instr.controls);
      return;
    case GateKind::AnalogBlock: {
      const auto& a = instr.analog;
      auto diag = a.graph->ising_diagonal(state.n_qubits());
      apply_phases(state, diag, a.sign * a.g * a.t);
      return;
    }
    default: {
      std::array<int, 1> t{instr.qubits[0]};
      apply_gate(state, single_qubit_matrix(instr), t);
      return;
    }
  }
}

StateVector run_circuit(const Circuit& circuit, const StateVector& input) {
  require(input.n_qubits() == circuit.n_qubits(), ErrorCode::InvalidArgument,
          "input state width does not match circuit layout");
  StateVector state = input;
  for (const auto& instr : circuit.instructions())
    apply_instruction(state, instr);
  return state;
}

StateVector run_circuit(const Circuit& circuit) {
  return run_circuit(circuit, StateVector(circuit.n_qubits()));
}

int unitary_oracle_limit() {
  if (const char* env = std::getenv("HHL_ORACLE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 24) return static_cast<int>(v);
  }
  return 10;
}

CMatrix circuit_unitary(const Circuit& circuit) {
  return circuit_unitary(circuit, unitary_oracle_limit());
}

CMatrix circuit_unitary(const Circuit& circuit, int oracle_limit) {
  const int n = circuit.n_qubits();
  require(n <= oracle_limit, ErrorCode::ResourceLimit,
          "circuit width " + std::to_string(n) +
              " exceeds the unitary oracle limit " +
              std::to_string(oracle_limit));
  const std::size_t dim = std::size_t{1} << n;
  CMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis_state(n, col);
    for (const auto& instr : circuit.instructions()) apply_instruction(s, instr);
    for (std::size_t row = 0; row < dim; ++row)
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          s.amplitude(row);
  }
  return u;
}

}  // namespace qhhl
