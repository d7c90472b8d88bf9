// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "circuit.hpp"
#include "state_vector.hpp"

namespace qhhl {

void apply_instruction(StateVector& state, const Instruction& instr);

/// Runs the circuit on a copy of `input` (which defaults to |0...0>).
StateVector run_circuit(const Circuit& circuit, const StateVector& input);
StateVector run_circuit(const Circuit& circuit);

/// HHL_ORACLE_LIMIT environment override, default 10 qubits.
int unitary_oracle_limit();

/// Full 2^n x 2^n unitary of the instruction sequence (analog blocks
/// included). Rejects circuits wider than the oracle limit.
CMatrix circuit_unitary(const Circuit& circuit);
CMatrix circuit_unitary(const Circuit& circuit, int oracle_limit);

}  // namespace qhhl
