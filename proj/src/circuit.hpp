// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coupling_graph.hpp"
#include "linalg.hpp"
#include "types.hpp"

namespace qhhl {

/// Role-tagged qubit layout: qubit 0 is the ancilla, qubits 1..n_R the
/// eigenvalue register (qubit 1 = most significant bit), the remaining n_M
/// qubits the memory holding |b> and the solution.
struct QubitLayout {
  int n_R = 1;
  int n_M = 1;

  int total() const { return 1 + n_R + n_M; }
  static constexpr int ancilla = 0;
  int register_qubit(int i) const {  // i in [1, n_R]
    require(i >= 1 && i <= n_R, ErrorCode::InvalidArgument,
            "register index out of range");
    return i;
  }
  int memory_qubit(int j) const {  // j in [0, n_M)
    require(j >= 0 && j < n_M, ErrorCode::InvalidArgument,
            "memory index out of range");
    return 1 + n_R + j;
  }
  void validate() const {
    require(n_R >= 1, ErrorCode::Validation, "layout needs n_R >= 1");
    require(n_M >= 1, ErrorCode::Validation, "layout needs n_M >= 1");
  }
  bool operator==(const QubitLayout&) const = default;
};

enum class GateKind {
  X,
  Y,
  Z,
  H,
  V,
  Vdg,
  Rx,
  Ry,
  Rz,
  Cnot,
  Cz,
  Swap,
  ControlledUnitary,
  AnalogBlock,
};

const char* gate_name(GateKind k);
bool is_single_qubit(GateKind k);
bool is_rotation(GateKind k);

struct AnalogParams {
  CouplingGraphPtr graph;
  double g = 1.0;   // global strength multiplier
  double t = 0.0;   // duration, >= 0
  int sign = +1;    // adjoint marker: evolution exp(i * sign * g * t * H)
};

struct Instruction {
  GateKind kind;
  // Operand convention: single-qubit gates use qubits = {q}; CNOT uses
  // {control, target}; CZ and SWAP use {a, b}; ControlledUnitary uses
  // qubits as targets (first target = most significant matrix bit) with
  // the separate control list.
  std::vector<int> qubits;
  std::vector<int> controls;
  double angle = 0.0;
  CMatrix matrix;        // ControlledUnitary only
  AnalogParams analog;   // AnalogBlock only

  static Instruction single(GateKind k, int q);
  static Instruction rotation(GateKind k, int q, double angle);
  static Instruction cnot(int control, int target);
  static Instruction cz(int a, int b);
  static Instruction swap(int a, int b);
  static Instruction controlled_unitary(CMatrix u, std::vector<int> targets,
                                        std::vector<int> controls);
  static Instruction analog_block(CouplingGraphPtr graph, double g, double t,
                                  int sign = +1);

  Instruction adjoint() const;
  bool equals(const Instruction& other) const;
};

struct ResourceCount {
  long long single_qubit_gates = 0;
  long long two_qubit_gates = 0;
  long long cnot_count = 0;
  long long swap_count = 0;
  long long controlled_blocks = 0;  // controlled-unitary blocks wider than 2 qubits
  long long analog_blocks = 0;
  double total_analog_time = 0.0;
};

class Circuit {
 public:
  explicit Circuit(QubitLayout layout) : layout_(layout) { layout.validate(); }

  const QubitLayout& layout() const { return layout_; }
  const std::vector<Instruction>& instructions() const { return instructions_; }
  std::size_t size() const { return instructions_.size(); }
  int n_qubits() const { return layout_.total(); }

  Circuit& append(Instruction instr);
  Circuit& extend(const Circuit& other);

  Circuit inverse() const;

 private:
  QubitLayout layout_;
  std::vector<Instruction> instructions_;
};

void validate_instruction(const Instruction& instr, const QubitLayout& layout);

/// Exact per-kind tally. With native_gates set, each SWAP additionally
/// contributes 3 CNOTs to the two-qubit totals (swap_count still records
/// the SWAP instructions themselves).
ResourceCount count_resources(const Circuit& circuit, bool native_gates = false);

/// 2x2 matrix of a single-qubit instruction.
CMatrix single_qubit_matrix(const Instruction& instr);

}  // namespace qhhl
