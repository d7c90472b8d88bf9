// SPDX-License-Identifier: Apache-2.0
#include "circuit.hpp"

#include <algorithm>
#include <cmath>

namespace qhhl {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::V: return "V";
    case GateKind::Vdg: return "VDG";
    case GateKind::Rx: return "RX";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Cz: return "CZ";
    case GateKind::Swap: return "SWAP";
    case GateKind::ControlledUnitary: return "CU";
    case GateKind::AnalogBlock: return "ANALOG";
  }
  return "?";
}

bool is_single_qubit(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::V:
    case GateKind::Vdg:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      return true;
    default:
      return false;
  }
}

bool is_rotation(GateKind k) {
  return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz;
}

Instruction Instruction::single(GateKind k, int q) {
  require(is_single_qubit(k) && !is_rotation(k), ErrorCode::InvalidArgument,
          "not a fixed single-qubit gate kind");
  Instruction i;
  i.kind = k;
  i.qubits = {q};
  return i;
}

Instruction Instruction::rotation(GateKind k, int q, double angle) {
  require(is_rotation(k), ErrorCode::InvalidArgument, "not a rotation kind");
  Instruction i;
  i.kind = k;
  i.qubits = {q};
  i.angle = angle;
  return i;
}

Instruction Instruction::cnot(int control, int target) {
  Instruction i;
  i.kind = GateKind::Cnot;
  i.qubits = {control, target};
  return i;
}

Instruction Instruction::cz(int a, int b) {
  Instruction i;
  i.kind = GateKind::Cz;
  i.qubits = {a, b};
  return i;
}

Instruction Instruction::swap(int a, int b) {
  Instruction i;
  i.kind = GateKind::Swap;
  i.qubits = {a, b};
  return i;
}

Instruction Instruction::controlled_unitary(CMatrix u, std::vector<int> targets,
                                            std::vector<int> controls) {
  Instruction i;
  i.kind = GateKind::ControlledUnitary;
  i.qubits = std::move(targets);
  i.controls = std::move(controls);
  i.matrix = std::move(u);
  return i;
}

Instruction Instruction::analog_block(CouplingGraphPtr graph, double g,
                                      double t, int sign) {
  Instruction i;
  i.kind = GateKind::AnalogBlock;
  i.analog = AnalogParams{std::move(graph), g, t, sign};
  return i;
}

Instruction Instruction::adjoint() const {
  Instruction out = *this;
  switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::Cnot:
    case GateKind::Cz:
    case GateKind::Swap:
      break;  // self-inverse
    case GateKind::V:
      out.kind = GateKind::Vdg;
      break;
    case GateKind::Vdg:
      out.kind = GateKind::V;
      break;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      out.angle = -angle;
      break;
    case GateKind::ControlledUnitary:
      out.matrix = matrix.adjoint();
      break;
    case GateKind::AnalogBlock:
      out.analog.sign = -analog.sign;
      break;
  }
  return out;
}

bool Instruction::equals(const Instruction& other) const {
  if (kind != other.kind || qubits != other.qubits ||
      controls != other.controls || angle != other.angle)
    return false;
  if (kind == GateKind::ControlledUnitary) {
    if (matrix.rows() != other.matrix.rows()) return false;
    if ((matrix - other.matrix).cwiseAbs().maxCoeff() != 0.0) return false;
  }
  if (kind == GateKind::AnalogBlock) {
    const auto& a = analog;
    const auto& b = other.analog;
    if (a.g != b.g || a.t != b.t || a.sign != b.sign) return false;
    if (!a.graph || !b.graph) return a.graph == b.graph;
    if (a.graph->name() != b.graph->name() ||
        a.graph->n_qubits() != b.graph->n_qubits())
      return false;
    const auto& ea = a.graph->edges();
    const auto& eb = b.graph->edges();
    if (ea.size() != eb.size()) return false;
    for (std::size_t k = 0; k < ea.size(); ++k)
      if (ea[k].a != eb[k].a || ea[k].b != eb[k].b || ea[k].g != eb[k].g)
        return false;
  }
  return true;
}

void validate_instruction(const Instruction& instr, const QubitLayout& layout) {
  const int n = layout.total();
  auto in_range = [&](int q) {
    require(q >= 0 && q < n, ErrorCode::Validation,
            std::string(gate_name(instr.kind)) + ": qubit index out of range");
  };
  auto distinct = [&](const std::vector<int>& qs) {
    auto s = qs;
    std::sort(s.begin(), s.end());
    require(std::adjacent_find(s.begin(), s.end()) == s.end(),
            ErrorCode::Validation,
            std::string(gate_name(instr.kind)) + ": repeated qubit operand");
  };

  switch (instr.kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::V:
    case GateKind::Vdg:
      require(instr.qubits.size() == 1, ErrorCode::Validation,
              "single-qubit gate needs exactly one operand");
      in_range(instr.qubits[0]);
      break;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      require(instr.qubits.size() == 1, ErrorCode::Validation,
              "rotation needs exactly one operand");
      in_range(instr.qubits[0]);
      require(std::isfinite(instr.angle), ErrorCode::Validation,
              "rotation angle must be finite");
      break;
    case GateKind::Cnot:
    case GateKind::Cz:
    case GateKind::Swap:
      require(instr.qubits.size() == 2, ErrorCode::Validation,
              "two-qubit gate needs exactly two operands");
      in_range(instr.qubits[0]);
      in_range(instr.qubits[1]);
      distinct(instr.qubits);
      break;
    case GateKind::ControlledUnitary: {
      require(!instr.qubits.empty(), ErrorCode::Validation,
              "controlled block needs at least one target");
      std::vector<int> all = instr.qubits;
      all.insert(all.end(), instr.controls.begin(), instr.controls.end());
      for (int q : all) in_range(q);
      distinct(all);
      const std::size_t dim = std::size_t{1} << instr.qubits.size();
      require(static_cast<std::size_t>(instr.matrix.rows()) == dim &&
                  static_cast<std::size_t>(instr.matrix.cols()) == dim,
              ErrorCode::Validation,
              "controlled block matrix dimension mismatch");
      if (dim <= 64)
        require(is_unitary(instr.matrix, 1e-10), ErrorCode::Validation,
                "controlled block matrix is not unitary");
      break;
    }
    case GateKind::AnalogBlock: {
      const auto& a = instr.analog;
      require(a.graph != nullptr, ErrorCode::Validation,
              "analog block needs a coupling graph");
      require(a.t >= 0, ErrorCode::Validation,
              "analog block duration must be >= 0");
      require(std::isfinite(a.t) && std::isfinite(a.g) && a.g > 0,
              ErrorCode::Validation, "analog block parameters invalid");
      require(a.sign == 1 || a.sign == -1, ErrorCode::Validation,
              "analog block sign must be +/-1");
      require(a.graph->n_qubits() <= n, ErrorCode::Validation,
              "analog coupling graph wider than circuit");
      break;
    }
  }
}

Circuit& Circuit::append(Instruction instr) {
  validate_instruction(instr, layout_);
  instructions_.push_back(std::move(instr));
  return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
  require(other.layout_ == layout_, ErrorCode::InvalidArgument,
          "cannot extend with a circuit of different layout");
  for (const auto& i : other.instructions_) instructions_.push_back(i);
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(layout_);
  for (auto it = instructions_.rbegin(); it != instructions_.rend(); ++it)
    out.instructions_.push_back(it->adjoint());
  return out;
}

ResourceCount count_resources(const Circuit& circuit, bool native_gates) {
  ResourceCount rc;
  for (const auto& i : circuit.instructions()) {
    switch (i.kind) {
      case GateKind::Cnot:
        rc.two_qubit_gates++;
        rc.cnot_count++;
        break;
      case GateKind::Cz:
        rc.two_qubit_gates++;
        break;
      case GateKind::Swap:
        rc.swap_count++;
        if (native_gates) {
          rc.two_qubit_gates += 3;
          rc.cnot_count += 3;
        } else {
          rc.two_qubit_gates++;
        }
        break;
      case GateKind::ControlledUnitary:
        if (i.qubits.size() + i.controls.size() == 2)
          rc.two_qubit_gates++;
        else
          rc.controlled_blocks++;
        break;
      case GateKind::AnalogBlock:
        rc.analog_blocks++;
        rc.total_analog_time += i.analog.t;
        break;
      default:
        rc.single_qubit_gates++;
        break;
    }
  }
  return rc;
}

CMatrix single_qubit_matrix(const Instruction& instr) {
  switch (instr.kind) {
    case GateKind::X: return mat_x();
    case GateKind::Y: return mat_y();
    case GateKind::Z: return mat_z();
    case GateKind::H: return mat_h();
    case GateKind::V: return mat_v();
    case GateKind::Vdg: return mat_vdg();
    case GateKind::Rx: return mat_rx(instr.angle);
    case GateKind::Ry: return mat_ry(instr.angle);
    case GateKind::Rz: return mat_rz(instr.angle);
    default:
      fail(ErrorCode::InvalidArgument, "not a single-qubit instruction");
  }
}

}  // namespace qhhl
