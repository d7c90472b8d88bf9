// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "circuit.hpp"
#include "coupling_graph.hpp"

namespace qhhl {

struct LayerRotation {
  GateKind axis;  // Rx / Ry / Rz
  int qubit;
  double angle;
};

/// Simultaneous single-qubit rotations on disjoint operands.
struct DigitalLayer {
  std::vector<LayerRotation> rotations;
};

/// Evolution exp(i * sign * t * H_I) under the schedule's coupling graph.
struct AnalogItem {
  double t = 0.0;
  int sign = +1;
};

using ScheduleItem = std::variant<DigitalLayer, AnalogItem>;

struct Schedule {
  QubitLayout layout;
  CouplingGraphPtr graph;
  std::vector<ScheduleItem> items;
  std::optional<int> origin_n_R;  // set when compiled from an AQE circuit
};

struct BangParams {
  double delta_t = 0.0;  // single-qubit pulse duration, > 0
};

/// Named analog resource graphs over a layout. "star" couples the ancilla
/// to every register qubit (the connectivity the two-block cZ identity is
/// exact on); "kite" and "line" add register-register / chain couplings.
CouplingGraphPtr make_coupling_graph(const std::string& name,
                                     const QubitLayout& layout);

/// Two-analog-block lowering of cZ(a, b):
///   [X echo layer] analog(pi/8) [X echo layer] analog(pi/8) [Rz(pi/2) a,b]
/// The echo layer covers every coupled qubit outside the pair. Rejects
/// graphs with couplings between two non-pair qubits (no echo cancels those).
Schedule compile_cz(int a, int b, const QubitLayout& layout,
                    const CouplingGraphPtr& graph);

/// Lowers a digital circuit (single-qubit gates, CNOT, cZ) to alternating
/// rotation layers and analog blocks; CNOT is rewritten through cZ.
Schedule compile_sdaqc(const Circuit& circuit, const CouplingGraphPtr& graph,
                       bool merge = true);

/// Fuses adjacent analog items and floats Z-generator layers left through
/// analog blocks (the only provably safe commutation); unitary preserved.
Schedule merge_analog(const Schedule& schedule);

struct BdaqcResult {
  CMatrix unitary;
  bool overlap_warning = false;  // a pulse window exceeded its analog slack
};

/// Banged simulation: every digital layer runs for delta_t on top of the
/// always-on interaction, with adjacent analog blocks shortened by
/// delta_t/2 per side so total interaction time is preserved.
BdaqcResult simulate_bdaqc(const Schedule& schedule, const BangParams& params);

struct DaqcResourceReport {
  long long analog_blocks = 0;
  double total_analog_time = 0.0;
  long long single_qubit_gates = 0;
  std::optional<int> origin_n_R;
  long long analog_bound = 0;  // 2^{n_R}
  long long single_bound = 0;  // (n_R + 1) 2^{n_R} + 1
  bool analog_within_bounds = false;
  bool single_within_bounds = false;
};

/// Counts plus bound comparison; bound violations are reported, never raised.
DaqcResourceReport resource_report(const Schedule& schedule);

/// Schedule rendered back into the shared IR (for unitary oracles and the
/// text emitter).
Circuit schedule_to_circuit(const Schedule& schedule);

}  // namespace qhhl
