// SPDX-License-Identifier: Apache-2.0
#include "daqc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "simulate.hpp"

namespace qhhl {

namespace {
constexpr double kPi = std::numbers::pi;
}

CouplingGraphPtr make_coupling_graph(const std::string& name,
                                     const QubitLayout& layout) {
  layout.validate();
  const int n = layout.total();
  std::vector<WeightedEdge> edges;
  auto add = [&](int a, int b) { edges.push_back({a, b, 1.0}); };
  if (name == "star") {
    for (int r = 1; r <= layout.n_R; ++r) add(QubitLayout::ancilla, r);
  } else if (name == "kite") {
    for (int i = 1; i <= layout.n_R; ++i)
      for (int j = i + 1; j <= layout.n_R; ++j) add(i, j);
    for (int r = 1; r <= layout.n_R; ++r) add(QubitLayout::ancilla, r);
    for (int r = 1; r <= layout.n_R; ++r)
      for (int m = 0; m < layout.n_M; ++m) add(r, layout.memory_qubit(m));
  } else if (name == "line") {
    for (int q = 0; q + 1 < n; ++q) add(q, q + 1);
  } else if (name == "ring") {
    for (int q = 0; q + 1 < n; ++q) add(q, q + 1);
    if (n > 2) add(n - 1, 0);
  } else if (name == "complete") {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) add(a, b);
  } else {
    fail(ErrorCode::InvalidArgument,
         "unknown coupling graph '" + name +
             "' (supported: star, kite, line, ring, complete)");
  }
  return std::make_shared<CouplingGraph>(name, n, std::move(edges));
}

namespace {

// ZYZ-lowered rotation list for one single-qubit gate, circuit order.
std::vector<LayerRotation> lower_single_qubit(const Instruction& instr) {
  std::vector<LayerRotation> out;
  const int q = instr.qubits[0];
  if (is_rotation(instr.kind)) {
    if (instr.angle != 0.0) out.push_back({instr.kind, q, instr.angle});
    return out;
  }
  EulerZYZ e = euler_zyz(single_qubit_matrix(instr));
  if (e.delta != 0.0) out.push_back({GateKind::Rz, q, e.delta});
  if (e.gamma != 0.0) out.push_back({GateKind::Ry, q, e.gamma});
  if (e.beta != 0.0) out.push_back({GateKind::Rz, q, e.beta});
  return out;
}

bool layer_is_z_only(const DigitalLayer& layer) {
  return std::all_of(layer.rotations.begin(), layer.rotations.end(),
                     [](const LayerRotation& r) { return r.axis == GateKind::Rz; });
}

void check_cz_preconditions(int a, int b, const QubitLayout& layout,
                            const CouplingGraphPtr& graph) {
  require(graph != nullptr, ErrorCode::InvalidArgument,
          "compile_cz needs a coupling graph");
  require(graph->n_qubits() <= layout.total(), ErrorCode::Validation,
          "coupling graph wider than layout");
  require(graph->homogeneous(), ErrorCode::UnsupportedInstance,
          "compile_cz requires a homogeneous coupling graph");
  require(graph->has_edge(a, b), ErrorCode::ResidualCoupling,
          "coupling graph lacks the edge for cZ(" + std::to_string(a) + "," +
              std::to_string(b) + ")");
  for (const auto& e : graph->edges()) {
    bool a_in = (e.a == a || e.a == b);
    bool b_in = (e.b == a || e.b == b);
    require(a_in || b_in, ErrorCode::ResidualCoupling,
            "residual coupling (" + std::to_string(e.a) + "," +
                std::to_string(e.b) +
                ") between non-pair qubits; the two-block cZ identity "
                "would miscompile");
  }
}

// Appends the 5-item cZ lowering to `items`.
void emit_cz(int a, int b, const QubitLayout& layout,
             const CouplingGraphPtr& graph, std::vector<ScheduleItem>& items) {
  check_cz_preconditions(a, b, layout, graph);
  const double w = graph->edges().front().g;
  const double block = (kPi / 8.0) / w;

  DigitalLayer echo;
  for (int q : graph->active_qubits())
    if (q != a && q != b) echo.rotations.push_back({GateKind::Rx, q, kPi});

  if (!echo.rotations.empty()) items.push_back(echo);
  items.push_back(AnalogItem{block, +1});
  if (!echo.rotations.empty()) items.push_back(echo);
  items.push_back(AnalogItem{block, +1});
  DigitalLayer locals;
  locals.rotations.push_back({GateKind::Rz, a, kPi / 2});
  locals.rotations.push_back({GateKind::Rz, b, kPi / 2});
  items.push_back(locals);
}

}  // namespace

Schedule compile_cz(int a, int b, const QubitLayout& layout,
                    const CouplingGraphPtr& graph) {
  layout.validate();
  require(a != b && a >= 0 && b >= 0 && a < layout.total() &&
              b < layout.total(),
          ErrorCode::InvalidArgument, "bad cZ pair");
  Schedule s{layout, graph, {}, std::nullopt};
  emit_cz(a, b, layout, graph, s.items);
  return s;
}

Schedule compile_sdaqc(const Circuit& circuit, const CouplingGraphPtr& graph,
                       bool merge) {
  Schedule s{circuit.layout(), graph, {}, std::nullopt};
  for (const auto& instr : circuit.instructions()) {
    if (is_single_qubit(instr.kind)) {
      for (const auto& r : lower_single_qubit(instr))
        s.items.push_back(DigitalLayer{{r}});
    } else if (instr.kind == GateKind::Cz) {
      emit_cz(instr.qubits[0], instr.qubits[1], s.layout, graph, s.items);
    } else if (instr.kind == GateKind::Cnot) {
      // CNOT = (I x H) cZ (I x H) on the target.
      Instruction h = Instruction::single(GateKind::H, instr.qubits[1]);
      for (const auto& r : lower_single_qubit(h))
        s.items.push_back(DigitalLayer{{r}});
      emit_cz(instr.qubits[0], instr.qubits[1], s.layout, graph, s.items);
      for (const auto& r : lower_single_qubit(h))
        s.items.push_back(DigitalLayer{{r}});
    } else {
      fail(ErrorCode::UnsupportedInstance,
           std::string("compile_sdaqc cannot lower instruction kind ") +
               gate_name(instr.kind));
    }
  }
  return merge ? merge_analog(s) : s;
}

Schedule merge_analog(const Schedule& schedule) {
  Schedule out = schedule;
  auto& items = out.items;
  bool changed = true;
  while (changed) {
    changed = false;
    // Float Z-only layers left through analog items.
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (std::holds_alternative<AnalogItem>(items[i]) &&
          std::holds_alternative<DigitalLayer>(items[i + 1]) &&
          layer_is_z_only(std::get<DigitalLayer>(items[i + 1]))) {
        std::swap(items[i], items[i + 1]);
        changed = true;
      }
    }
    // Fuse adjacent analog items (signed durations add).
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (std::holds_alternative<AnalogItem>(items[i]) &&
          std::holds_alternative<AnalogItem>(items[i + 1])) {
        const auto& x = std::get<AnalogItem>(items[i]);
        const auto& y = std::get<AnalogItem>(items[i + 1]);
        double net = x.sign * x.t + y.sign * y.t;
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(i),
                    items.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        if (std::abs(net) > 0.0)
          items.insert(items.begin() + static_cast<std::ptrdiff_t>(i),
                       AnalogItem{std::abs(net), net > 0 ? +1 : -1});
        changed = true;
        break;
      }
    }
  }
  return out;
}

namespace {

CMatrix pauli_on_qubit(GateKind axis, int qubit, int n) {
  CMatrix p;
  switch (axis) {
    case GateKind::Rx: p = mat_x(); break;
    case GateKind::Ry: p = mat_y(); break;
    case GateKind::Rz: p = mat_z(); break;
    default: fail(ErrorCode::InvalidArgument, "not a rotation axis");
  }
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
  CMatrix out = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t r0 = i & ~bit;
    const std::size_t r1 = i | bit;
    const std::size_t col = (i & bit) ? 1 : 0;
    out(static_cast<Eigen::Index>(r0), static_cast<Eigen::Index>(i)) +=
        p(0, static_cast<Eigen::Index>(col));
    out(static_cast<Eigen::Index>(r1), static_cast<Eigen::Index>(i)) +=
        p(1, static_cast<Eigen::Index>(col));
  }
  return out;
}

}  // namespace

BdaqcResult simulate_bdaqc(const Schedule& schedule, const BangParams& params) {
  require(params.delta_t > 0, ErrorCode::InvalidArgument,
          "delta_t must be > 0");
  const int n = schedule.layout.total();
  require(n <= unitary_oracle_limit(), ErrorCode::ResourceLimit,
          "schedule wider than the unitary oracle limit");
  const std::size_t dim = std::size_t{1} << n;
  require(schedule.graph != nullptr, ErrorCode::InvalidArgument,
          "schedule has no coupling graph");

  const auto diag = schedule.graph->ising_diagonal(n);
  CMatrix h_int = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    h_int(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];

  const auto& items = schedule.items;
  auto is_digital = [&](std::size_t k) {
    return k < items.size() && std::holds_alternative<DigitalLayer>(items[k]);
  };

  BdaqcResult result;
  result.unitary = CMatrix::Identity(dim, dim);
  const double dt = params.delta_t;

  for (std::size_t k = 0; k < items.size(); ++k) {
    if (std::holds_alternative<AnalogItem>(items[k])) {
      const auto& a = std::get<AnalogItem>(items[k]);
      double t = a.t;
      if (k > 0 && is_digital(k - 1)) t -= dt / 2;
      if (is_digital(k + 1)) t -= dt / 2;
      if (t < 0) {
        result.overlap_warning = true;
        t = 0;
      }
      CMatrix u = CMatrix::Zero(dim, dim);
      for (std::size_t i = 0; i < dim; ++i)
        u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            std::exp(kI * (a.sign * t * diag[i]));
      result.unitary = u * result.unitary;
    } else {
      const auto& layer = std::get<DigitalLayer>(items[k]);
      // Pulse amplitude fixed so the window reproduces the rotation exactly
      // when the interaction vanishes: exp(i dt (-theta/dt) P/2) = Rp(theta).
      CMatrix h_bang = h_int;
      for (const auto& r : layer.rotations)
        h_bang -= (r.angle / dt) * 0.5 * pauli_on_qubit(r.axis, r.qubit, n);
      result.unitary = expi_hermitian(h_bang, dt) * result.unitary;
    }
  }
  return result;
}

DaqcResourceReport resource_report(const Schedule& schedule) {
  DaqcResourceReport r;
  for (const auto& item : schedule.items) {
    if (std::holds_alternative<AnalogItem>(item)) {
      r.analog_blocks++;
      r.total_analog_time += std::get<AnalogItem>(item).t;
    } else {
      r.single_qubit_gates +=
          static_cast<long long>(std::get<DigitalLayer>(item).rotations.size());
    }
  }
  r.origin_n_R = schedule.origin_n_R;
  if (r.origin_n_R) {
    const long long pow2 = 1LL << *r.origin_n_R;
    r.analog_bound = pow2;
    r.single_bound = (*r.origin_n_R + 1) * pow2 + 1;
    r.analog_within_bounds = r.analog_blocks <= r.analog_bound;
    r.single_within_bounds = r.single_qubit_gates <= r.single_bound;
  }
  return r;
}

Circuit schedule_to_circuit(const Schedule& schedule) {
  Circuit c(schedule.layout);
  for (const auto& item : schedule.items) {
    if (std::holds_alternative<AnalogItem>(item)) {
      const auto& a = std::get<AnalogItem>(item);
      c.append(Instruction::analog_block(schedule.graph, 1.0, a.t, a.sign));
    } else {
      for (const auto& r : std::get<DigitalLayer>(item).rotations)
        c.append(Instruction::rotation(r.axis, r.qubit, r.angle));
    }
  }
  return c;
}

}  // namespace qhhl
