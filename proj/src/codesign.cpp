// SPDX-License-Identifier: Apache-2.0
#include "codesign.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "aqe.hpp"
#include "hhl.hpp"

namespace qhhl {

Architecture make_architecture(const std::string& name, int n_R, int n_M) {
  QubitLayout layout{n_R, n_M};
  layout.validate();
  const int n = layout.total();
  std::vector<WeightedEdge> edges;
  auto add = [&](int a, int b) { edges.push_back({a, b, 1.0}); };
  if (name == "kite") {
    for (int i = 1; i <= n_R; ++i)
      for (int j = i + 1; j <= n_R; ++j) add(i, j);
    for (int r = 1; r <= n_R; ++r) add(QubitLayout::ancilla, r);
    for (int r = 1; r <= n_R; ++r)
      for (int m = 0; m < n_M; ++m) add(r, layout.memory_qubit(m));
  } else if (name == "line") {
    for (int q = 0; q + 1 < n; ++q) add(q, q + 1);
  } else if (name == "ring") {
    for (int q = 0; q + 1 < n; ++q) add(q, q + 1);
    if (n > 2) add(n - 1, 0);
  } else if (name == "star") {
    for (int q = 1; q < n; ++q) add(QubitLayout::ancilla, q);
  } else if (name == "complete") {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) add(a, b);
  } else {
    std::string known;
    for (const auto& k : architecture_names())
      known += (known.empty() ? "" : ", ") + k;
    fail(ErrorCode::InvalidArgument,
         "unknown architecture '" + name + "' (supported: " + known + ")");
  }
  return Architecture{name, layout,
                      std::make_shared<CouplingGraph>(name, n, std::move(edges))};
}

std::vector<std::string> architecture_names() {
  return {"kite", "line", "ring", "star", "complete"};
}

namespace {

// Lexicographically smallest shortest path from s to t: BFS distances from
// t, then greedy descent picking the smallest-index neighbor.
std::vector<int> lex_shortest_path(const std::vector<std::vector<int>>& adj,
                                   int s, int t) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dist(n, -1);
  std::deque<int> queue{t};
  dist[t] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  require(dist[s] >= 0, ErrorCode::Validation,
          "architecture graph is disconnected for the requested pair");
  std::vector<int> path{s};
  int cur = s;
  while (cur != t) {
    for (int u : adj[cur])  // adjacency lists are sorted ascending
      if (dist[u] == dist[cur] - 1) {
        cur = u;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

std::pair<int, int> two_qubit_operands(const Instruction& instr) {
  if (instr.kind == GateKind::ControlledUnitary) {
    require(instr.qubits.size() == 1 && instr.controls.size() == 1,
            ErrorCode::UnsupportedInstance,
            "router requires controlled blocks pre-decomposed to two qubits");
    return {instr.controls[0], instr.qubits[0]};
  }
  return {instr.qubits[0], instr.qubits[1]};
}

}  // namespace

RoutedCircuit route(const Circuit& circuit, const Architecture& arch) {
  require(arch.layout.total() == circuit.n_qubits(), ErrorCode::InvalidArgument,
          "architecture size does not match circuit");
  const auto adj = arch.graph->adjacency();
  const int n = circuit.n_qubits();

  std::vector<int> position(n);  // logical -> physical
  std::vector<int> occupant(n);  // physical -> logical
  for (int q = 0; q < n; ++q) position[q] = occupant[q] = q;

  RoutedCircuit out{Circuit(circuit.layout()), 0, {}};
  auto emit_swap = [&](int pa, int pb) {
    out.circuit.append(Instruction::swap(pa, pb));
    out.swap_count++;
    int la = occupant[pa], lb = occupant[pb];
    std::swap(occupant[pa], occupant[pb]);
    position[la] = pb;
    position[lb] = pa;
  };

  for (const auto& instr : circuit.instructions()) {
    if (instr.kind == GateKind::AnalogBlock)
      fail(ErrorCode::UnsupportedInstance,
           "analog blocks are not routable instructions");
    if (is_single_qubit(instr.kind)) {
      Instruction mapped = instr;
      mapped.qubits = {position[instr.qubits[0]]};
      out.circuit.append(std::move(mapped));
      continue;
    }
    auto [l1, l2] = two_qubit_operands(instr);
    int p1 = position[l1], p2 = position[l2];
    if (!arch.graph->has_edge(p1, p2)) {
      auto path = lex_shortest_path(adj, p1, p2);
      for (std::size_t k = 0; k + 2 < path.size(); ++k)
        emit_swap(path[k], path[k + 1]);
      p1 = position[l1];
      p2 = position[l2];
    }
    Instruction mapped = instr;
    if (instr.kind == GateKind::ControlledUnitary) {
      mapped.controls = {p1};
      mapped.qubits = {p2};
    } else {
      mapped.qubits = {p1, p2};
    }
    out.circuit.append(std::move(mapped));
  }
  out.final_position = position;
  return out;
}

long long depth_proxy(const Circuit& circuit) {
  std::vector<long long> busy(circuit.n_qubits(), 0);
  long long depth = 0;
  for (const auto& instr : circuit.instructions()) {
    std::vector<int> ops = instr.qubits;
    ops.insert(ops.end(), instr.controls.begin(), instr.controls.end());
    long long weight = instr.kind == GateKind::Swap ? 3 : 1;
    long long start = 0;
    for (int q : ops) start = std::max(start, busy[q]);
    for (int q : ops) busy[q] = start + weight;
    depth = std::max(depth, start + weight);
  }
  return depth;
}

std::vector<CompareRow> compare(const Circuit& circuit,
                                const std::vector<Architecture>& archs) {
  std::vector<CompareRow> rows;
  for (const auto& arch : archs) {
    CompareRow row;
    row.arch_name = arch.name;
    try {
      RoutedCircuit routed = route(circuit, arch);
      row.swap_count = routed.swap_count;
      row.depth_proxy = qhhl::depth_proxy(routed.circuit);
    } catch (const Error& e) {
      row.failed = true;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Controlled-U for a 2x2 unitary via the ABC construction:
//   C-U = diag(1, e^{i alpha})_c . A X_c B X_c C,
// emitted as rotations plus 2 CNOTs (the control phase lands as an Rz,
// shifting only the global phase).
void append_controlled_1q(Circuit& c, const CMatrix& u, int control,
                          int target) {
  EulerZYZ e = euler_zyz(u);
  auto rz = [&](int q, double a) {
    if (a != 0.0) c.append(Instruction::rotation(GateKind::Rz, q, a));
  };
  auto ry = [&](int q, double a) {
    if (a != 0.0) c.append(Instruction::rotation(GateKind::Ry, q, a));
  };
  // C = Rz((delta-beta)/2)
  rz(target, (e.delta - e.beta) / 2);
  c.append(Instruction::cnot(control, target));
  // B = Ry(-gamma/2) Rz(-(delta+beta)/2)
  rz(target, -(e.delta + e.beta) / 2);
  ry(target, -e.gamma / 2);
  c.append(Instruction::cnot(control, target));
  // A = Rz(beta) Ry(gamma/2)
  ry(target, e.gamma / 2);
  rz(target, e.beta);
  rz(control, e.alpha);  // diag(1, e^{i alpha}) up to global phase
}

}  // namespace

Circuit build_routing_demo(int n_R, const CMatrix& a_scaled) {
  require(a_scaled.rows() == 2 && a_scaled.cols() == 2,
          ErrorCode::UnsupportedInstance,
          "routing demo fixes the memory to one qubit (2x2 matrix)");
  QubitLayout layout{n_R, 1};
  Circuit qpe(layout);
  for (int q = 1; q <= n_R; ++q)
    qpe.append(Instruction::single(GateKind::H, layout.register_qubit(q)));
  const int mem = layout.memory_qubit(0);
  for (int r = 1; r <= n_R; ++r) {
    CMatrix u = expi_hermitian(
        a_scaled, 2.0 * std::numbers::pi * std::ldexp(1.0, n_R - r));
    append_controlled_1q(qpe, u, layout.register_qubit(r), mem);
  }
  qpe.extend(build_qft(layout).inverse());

  Circuit full = qpe;
  full.extend(synthesize(n_R, MatrixFunctionSpec::inverse(n_R), 1).circuit);
  full.extend(qpe.inverse());
  return full;
}

CMatrix permutation_unitary(const std::vector<int>& position) {
  const int n = static_cast<int>(position.size());
  const std::size_t dim = std::size_t{1} << n;
  CMatrix p = CMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int l = 0; l < n; ++l)
      if (x & (std::size_t{1} << (n - 1 - l)))
        y |= std::size_t{1} << (n - 1 - position[l]);
    p(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return p;
}

}  // namespace qhhl
