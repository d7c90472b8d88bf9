// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "codesign.hpp"
#include "hhl.hpp"
#include "simulate.hpp"
#include "test_support.hpp"

using namespace qhhl;
using namespace qhhl::testing;

namespace {

CMatrix scaled_worked_matrix() {
  return rescale(worked_instance().A).A_scaled;
}

bool has_edge(const Architecture& a, int x, int y) {
  return a.graph->has_edge(x, y);
}

}  // namespace

TEST_CASE("kite connectivity: clique + ancilla + memory, no A-M edge") {
  Architecture kite = make_architecture("kite", 3, 1);
  CHECK(kite.graph->edges().size() == 9);  // 3 + 3 + 3
  CHECK_FALSE(has_edge(kite, 0, kite.layout.memory_qubit(0)));
  CHECK(has_edge(kite, 0, 1));
  CHECK(has_edge(kite, 1, 2));
  CHECK(has_edge(kite, 2, kite.layout.memory_qubit(0)));
}

TEST_CASE("line and ring edge counts") {
  Architecture line = make_architecture("line", 3, 1);  // 5 qubits
  CHECK(line.graph->edges().size() == 4);
  Architecture ring = make_architecture("ring", 3, 1);
  CHECK(ring.graph->edges().size() == 5);
}

TEST_CASE("star couples the ancilla to every register qubit") {
  Architecture star = make_architecture("star", 3, 1);
  int ar_edges = 0;
  for (int r = 1; r <= 3; ++r)
    if (has_edge(star, 0, r)) ++ar_edges;
  CHECK(ar_edges == 3);
  CHECK(has_edge(star, 0, star.layout.memory_qubit(0)));
}

TEST_CASE("unknown architecture names are rejected with the catalog") {
  try {
    make_architecture("torus", 2, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("kite") != std::string::npos);
  }
}

TEST_CASE("routing a compatible circuit is the identity transformation") {
  Architecture kite = make_architecture("kite", 2, 1);
  Circuit c(kite.layout);
  c.append(Instruction::cnot(1, 0));
  c.append(Instruction::cz(1, 2));
  c.append(Instruction::single(GateKind::H, 3));
  RoutedCircuit routed = route(c, kite);
  CHECK(routed.swap_count == 0);
  REQUIRE(routed.circuit.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    CHECK(routed.circuit.instructions()[i].equals(c.instructions()[i]));
  for (int q = 0; q < kite.layout.total(); ++q)
    CHECK(routed.final_position[q] == q);
}

TEST_CASE("routing inserts d-1 SWAPs along the lex-smallest shortest path") {
  Architecture line = make_architecture("line", 2, 1);  // A-R1-R2-M path
  Circuit c(line.layout);
  c.append(Instruction::cnot(0, 3));  // distance 3
  RoutedCircuit routed = route(c, line);
  CHECK(routed.swap_count == 2);
  // Qubit 0 walked to wire 2; displaced occupants shifted down.
  CHECK(routed.final_position[0] == 2);
  CHECK(routed.final_position[1] == 0);
  CHECK(routed.final_position[2] == 1);
  CHECK(routed.final_position[3] == 3);
}

TEST_CASE("routed circuits are permutation-equivalent to the original") {
  auto a = scaled_worked_matrix();
  for (int n_R : {2, 3}) {
    Circuit demo = build_routing_demo(n_R, a);
    for (const std::string& name : {"line", "ring", "star"}) {
      Architecture arch = make_architecture(name, n_R, 1);
      RoutedCircuit routed = route(demo, arch);
      // Every routed two-qubit instruction must sit on an edge.
      for (const auto& instr : routed.circuit.instructions()) {
        if (instr.kind == GateKind::Cnot || instr.kind == GateKind::Cz ||
            instr.kind == GateKind::Swap)
          CHECK(arch.graph->has_edge(instr.qubits[0], instr.qubits[1]));
        if (instr.kind == GateKind::ControlledUnitary)
          CHECK(arch.graph->has_edge(instr.controls[0], instr.qubits[0]));
      }
      CMatrix u_routed = circuit_unitary(routed.circuit);
      CMatrix u_orig = circuit_unitary(demo);
      CMatrix perm = permutation_unitary(routed.final_position);
      CHECK((perm.adjoint() * u_routed - u_orig).norm() < 1e-9);
    }
  }
}

TEST_CASE("kite routes the HHL workload with zero SWAPs") {
  auto a = scaled_worked_matrix();
  for (int n_R : {2, 3, 4}) {
    Circuit demo = build_routing_demo(n_R, a);
    Architecture kite = make_architecture("kite", n_R, 1);
    RoutedCircuit routed = route(demo, kite);
    CHECK(routed.swap_count == 0);
  }
}

TEST_CASE("line architectures pay SWAPs that kite avoids") {
  auto a = scaled_worked_matrix();
  for (int n_R : {3, 4}) {
    Circuit demo = build_routing_demo(n_R, a);
    RoutedCircuit on_line = route(demo, make_architecture("line", n_R, 1));
    CHECK(on_line.swap_count >= 1);
  }
}

TEST_CASE("the routing demo matches the explicit-block HHL circuit") {
  // ABC-decomposed controlled powers against the explicit controlled-U
  // pipeline, up to global phase.
  auto a = scaled_worked_matrix();
  for (int n_R : {2, 3}) {
    CMatrix demo = circuit_unitary(build_routing_demo(n_R, a));
    CMatrix full = circuit_unitary(
        build_hhl_circuit(n_R, a, 1, MatrixFunctionSpec::inverse(n_R)));
    CHECK(phase_aligned_distance(demo, full) < 1e-9);
  }
}

TEST_CASE("compare emits one row per architecture with the SWAP ordering") {
  auto a = scaled_worked_matrix();
  Circuit demo = build_routing_demo(3, a);
  std::vector<Architecture> archs{make_architecture("complete", 3, 1),
                                  make_architecture("kite", 3, 1),
                                  make_architecture("line", 3, 1)};
  auto rows = compare(demo, archs);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].arch_name == "complete");
  CHECK_FALSE(rows[0].failed);
  CHECK(rows[0].swap_count == 0);
  CHECK(rows[1].swap_count == 0);  // kite
  CHECK(rows[2].swap_count >= 1);  // line
  CHECK(rows[0].swap_count <= rows[1].swap_count);
  CHECK(rows[1].swap_count <= rows[2].swap_count);
  CHECK(rows[2].depth_proxy >= rows[1].depth_proxy);
}

TEST_CASE("single-qubit circuits route everywhere with zero SWAPs") {
  Circuit c(QubitLayout{2, 1});
  c.append(Instruction::single(GateKind::H, 0));
  c.append(Instruction::rotation(GateKind::Rz, 2, 0.4));
  for (const auto& name : architecture_names()) {
    auto rows = compare(c, {make_architecture(name, 2, 1)});
    CHECK_FALSE(rows[0].failed);
    CHECK(rows[0].swap_count == 0);
  }
}

TEST_CASE("depth proxy weighs SWAP as three two-qubit gates") {
  Circuit c(QubitLayout{1, 1});
  c.append(Instruction::swap(0, 1));
  CHECK(depth_proxy(c) == 3);
  c.append(Instruction::cnot(0, 1));
  CHECK(depth_proxy(c) == 4);
}
