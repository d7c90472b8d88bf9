// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "aqe.hpp"
#include "daqc.hpp"
#include "simulate.hpp"
#include "test_support.hpp"

using namespace qhhl;
using namespace qhhl::testing;

namespace {

long long analog_count(const Schedule& s) {
  long long n = 0;
  for (const auto& item : s.items)
    if (std::holds_alternative<AnalogItem>(item)) ++n;
  return n;
}

CMatrix embed_cz(int a, int b, int n) {
  // diag with -1 where both bits set; literal construction.
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  const std::size_t ba = std::size_t{1} << (n - 1 - a);
  const std::size_t bb = std::size_t{1} << (n - 1 - b);
  for (std::size_t i = 0; i < dim; ++i)
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
        ((i & ba) && (i & bb)) ? -1.0 : 1.0;
  return m;
}

}  // namespace

TEST_CASE("two-qubit identity: cZ = e^{i pi/4} e^{i pi/4 ZZ} Rz(pi/2) Rz(pi/2)") {
  CMatrix zz = kron(mat_z(), mat_z());
  CMatrix lhs = std::exp(kI * (kPi / 4)) * expi_hermitian(zz, kPi / 4) *
                kron(oracle_rz(kPi / 2), oracle_rz(kPi / 2));
  CHECK((lhs - oracle_cz4()).norm() < 1e-13);
}

TEST_CASE("compile_cz on a single-edge graph composes to cZ") {
  QubitLayout layout{1, 1};
  auto graph = std::make_shared<CouplingGraph>(
      "custom", 2, std::vector<WeightedEdge>{{0, 1, 1.0}});
  Schedule s = compile_cz(0, 1, layout, graph);
  CMatrix u = circuit_unitary(schedule_to_circuit(s));
  CMatrix expected = kron(oracle_cz4(), CMatrix::Identity(2, 2));
  CHECK(phase_aligned_distance(u, expected) < 1e-10);
}

TEST_CASE("compile_cz on the star graph: unitary, echo width, block count") {
  for (int n_R : {2, 3}) {
    QubitLayout layout{n_R, 1};
    auto graph = make_coupling_graph("star", layout);
    for (int r = 1; r <= n_R; ++r) {
      Schedule s = compile_cz(0, r, layout, graph);
      CHECK(analog_count(s) == 2);
      int echo_layers = 0;
      for (const auto& item : s.items) {
        if (std::holds_alternative<AnalogItem>(item)) {
          CHECK(std::get<AnalogItem>(item).t ==
                doctest::Approx(kPi / 8).epsilon(1e-14));
        } else {
          const auto& layer = std::get<DigitalLayer>(item);
          if (layer.rotations.size() ==
                  static_cast<std::size_t>(n_R - 1) &&
              layer.rotations[0].axis == GateKind::Rx)
            ++echo_layers;
        }
      }
      CHECK(echo_layers == 2);  // each touching (1 + n_R) - 2 qubits
      CMatrix u = circuit_unitary(schedule_to_circuit(s));
      CMatrix expected = embed_cz(0, r, layout.total());
      CHECK(phase_aligned_distance(u, expected) < 1e-10);
    }
  }
}

TEST_CASE("compile_cz rejects couplings outside the pair") {
  QubitLayout layout{2, 1};  // line A-R1-R2-M
  auto graph = make_coupling_graph("line", layout);
  try {
    compile_cz(0, 1, layout, graph);  // edge (R2, M) is outside the pair
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResidualCoupling);
  }
}

TEST_CASE("compile_cz echoes cross-couplings on small line graphs") {
  // With n_R = 1 every line edge touches the pair, so the compile succeeds
  // and the memory coupling is echoed away.
  QubitLayout layout{1, 1};
  auto graph = make_coupling_graph("line", layout);
  Schedule s = compile_cz(0, 1, layout, graph);
  CMatrix u = circuit_unitary(schedule_to_circuit(s));
  CHECK(phase_aligned_distance(u, embed_cz(0, 1, 3)) < 1e-10);
}

TEST_CASE("sDAQC-compiled AQE matches the digital unitary") {
  for (int n_R : {1, 2, 3}) {
    auto synth = synthesize(n_R, MatrixFunctionSpec::inverse(n_R));
    auto graph = make_coupling_graph("star", synth.circuit.layout());
    for (bool merge : {false, true}) {
      Schedule s = compile_sdaqc(synth.circuit, graph, merge);
      CMatrix u = circuit_unitary(schedule_to_circuit(s));
      CMatrix target = circuit_unitary(synth.circuit);
      CHECK(phase_aligned_distance(u, target) < 1e-8);
    }
  }
}

TEST_CASE("sDAQC block count: 2 per cZ before merging") {
  for (int n_R : {2, 3}) {
    auto synth = synthesize(n_R, MatrixFunctionSpec::inverse(n_R));
    auto graph = make_coupling_graph("star", synth.circuit.layout());
    Schedule raw = compile_sdaqc(synth.circuit, graph, false);
    CHECK(analog_count(raw) == (1LL << (n_R + 1)));
    Schedule merged = compile_sdaqc(synth.circuit, graph, true);
    CHECK(analog_count(merged) <= analog_count(raw));
  }
}

TEST_CASE("single-qubit-only circuits compile to zero analog blocks") {
  Circuit c(QubitLayout{2, 1});
  c.append(Instruction::single(GateKind::H, 0));
  c.append(Instruction::rotation(GateKind::Rz, 1, 0.4));
  auto graph = make_coupling_graph("star", c.layout());
  Schedule s = compile_sdaqc(c, graph);
  CHECK(analog_count(s) == 0);
}

TEST_CASE("compile_sdaqc rejects unsupported instructions") {
  Circuit c(QubitLayout{1, 1});
  c.append(Instruction::swap(0, 1));
  auto graph = make_coupling_graph("star", c.layout());
  CHECK_THROWS_AS(compile_sdaqc(c, graph), Error);
}

TEST_CASE("merge_analog fuses adjacent blocks and floats Z layers") {
  QubitLayout layout{1, 1};
  auto graph = make_coupling_graph("star", layout);
  Schedule s{layout, graph, {}, std::nullopt};
  s.items.push_back(AnalogItem{0.3, +1});
  s.items.push_back(AnalogItem{0.2, +1});
  Schedule merged = merge_analog(s);
  REQUIRE(merged.items.size() == 1);
  CHECK(std::get<AnalogItem>(merged.items[0]).t == doctest::Approx(0.5));

  Schedule zmid{layout, graph, {}, std::nullopt};
  zmid.items.push_back(AnalogItem{0.3, +1});
  zmid.items.push_back(DigitalLayer{{{GateKind::Rz, 0, 0.7}}});
  zmid.items.push_back(AnalogItem{0.3, +1});
  Schedule zm = merge_analog(zmid);
  REQUIRE(zm.items.size() == 2);
  CHECK(std::holds_alternative<DigitalLayer>(zm.items[0]));
  CHECK(std::get<AnalogItem>(zm.items[1]).t == doctest::Approx(0.6));
  CHECK(phase_aligned_distance(circuit_unitary(schedule_to_circuit(zm)),
                               circuit_unitary(schedule_to_circuit(zmid))) <
        1e-10);

  Schedule xmid{layout, graph, {}, std::nullopt};
  xmid.items.push_back(AnalogItem{0.3, +1});
  xmid.items.push_back(DigitalLayer{{{GateKind::Rx, 0, kPi}}});
  xmid.items.push_back(AnalogItem{0.3, +1});
  Schedule xm = merge_analog(xmid);
  CHECK(xm.items.size() == 3);  // X does not commute with the coupling
}

TEST_CASE("merge_analog cancels opposite-sign neighbors") {
  QubitLayout layout{1, 1};
  auto graph = make_coupling_graph("star", layout);
  Schedule s{layout, graph, {}, std::nullopt};
  s.items.push_back(AnalogItem{0.4, +1});
  s.items.push_back(AnalogItem{0.4, -1});
  Schedule merged = merge_analog(s);
  CHECK(merged.items.empty());
}

TEST_CASE("merge_analog preserves the unitary on randomized schedules") {
  QubitLayout layout{2, 1};
  auto graph = make_coupling_graph("star", layout);
  for (std::uint64_t seed : {5, 6, 7}) {
    DeterministicRng rng(seed);
    Schedule s{layout, graph, {}, std::nullopt};
    for (int i = 0; i < 14; ++i) {
      double u = rng.uniform();
      if (u < 0.45) {
        s.items.push_back(AnalogItem{rng.uniform() * 0.5,
                                     rng.uniform() < 0.5 ? +1 : -1});
      } else {
        GateKind axis = u < 0.7 ? GateKind::Rz
                        : u < 0.85 ? GateKind::Rx
                                   : GateKind::Ry;
        int q = static_cast<int>(rng.uniform() * layout.total());
        s.items.push_back(
            DigitalLayer{{{axis, q, (rng.uniform() - 0.5) * 3}}});
      }
    }
    Schedule merged = merge_analog(s);
    CHECK(phase_aligned_distance(circuit_unitary(schedule_to_circuit(merged)),
                                 circuit_unitary(schedule_to_circuit(s))) <
          1e-10);
  }
}

TEST_CASE("bDAQC with no digital layers reproduces sDAQC exactly") {
  QubitLayout layout{2, 1};
  auto graph = make_coupling_graph("star", layout);
  Schedule s{layout, graph, {}, std::nullopt};
  s.items.push_back(AnalogItem{0.4, +1});
  s.items.push_back(AnalogItem{0.25, -1});
  auto banged = simulate_bdaqc(s, BangParams{0.01});
  CMatrix target = circuit_unitary(schedule_to_circuit(s));
  CHECK((banged.unitary - target).norm() < 1e-12);
  CHECK_FALSE(banged.overlap_warning);
}

TEST_CASE("bDAQC converges to the sDAQC unitary as the pulse shrinks") {
  for (int n_R : {1, 2}) {
    auto synth = synthesize(n_R, MatrixFunctionSpec::inverse(n_R));
    auto graph = make_coupling_graph("star", synth.circuit.layout());
    Schedule s = compile_sdaqc(synth.circuit, graph);
    CMatrix target = circuit_unitary(schedule_to_circuit(s));
    double prev = -1;
    for (double dt : {0.1 * kPi / 8, 0.05 * kPi / 8, 0.025 * kPi / 8,
                      0.0125 * kPi / 8}) {
      auto banged = simulate_bdaqc(s, BangParams{dt});
      double err = phase_aligned_distance(banged.unitary, target);
      if (prev > 0) CHECK(err <= 0.7 * prev);
      prev = err;
    }
  }
}

TEST_CASE("bDAQC flags pulses wider than their analog slack") {
  QubitLayout layout{1, 1};
  auto graph = make_coupling_graph("star", layout);
  Schedule s{layout, graph, {}, std::nullopt};
  s.items.push_back(DigitalLayer{{{GateKind::Rx, 0, 1.0}}});
  s.items.push_back(AnalogItem{0.01, +1});
  s.items.push_back(DigitalLayer{{{GateKind::Rx, 0, -1.0}}});
  auto banged = simulate_bdaqc(s, BangParams{0.5});
  CHECK(banged.overlap_warning);
}

TEST_CASE("resource_report counts and compares against the stated bounds") {
  Schedule empty{QubitLayout{1, 1}, nullptr, {}, std::nullopt};
  auto r0 = resource_report(empty);
  CHECK(r0.analog_blocks == 0);
  CHECK(r0.single_qubit_gates == 0);
  CHECK(r0.total_analog_time == 0.0);

  Schedule hand{QubitLayout{1, 1}, nullptr, {}, std::nullopt};
  hand.items.push_back(AnalogItem{0.1, +1});
  hand.items.push_back(DigitalLayer{{{GateKind::Rx, 0, 1.0},
                                     {GateKind::Rz, 1, 0.5}}});
  hand.items.push_back(AnalogItem{0.2, +1});
  hand.items.push_back(DigitalLayer{{{GateKind::Ry, 2, 0.3}}});
  hand.items.push_back(AnalogItem{0.3, -1});
  hand.items.push_back(DigitalLayer{{{GateKind::Rz, 0, 0.2}}});
  auto rh = resource_report(hand);
  CHECK(rh.analog_blocks == 3);
  CHECK(rh.single_qubit_gates == 4);
  CHECK(rh.total_analog_time == doctest::Approx(0.6));

  // AQE n_R = 1, merged: bounds are analog <= 2, single <= 5. The star has
  // no echo qubits here, so each cZ's two blocks fuse and the bound is met.
  auto synth = synthesize(1, MatrixFunctionSpec::inverse(1));
  auto graph = make_coupling_graph("star", synth.circuit.layout());
  Schedule s = compile_sdaqc(synth.circuit, graph, true);
  s.origin_n_R = 1;
  auto r = resource_report(s);
  CHECK(r.analog_bound == 2);
  CHECK(r.single_bound == 5);
  CHECK(r.analog_blocks == 2);
  CHECK(r.analog_within_bounds);

  // With echo layers (n_R = 2) the two blocks per cZ cannot fuse; the
  // report flags the exceeded bound instead of raising.
  auto synth2 = synthesize(2, MatrixFunctionSpec::inverse(2));
  auto graph2 = make_coupling_graph("star", synth2.circuit.layout());
  Schedule s2 = compile_sdaqc(synth2.circuit, graph2, true);
  s2.origin_n_R = 2;
  auto r2 = resource_report(s2);
  CHECK(r2.analog_bound == 4);
  CHECK(r2.analog_blocks == 8);
  CHECK_FALSE(r2.analog_within_bounds);
}
