// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "circuit.hpp"
#include "coupling_graph.hpp"

namespace qhhl {

/// A named processor layout: coupling graph plus the role assignment it was
/// built for. "kite" is the co-designed target: register clique, connected
/// to both ancilla and memory, with no ancilla-memory edge.
struct Architecture {
  std::string name;
  QubitLayout layout;
  CouplingGraphPtr graph;
};

Architecture make_architecture(const std::string& name, int n_R, int n_M);
std::vector<std::string> architecture_names();

struct RoutedCircuit {
  Circuit circuit;
  long long swap_count = 0;
  // final_position[logical] = physical wire after routing.
  std::vector<int> final_position;
};

/// Greedy shortest-path router with dynamic placement: each non-adjacent
/// two-qubit gate walks its first operand along the lexicographically
/// smallest shortest path (d-1 SWAPs for distance d), leaving qubits
/// displaced.
RoutedCircuit route(const Circuit& circuit, const Architecture& arch);

struct CompareRow {
  std::string arch_name;
  bool failed = false;
  std::string message;
  long long swap_count = 0;
  long long depth_proxy = 0;
};

/// One row per architecture; depth counts SWAP as 3 two-qubit gates in a
/// greedy ASAP layering.
std::vector<CompareRow> compare(const Circuit& circuit,
                                const std::vector<Architecture>& archs);

/// ASAP-layered depth of a circuit, SWAP weighted as 3.
long long depth_proxy(const Circuit& circuit);

/// HHL workload for routing studies: QPE with each controlled power
/// decomposed into 2 CNOTs plus single-qubit rotations, the AQE block, and
/// the inverse QPE. Memory is fixed to one qubit.
Circuit build_routing_demo(int n_R, const CMatrix& a_scaled);

/// Permutation unitary moving logical qubit l to wire position[l].
CMatrix permutation_unitary(const std::vector<int>& position);

}  // namespace qhhl
