// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "types.hpp"

namespace qhhl {

struct WeightedEdge {
  int a;
  int b;
  double g;
};

/// Qubit interaction graph. Doubles as the analog-block resource (the
/// induced Ising Hamiltonian H = sum g_ij Z_i Z_j) and as a routing target.
class CouplingGraph {
 public:
  CouplingGraph(std::string name, int n_qubits, std::vector<WeightedEdge> edges);

  const std::string& name() const { return name_; }
  int n_qubits() const { return n_qubits_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  bool homogeneous() const;
  bool has_edge(int a, int b) const;
  double edge_weight(int a, int b) const;

  /// Qubits that carry at least one edge, ascending.
  std::vector<int> active_qubits() const;

  std::vector<std::vector<int>> adjacency() const;

  /// Diagonal of sum g_ij Z_i Z_j over an n_total-qubit register (qubit 0 =
  /// most significant index bit). n_total >= n_qubits().
  std::vector<double> ising_diagonal(int n_total) const;

 private:
  std::string name_;
  int n_qubits_;
  std::vector<WeightedEdge> edges_;
};

using CouplingGraphPtr = std::shared_ptr<const CouplingGraph>;

}  // namespace qhhl
