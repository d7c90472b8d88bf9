// SPDX-License-Identifier: Apache-2.0
#include "coupling_graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qhhl {

CouplingGraph::CouplingGraph(std::string name, int n_qubits,
                             std::vector<WeightedEdge> edges)
    : name_(std::move(name)), n_qubits_(n_qubits), edges_(std::move(edges)) {
  require(n_qubits_ >= 1, ErrorCode::InvalidArgument,
          "coupling graph needs at least one qubit");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges_) {
    require(e.a != e.b, ErrorCode::Validation, "self-edge in coupling graph");
    require(e.a >= 0 && e.a < n_qubits_ && e.b >= 0 && e.b < n_qubits_,
            ErrorCode::Validation, "coupling edge endpoint out of range");
    require(e.g > 0, ErrorCode::Validation,
            "coupling strengths must be positive");
    if (e.a > e.b) std::swap(e.a, e.b);
    require(seen.insert({e.a, e.b}).second, ErrorCode::Validation,
            "duplicate edge in coupling graph");
  }
  std::sort(edges_.begin(), edges_.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
}

bool CouplingGraph::homogeneous() const {
  for (const auto& e : edges_)
    if (std::abs(e.g - edges_.front().g) > 1e-15) return false;
  return true;
}

bool CouplingGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_)
    if (e.a == a && e.b == b) return true;
  return false;
}

double CouplingGraph::edge_weight(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_)
    if (e.a == a && e.b == b) return e.g;
  fail(ErrorCode::InvalidArgument, "no such edge in coupling graph");
}

std::vector<int> CouplingGraph::active_qubits() const {
  std::set<int> s;
  for (const auto& e : edges_) {
    s.insert(e.a);
    s.insert(e.b);
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<int>> CouplingGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_qubits_);
  for (const auto& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

std::vector<double> CouplingGraph::ising_diagonal(int n_total) const {
  require(n_total >= n_qubits_, ErrorCode::InvalidArgument,
          "ising_diagonal: register narrower than graph");
  const std::size_t dim = std::size_t{1} << n_total;
  std::vector<double> diag(dim, 0.0);
  for (const auto& e : edges_) {
    const std::size_t ba = std::size_t{1} << (n_total - 1 - e.a);
    const std::size_t bb = std::size_t{1} << (n_total - 1 - e.b);
    for (std::size_t i = 0; i < dim; ++i) {
      double za = (i & ba) ? -1.0 : 1.0;
      double zb = (i & bb) ? -1.0 : 1.0;
      diag[i] += e.g * za * zb;
    }
  }
  return diag;
}

}  // namespace qhhl
