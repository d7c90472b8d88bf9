// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace qhhl {

/// A scalar function f over [0,1) to be encoded into the ancilla amplitude:
/// |0>|p> -> (sqrt(1-f^2)|0> + f|1>)|p> with f evaluated at p/2^{n_R}.
struct MatrixFunctionSpec {
  std::function<double(double)> f;
  double eta = 1.0;          // bound constant for the admissibility check
  std::string description;
  bool zero_at_origin = false;  // p = 0 branch pinned to angle 0

  /// f(x) = C/x with C = 2^{-n_R} (so f(p/2^{n_R}) = 1/p), f(0) = 0.
  static MatrixFunctionSpec inverse(int n_R);
  /// f(x) = x/2.
  static MatrixFunctionSpec identity();
  /// f(x) = sqrt(x).
  static MatrixFunctionSpec sqrt();
  /// f(x) = 0.
  static MatrixFunctionSpec zero();

  /// Lookup by CLI name: inverse | identity | sqrt | zero.
  static MatrixFunctionSpec by_name(const std::string& name, int n_R);
  static std::vector<std::string> known_names();
};

/// Rotation targets phi(p) and the Gray-transform solution theta.
struct AngleTable {
  int n_R = 0;
  double C = 0.0;  // normalization constant for the inverse function, else 0
  std::vector<double> phi;
  std::vector<double> theta;
};

/// j-th binary reflected Gray codeword: j XOR (j >> 1).
unsigned gray(unsigned j);

/// phi(p) = 2 arcsin f(p/2^{n_R}); 0 for the pinned p = 0 branch.
double phi_angle(int p, const MatrixFunctionSpec& f, int n_R);

/// Sign matrix M_ij = (-1)^{bin(i-1) . g(j-1)} (1-indexed), satisfying
/// M^{-1} = M^T / 2^{n_R}.
Eigen::MatrixXd build_M(int n_R);

/// theta = M^T phi / 2^{n_R}, i.e. the solution of M theta = phi.
std::vector<double> solve_thetas(const std::vector<double>& phi, int n_R);

struct AqeSynthesis {
  Circuit circuit;
  AngleTable angles;
};

/// Emits V - (Rz, CNOT) x 2^{n_R} - Vdg on the ancilla, CNOT controls placed
/// by the Gray code. The circuit's register branches compose to
/// Vdg Rz(-phi(p)) V, whose |1> amplitude from |0> is -i f(p/2^{n_R}).
AqeSynthesis synthesize(int n_R, const MatrixFunctionSpec& f, int n_M = 1);

struct FConditionReport {
  bool satisfied = false;
  double worst_x = 0.0;
  double worst_value = 0.0;
  bool singular_denominator = false;  // f(x)^2 hit 1 on the grid
};

/// Evaluates |(df/dx)^2 (1 + 1/(1-f^2))| < eta^2 over a uniform grid on
/// [0,1), derivative by central finite differences of step 1/(10 grid).
FConditionReport check_f_condition(const MatrixFunctionSpec& f, int grid_points);

}  // namespace qhhl
