// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqe.hpp"
#include "circuit.hpp"
#include "state_vector.hpp"

namespace qhhl {

/// A x = b with Hermitian A of dimension 2^{n_M}.
struct ProblemInstance {
  CMatrix A;
  CVector b;

  int n_M() const;
  void validate() const;
};

struct HHLConfig {
  int n_R = 2;
  double t0 = 0.0;       // <= 0: choose automatically (lambda_max -> 1/2)
  long long shots = 0;   // 0 = exact expectations
  std::uint64_t seed = 0;
};

struct SolutionReport {
  CVector solution;  // normalized memory state conditioned on register |0>
  double post_select_probability = 0.0;
  double fidelity_vs_classical = 0.0;
  double residual_norm = 0.0;
  double condition_number = 0.0;
  double C = 0.0;
  double t0 = 0.0;
  int n_R = 0;
};

struct RescaleResult {
  CMatrix A_scaled;
  double t0 = 0.0;
  double condition_number = 0.0;
};

/// Scales a positive-definite A so the top eigenvalue sits at 1/2,
/// keeping the spectrum inside (0, 1) with headroom against wrap-around.
RescaleResult rescale(const CMatrix& A);

/// Closed form of the QPE register amplitude for phase `lambda` at bin k:
/// (1/2^{n_R}) sum_y exp(2 pi i y (lambda - k/2^{n_R})).
cplx qpe_amplitude(double lambda, int k, int n_R);

/// QFT on the register block: |y> -> 2^{-n_R/2} sum_k e^{2 pi i yk/2^{n_R}} |k>.
Circuit build_qft(const QubitLayout& layout);

/// Hadamards + controlled e^{2 pi i A 2^k} blocks + inverse QFT on the
/// register. `a_scaled` must have spectrum in [0, 1).
Circuit build_qpe(int n_R, const CMatrix& a_scaled, int n_M);

/// QPE + AQE + inverse QPE over the full layout.
Circuit build_hhl_circuit(int n_R, const CMatrix& a_scaled, int n_M,
                          const MatrixFunctionSpec& f);

/// Dense-factorization ground truth, normalized.
CVector classical_solve(const ProblemInstance& instance);

/// Full pipeline; `f` defaults to the inverse function (standard HHL).
SolutionReport run(const ProblemInstance& instance, const HHLConfig& config,
                   const MatrixFunctionSpec* f = nullptr);

struct ObservableEstimate {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
};

/// Samples `shots` eigenvalue outcomes of `obs` from the Born distribution
/// of `state` with the seeded deterministic generator.
ObservableEstimate estimate_observable(const CVector& state, const CMatrix& obs,
                                       long long shots, std::uint64_t seed);

struct SweepRow {
  int n_R = 0;
  long long shots = 0;
  bool failed = false;
  std::string message;
  double residual_norm = 0.0;
  double observable_error = 0.0;
  double post_select_probability = 0.0;
  int recommended_n_R = 0;
};

/// Error-scaling experiment; rows are ordered n_R-major, shots-minor, and
/// each row's sampler is seeded with base_seed + row_index. The probed
/// observable is Z on the first memory qubit.
std::vector<SweepRow> error_sweep(const ProblemInstance& instance,
                                  const std::vector<int>& n_R_values,
                                  const std::vector<long long>& shot_values,
                                  std::uint64_t base_seed);

/// ceil(log2(kappa sqrt(shots))), clamped to >= 1; 0 when shots == 0.
int recommended_n_R(double condition_number, long long shots);

/// Z observable on the first memory qubit of an n_M-qubit memory.
CMatrix memory_z_observable(int n_M);

}  // namespace qhhl
