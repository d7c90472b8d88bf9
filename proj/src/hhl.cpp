// SPDX-License-Identifier: Apache-2.0
#include "hhl.hpp"

#include <cmath>
#include <numbers>

#include "rng.hpp"
#include "simulate.hpp"

namespace qhhl {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

int ProblemInstance::n_M() const {
  return log2_exact(static_cast<std::size_t>(A.rows()));
}

void ProblemInstance::validate() const {
  require(A.rows() == A.cols() && A.rows() >= 2, ErrorCode::Validation,
          "A must be square with dimension >= 2");
  require(is_power_of_two(static_cast<std::size_t>(A.rows())),
          ErrorCode::Validation, "A dimension must be a power of two");
  require(is_hermitian(A, 1e-12), ErrorCode::Validation, "A is not Hermitian");
  require(b.size() == A.rows(), ErrorCode::Validation,
          "b length does not match A");
  require(b.norm() > 1e-300, ErrorCode::Validation, "b must be nonzero");
}

RescaleResult rescale(const CMatrix& A) {
  require(is_hermitian(A, 1e-12), ErrorCode::Validation, "A is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(A);
  const auto& vals = es.eigenvalues();
  double sigma_min = vals.cwiseAbs().minCoeff();
  double sigma_max = vals.cwiseAbs().maxCoeff();
  require(sigma_min >= 1e-12, ErrorCode::SingularMatrix,
          "A is singular: sigma_min = " + std::to_string(sigma_min));
  require(vals.minCoeff() > 0, ErrorCode::UnsupportedInstance,
          "A must be positive definite (smallest eigenvalue " +
              std::to_string(vals.minCoeff()) + ")");
  RescaleResult r;
  r.t0 = 0.5 / sigma_max;
  r.A_scaled = r.t0 * A;
  r.condition_number = sigma_max / sigma_min;
  return r;
}

cplx qpe_amplitude(double lambda, int k, int n_R) {
  require(n_R >= 1 && n_R <= 30, ErrorCode::InvalidArgument, "bad n_R");
  const int dim = 1 << n_R;
  require(k >= 0 && k < dim, ErrorCode::InvalidArgument, "k out of range");
  const double delta = lambda - static_cast<double>(k) / dim;
  const cplx ratio = std::exp(kI * (kTwoPi * delta));
  if (std::abs(ratio - cplx{1, 0}) < 1e-12) return cplx{1, 0};
  const cplx top = cplx{1, 0} - std::exp(kI * (kTwoPi * delta * dim));
  return top / (static_cast<double>(dim) * (cplx{1, 0} - ratio));
}

Circuit build_qft(const QubitLayout& layout) {
  Circuit c(layout);
  const int n = layout.n_R;
  for (int q = 1; q <= n; ++q) {
    c.append(Instruction::single(GateKind::H, layout.register_qubit(q)));
    for (int j = q + 1; j <= n; ++j) {
      const double angle = kTwoPi / std::ldexp(1.0, j - q + 1);
      CMatrix p = CMatrix::Identity(2, 2);
      p(1, 1) = std::exp(kI * angle);
      c.append(Instruction::controlled_unitary(
          p, {layout.register_qubit(q)}, {layout.register_qubit(j)}));
    }
  }
  for (int i = 1; i <= n / 2; ++i)
    c.append(Instruction::swap(layout.register_qubit(i),
                               layout.register_qubit(n + 1 - i)));
  return c;
}

namespace {

void check_scaled_spectrum(const CMatrix& a_scaled) {
  require(is_hermitian(a_scaled, 1e-12), ErrorCode::Validation,
          "scaled matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a_scaled);
  require(es.eigenvalues().minCoeff() >= 0.0 &&
              es.eigenvalues().maxCoeff() < 1.0,
          ErrorCode::Validation,
          "scaled matrix spectrum must lie in [0, 1)");
}

}  // namespace

Circuit build_qpe(int n_R, const CMatrix& a_scaled, int n_M) {
  require(n_R >= 1, ErrorCode::InvalidArgument, "n_R must be >= 1");
  require(log2_exact(static_cast<std::size_t>(a_scaled.rows())) == n_M,
          ErrorCode::InvalidArgument, "matrix dimension does not match n_M");
  check_scaled_spectrum(a_scaled);

  QubitLayout layout{n_R, n_M};
  Circuit c(layout);
  for (int q = 1; q <= n_R; ++q)
    c.append(Instruction::single(GateKind::H, layout.register_qubit(q)));

  std::vector<int> memory;
  for (int j = 0; j < n_M; ++j) memory.push_back(layout.memory_qubit(j));

  // Register qubit r carries eigenvalue bit of weight 2^{n_R - r}.
  for (int r = 1; r <= n_R; ++r) {
    const double power = std::ldexp(1.0, n_R - r);
    CMatrix u = expi_hermitian(a_scaled, kTwoPi * power);
    c.append(Instruction::controlled_unitary(u, memory,
                                             {layout.register_qubit(r)}));
  }
  c.extend(build_qft(layout).inverse());
  return c;
}

Circuit build_hhl_circuit(int n_R, const CMatrix& a_scaled, int n_M,
                          const MatrixFunctionSpec& f) {
  Circuit qpe = build_qpe(n_R, a_scaled, n_M);
  Circuit full = qpe;
  full.extend(synthesize(n_R, f, n_M).circuit);
  full.extend(qpe.inverse());
  return full;
}

CVector classical_solve(const ProblemInstance& instance) {
  instance.validate();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(instance.A);
  require(es.eigenvalues().cwiseAbs().minCoeff() >= 1e-12,
          ErrorCode::SingularMatrix, "A is singular");
  CVector x = instance.A.partialPivLu().solve(instance.b);
  return x / x.norm();
}

SolutionReport run(const ProblemInstance& instance, const HHLConfig& config,
                   const MatrixFunctionSpec* f) {
  instance.validate();
  require(config.n_R >= 1 && config.n_R <= 16, ErrorCode::Validation,
          "n_R out of range");
  const int n_M = instance.n_M();

  RescaleResult scaled;
  if (config.t0 > 0) {
    scaled.t0 = config.t0;
    scaled.A_scaled = config.t0 * instance.A;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(scaled.A_scaled);
    require(es.eigenvalues().minCoeff() > 0 &&
                es.eigenvalues().maxCoeff() < 1.0,
            ErrorCode::Validation,
            "rescaled eigenvalues must lie in (0, 1) for the given t0");
    scaled.condition_number =
        es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
  } else {
    scaled = rescale(instance.A);
  }

  MatrixFunctionSpec inv;
  if (!f) {
    inv = MatrixFunctionSpec::inverse(config.n_R);
    f = &inv;
  }

  Circuit circuit = build_hhl_circuit(config.n_R, scaled.A_scaled, n_M, *f);

  // |0>_A |0>_R |b>_M : memory occupies the low index bits.
  CVector b_hat = instance.b / instance.b.norm();
  std::vector<cplx> amps(std::size_t{1} << circuit.n_qubits(), cplx{0, 0});
  for (Eigen::Index m = 0; m < b_hat.size(); ++m)
    amps[static_cast<std::size_t>(m)] = b_hat(m);
  StateVector state(circuit.n_qubits(), std::move(amps));

  state = run_circuit(circuit, state);

  const double p1 = outcome_probability(state, QubitLayout::ancilla, 1);
  require(p1 >= 1e-12, ErrorCode::DegenerateInstance,
          "post-selection probability below 1e-12");
  auto [selected, prob] = post_select(state, QubitLayout::ancilla, 1);

  // Memory amplitudes conditioned on the register having returned to |0>.
  const std::size_t mem_dim = std::size_t{1} << n_M;
  const std::size_t base = std::size_t{1} << (config.n_R + n_M);  // ancilla=1
  CVector solution(static_cast<Eigen::Index>(mem_dim));
  for (std::size_t m = 0; m < mem_dim; ++m)
    solution(static_cast<Eigen::Index>(m)) = selected.amplitude(base + m);
  const double slice_norm = solution.norm();
  require(slice_norm > 1e-12, ErrorCode::DegenerateInstance,
          "register failed to uncompute: ground-state slice is empty");
  solution /= slice_norm;

  CVector classical = classical_solve(instance);

  SolutionReport report;
  report.solution = solution;
  report.post_select_probability = prob;
  report.fidelity_vs_classical = std::norm(classical.dot(solution));
  report.residual_norm = phase_aligned_distance(classical, solution);
  report.condition_number = scaled.condition_number;
  report.C = f->description == "inverse" ? std::ldexp(1.0, -config.n_R) : 0.0;
  report.t0 = scaled.t0;
  report.n_R = config.n_R;
  return report;
}

ObservableEstimate estimate_observable(const CVector& state, const CMatrix& obs,
                                       long long shots, std::uint64_t seed) {
  require(shots >= 1, ErrorCode::InvalidArgument, "shots must be >= 1");
  require(obs.rows() == state.size() && obs.cols() == state.size(),
          ErrorCode::InvalidArgument, "observable dimension mismatch");
  require(is_hermitian(obs, 1e-12), ErrorCode::Validation,
          "observable is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(obs);
  const auto& vals = es.eigenvalues();
  std::vector<double> probs(static_cast<std::size_t>(vals.size()));
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    probs[static_cast<std::size_t>(i)] =
        std::norm(es.eigenvectors().col(i).dot(state));

  DeterministicRng rng(seed);
  double sum = 0, sum_sq = 0;
  for (long long s = 0; s < shots; ++s) {
    double v = vals(static_cast<Eigen::Index>(rng.sample_discrete(probs)));
    sum += v;
    sum_sq += v * v;
  }
  ObservableEstimate est;
  est.mean = sum / static_cast<double>(shots);
  if (shots >= 2) {
    double var = (sum_sq - sum * sum / static_cast<double>(shots)) /
                 static_cast<double>(shots - 1);
    est.stderr_of_mean = std::sqrt(std::max(var, 0.0) /
                                   static_cast<double>(shots));
  }
  return est;
}

int recommended_n_R(double condition_number, long long shots) {
  if (shots <= 0) return 0;
  double v = std::log2(condition_number * std::sqrt(static_cast<double>(shots)));
  return std::max(1, static_cast<int>(std::ceil(v)));
}

CMatrix memory_z_observable(int n_M) {
  require(n_M >= 1, ErrorCode::InvalidArgument, "n_M must be >= 1");
  CMatrix z = mat_z();
  if (n_M == 1) return z;
  return kron(z, CMatrix::Identity(1 << (n_M - 1), 1 << (n_M - 1)));
}

std::vector<SweepRow> error_sweep(const ProblemInstance& instance,
                                  const std::vector<int>& n_R_values,
                                  const std::vector<long long>& shot_values,
                                  std::uint64_t base_seed) {
  require(!n_R_values.empty() && !shot_values.empty(),
          ErrorCode::InvalidArgument, "sweep ranges must be nonempty");
  instance.validate();
  const int n_M = instance.n_M();
  const CMatrix omega = memory_z_observable(n_M);
  const CVector classical = classical_solve(instance);
  const double truth = (classical.adjoint() * omega * classical)(0).real();

  std::vector<SweepRow> rows;
  std::size_t row_index = 0;
  for (int n_R : n_R_values) {
    SolutionReport report;
    bool run_ok = true;
    std::string run_msg;
    try {
      report = run(instance, HHLConfig{n_R, 0.0, 0, 0});
    } catch (const Error& e) {
      run_ok = false;
      run_msg = e.what();
    }
    for (long long shots : shot_values) {
      SweepRow row;
      row.n_R = n_R;
      row.shots = shots;
      if (!run_ok) {
        row.failed = true;
        row.message = run_msg;
      } else {
        row.residual_norm = report.residual_norm;
        row.post_select_probability = report.post_select_probability;
        row.recommended_n_R = recommended_n_R(report.condition_number, shots);
        if (shots == 0) {
          double est =
              (report.solution.adjoint() * omega * report.solution)(0).real();
          row.observable_error = std::abs(est - truth);
        } else {
          auto est = estimate_observable(report.solution, omega, shots,
                                         base_seed + row_index);
          row.observable_error = std::abs(est.mean - truth);
        }
      }
      rows.push_back(std::move(row));
      ++row_index;
    }
  }
  return rows;
}

}  // namespace qhhl
