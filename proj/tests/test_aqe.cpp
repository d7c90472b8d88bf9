// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <bit>

#include "aqe.hpp"
#include "simulate.hpp"
#include "test_support.hpp"

using namespace qhhl;
using namespace qhhl::testing;

namespace {

// Direct-sum oracle: sum_p (Vdg Rz(-phi(p)) V) (x) |p><p| (x) I_mem,
// assembled entirely from literal matrices.
CMatrix multiplexed_oracle(const std::vector<double>& phi, int n_R, int n_M) {
  const int reg_dim = 1 << n_R;
  const int mem_dim = 1 << n_M;
  CMatrix v = oracle_v();
  CMatrix out = CMatrix::Zero(2 * reg_dim * mem_dim, 2 * reg_dim * mem_dim);
  for (int p = 0; p < reg_dim; ++p) {
    CMatrix w = v.adjoint() * oracle_rz(-phi[p]) * v;
    CMatrix proj = CMatrix::Zero(reg_dim, reg_dim);
    proj(p, p) = 1;
    out += kron(kron(w, proj), CMatrix::Identity(mem_dim, mem_dim));
  }
  return out;
}

std::vector<double> phi_vector(const MatrixFunctionSpec& f, int n_R) {
  std::vector<double> phi(std::size_t{1} << n_R);
  for (int p = 0; p < (1 << n_R); ++p) phi[p] = phi_angle(p, f, n_R);
  return phi;
}

// Random admissible f: smooth harmonics scaled into [-0.95, 0.95].
MatrixFunctionSpec random_function(std::uint64_t seed) {
  DeterministicRng rng(seed);
  double a = rng.uniform() * 2 - 1;
  double b = rng.uniform() * 2 - 1;
  double c = rng.uniform() * 2 - 1;
  MatrixFunctionSpec s;
  s.f = [a, b, c](double x) {
    return 0.45 * (a * std::sin(3 * x) + b * x * x + c * std::cos(5 * x));
  };
  s.description = "random";
  return s;
}

}  // namespace

TEST_CASE("gray code basics") {
  CHECK(gray(0) == 0);
  CHECK(gray(1) == 1);
  CHECK(gray(2) == 3);
  CHECK(gray(3) == 2);
  CHECK(gray(7) == 4);
  for (unsigned j = 0; j + 1 < 16; ++j)
    CHECK(std::popcount(gray(j) ^ gray(j + 1)) == 1);
}

TEST_CASE("phi targets for the inverse function") {
  auto f = MatrixFunctionSpec::inverse(2);
  CHECK(phi_angle(0, f, 2) == 0.0);
  CHECK(phi_angle(1, f, 2) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(phi_angle(2, f, 2) == doctest::Approx(kPi / 3).epsilon(1e-14));
}

TEST_CASE("phi rejects out-of-domain function values") {
  MatrixFunctionSpec s;
  s.f = [](double) { return 1.5; };
  s.description = "too-big";
  CHECK_THROWS_AS(phi_angle(1, s, 2), Error);
}

TEST_CASE("build_M n_R=1 matches the hand-evaluated sign matrix") {
  Eigen::MatrixXd m = build_M(1);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(1, 1) == -1);
}

TEST_CASE("M M^T = 2^{n_R} I and the first row is all ones") {
  for (int n_R = 1; n_R <= 4; ++n_R) {
    Eigen::MatrixXd m = build_M(n_R);
    const int dim = 1 << n_R;
    CHECK((m * m.transpose() - dim * Eigen::MatrixXd::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    for (int j = 0; j < dim; ++j) CHECK(m(0, j) == 1.0);
  }
}

TEST_CASE("solve_thetas: hand-solved 2x2 system") {
  auto theta = solve_thetas({0.0, kPi}, 1);
  CHECK(theta[0] == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(theta[1] == doctest::Approx(-kPi / 2).epsilon(1e-14));
}

TEST_CASE("solve_thetas: zero in, zero out") {
  auto theta = solve_thetas(std::vector<double>(8, 0.0), 3);
  for (double t : theta) CHECK(t == 0.0);
}

TEST_CASE("solve_thetas matches a generic dense linear solver") {
  for (int n_R : {2, 3, 4}) {
    auto phi = phi_vector(MatrixFunctionSpec::inverse(n_R), n_R);
    auto theta = solve_thetas(phi, n_R);
    // Independent oracle: least-squares solve of M theta = phi.
    Eigen::MatrixXd m = build_M(n_R);
    Eigen::VectorXd rhs(m.rows());
    for (int i = 0; i < m.rows(); ++i) rhs(i) = phi[i];
    Eigen::VectorXd solved = m.colPivHouseholderQr().solve(rhs);
    for (int i = 0; i < m.rows(); ++i)
      CHECK(std::abs(theta[i] - solved(i)) < 1e-10);
    // Residual contract.
    Eigen::VectorXd tv(m.rows());
    for (int i = 0; i < m.rows(); ++i) tv(i) = theta[i];
    CHECK((m * tv - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("solve_thetas rejects wrong lengths") {
  CHECK_THROWS_AS(solve_thetas(std::vector<double>(3, 0.0), 2), Error);
}

TEST_CASE("theta via the Gray transform equals the explicit sum formula "
          "once the factor 2 of phi = 2 arcsin is restored") {
  for (int n_R : {1, 2, 3, 4}) {
    const int dim = 1 << n_R;
    auto theta = solve_thetas(phi_vector(MatrixFunctionSpec::inverse(n_R), n_R),
                              n_R);
    for (int i = 0; i < dim; ++i) {
      double acc = 0;
      for (int j = 1; j < dim; ++j) {
        unsigned dot = static_cast<unsigned>(j) & gray(static_cast<unsigned>(i));
        double sign = std::popcount(dot) % 2 == 0 ? 1.0 : -1.0;
        acc += sign * std::asin(1.0 / j);
      }
      double formula_value = acc / dim;       // as printed, factor 2 missing
      CHECK(std::abs(theta[i] - 2.0 * formula_value) < 1e-10);
    }
  }
}

TEST_CASE("synthesized circuit equals the multiplexed-rotation oracle") {
  for (int n_R : {1, 2, 3, 4}) {
    std::vector<MatrixFunctionSpec> fs;
    fs.push_back(MatrixFunctionSpec::inverse(n_R));
    fs.push_back(MatrixFunctionSpec::identity());
    fs.push_back(MatrixFunctionSpec::zero());
    fs.push_back(random_function(n_R * 17 + 1));
    for (const auto& f : fs) {
      auto synth = synthesize(n_R, f);
      CMatrix u = circuit_unitary(synth.circuit);
      CMatrix oracle = multiplexed_oracle(phi_vector(f, n_R), n_R, 1);
      CHECK(phase_aligned_distance(u, oracle) < 1e-9);
    }
  }
}

TEST_CASE("post-selected ancilla-1 probability equals f^2 on every branch") {
  for (int n_R : {1, 2, 3}) {
    auto f = MatrixFunctionSpec::inverse(n_R);
    auto synth = synthesize(n_R, f);
    const int n = synth.circuit.n_qubits();
    for (int p = 0; p < (1 << n_R); ++p) {
      // |0>_A |p>_R |0>_M : register bits sit between ancilla and memory.
      StateVector in = StateVector::basis_state(
          n, static_cast<std::size_t>(p) << synth.circuit.layout().n_M);
      StateVector out = run_circuit(synth.circuit, in);
      double prob = outcome_probability(out, QubitLayout::ancilla, 1);
      double fval = p == 0 ? 0.0 : 1.0 / p;
      CHECK(std::abs(prob - fval * fval) < 1e-10);
    }
  }
}

TEST_CASE("ancilla-1 amplitude carries a branch-independent phase") {
  const int n_R = 3;
  auto synth = synthesize(n_R, MatrixFunctionSpec::inverse(n_R));
  const int n = synth.circuit.n_qubits();
  for (int p = 1; p < (1 << n_R); ++p) {
    StateVector in = StateVector::basis_state(n, static_cast<std::size_t>(p)
                                                     << 1);
    StateVector out = run_circuit(synth.circuit, in);
    // Amplitude of |1>_A |p>_R |0>_M.
    std::size_t idx = (std::size_t{1} << (n - 1)) |
                      (static_cast<std::size_t>(p) << 1);
    cplx amp = out.amplitude(idx);
    cplx expected = cplx{0, -1} * (1.0 / p);  // -i f(p/2^{n_R})
    CHECK(std::abs(amp - expected) < 1e-12);
  }
}

TEST_CASE("f = 0 synthesizes the trivial encoder") {
  auto synth = synthesize(2, MatrixFunctionSpec::zero());
  for (double t : synth.angles.theta) CHECK(t == 0.0);
  for (int p = 0; p < 4; ++p) {
    StateVector in =
        StateVector::basis_state(4, static_cast<std::size_t>(p) << 1);
    StateVector out = run_circuit(synth.circuit, in);
    CHECK(outcome_probability(out, 0, 1) < 1e-20);
  }
}

TEST_CASE("synthesize emits exactly 2^{n_R} rotations and CNOTs") {
  for (int n_R : {1, 2, 3, 4}) {
    auto synth = synthesize(n_R, MatrixFunctionSpec::inverse(n_R));
    auto rc = count_resources(synth.circuit);
    CHECK(rc.cnot_count == (1 << n_R));
    CHECK(rc.single_qubit_gates == (1 << n_R) + 2);
  }
}

TEST_CASE("angle table invariants: phi[0] = 0 and M theta = phi") {
  for (int n_R : {1, 2, 3}) {
    auto synth = synthesize(n_R, MatrixFunctionSpec::inverse(n_R));
    CHECK(synth.angles.phi[0] == 0.0);
    CHECK(synth.angles.C == doctest::Approx(std::ldexp(1.0, -n_R)));
    Eigen::MatrixXd m = build_M(n_R);
    for (int i = 0; i < (1 << n_R); ++i) {
      double acc = 0;
      for (int j = 0; j < (1 << n_R); ++j)
        acc += m(i, j) * synth.angles.theta[j];
      CHECK(std::abs(acc - synth.angles.phi[i]) < 1e-10);
    }
  }
}

TEST_CASE("check_f_condition: constant zero is comfortably admissible") {
  auto report = check_f_condition(MatrixFunctionSpec::zero(), 100);
  CHECK(report.satisfied);
  CHECK(report.worst_value == 0.0);
}

TEST_CASE("check_f_condition flags the inverse function near the origin") {
  auto report = check_f_condition(MatrixFunctionSpec::inverse(3), 64);
  CHECK_FALSE(report.satisfied);
  CHECK(report.worst_x < 0.1);
}

TEST_CASE("check_f_condition agrees with a ten-times-finer grid") {
  // f = x/2: the bound expression grows monotonically toward x = 1, so the
  // two grids agree once the mesh is fine enough.
  auto coarse = check_f_condition(MatrixFunctionSpec::identity(), 1000000);
  auto fine = check_f_condition(MatrixFunctionSpec::identity(), 10000000);
  CHECK(std::abs(coarse.worst_value - fine.worst_value) < 1e-6);
  CHECK(coarse.satisfied);
}

TEST_CASE("check_f_condition reports saturation instead of throwing") {
  MatrixFunctionSpec s;
  s.f = [](double) { return 1.0; };
  s.description = "saturating";
  auto report = check_f_condition(s, 50);
  CHECK(report.singular_denominator);
  CHECK_FALSE(report.satisfied);
}
