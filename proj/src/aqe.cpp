// SPDX-License-Identifier: Apache-2.0
#include "aqe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qhhl {

MatrixFunctionSpec MatrixFunctionSpec::inverse(int n_R) {
  require(n_R >= 1, ErrorCode::InvalidArgument, "n_R must be >= 1");
  const double c = std::ldexp(1.0, -n_R);
  MatrixFunctionSpec s;
  s.f = [c](double x) { return x == 0.0 ? 0.0 : c / x; };
  s.eta = std::ldexp(1.0, n_R);  // O(kappa) scale: 1/lambda_min = 2^{n_R}
  s.description = "inverse";
  s.zero_at_origin = true;
  return s;
}

MatrixFunctionSpec MatrixFunctionSpec::identity() {
  MatrixFunctionSpec s;
  s.f = [](double x) { return x / 2.0; };
  s.eta = 1.0;
  s.description = "identity";
  return s;
}

MatrixFunctionSpec MatrixFunctionSpec::sqrt() {
  MatrixFunctionSpec s;
  s.f = [](double x) { return std::sqrt(x); };
  s.eta = 1.0;
  s.description = "sqrt";
  return s;
}

MatrixFunctionSpec MatrixFunctionSpec::zero() {
  MatrixFunctionSpec s;
  s.f = [](double) { return 0.0; };
  s.eta = 1.0;
  s.description = "zero";
  return s;
}

MatrixFunctionSpec MatrixFunctionSpec::by_name(const std::string& name,
                                               int n_R) {
  if (name == "inverse") return inverse(n_R);
  if (name == "identity") return identity();
  if (name == "sqrt") return sqrt();
  if (name == "zero") return zero();
  std::string known;
  for (const auto& k : known_names()) known += (known.empty() ? "" : ", ") + k;
  fail(ErrorCode::InvalidArgument,
       "unknown function name '" + name + "' (supported: " + known + ")");
}

std::vector<std::string> MatrixFunctionSpec::known_names() {
  return {"inverse", "identity", "sqrt", "zero"};
}

unsigned gray(unsigned j) { return j ^ (j >> 1); }

double phi_angle(int p, const MatrixFunctionSpec& f, int n_R) {
  require(n_R >= 1, ErrorCode::InvalidArgument, "n_R must be >= 1");
  const int dim = 1 << n_R;
  require(p >= 0 && p < dim, ErrorCode::InvalidArgument,
          "p out of range for n_R");
  if (p == 0 && f.zero_at_origin) return 0.0;
  const double v = f.f(static_cast<double>(p) / dim);
  require(std::abs(v) <= 1.0 + 1e-15, ErrorCode::Validation,
          "|f| > 1 at p = " + std::to_string(p) +
              ": cannot take arcsin of " + std::to_string(v));
  return 2.0 * std::asin(std::clamp(v, -1.0, 1.0));
}

Eigen::MatrixXd build_M(int n_R) {
  require(n_R >= 1 && n_R <= 12, ErrorCode::InvalidArgument,
          "build_M supports n_R in [1, 12]");
  const int dim = 1 << n_R;
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      unsigned dot = static_cast<unsigned>(i) & gray(static_cast<unsigned>(j));
      m(i, j) = (std::popcount(dot) % 2 == 0) ? 1.0 : -1.0;
    }
  return m;
}

namespace {

// In-place Walsh-Hadamard transform: out[k] = sum_i (-1)^{i.k} in[i].
void fwht(std::vector<double>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1)
    for (std::size_t i = 0; i < v.size(); i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        double a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
}

}  // namespace

std::vector<double> solve_thetas(const std::vector<double>& phi, int n_R) {
  require(n_R >= 1, ErrorCode::InvalidArgument, "n_R must be >= 1");
  const std::size_t dim = std::size_t{1} << n_R;
  require(phi.size() == dim, ErrorCode::InvalidArgument,
          "phi length must be 2^{n_R}");
  // (M^T phi)_j = sum_i (-1)^{bin(i) . g(j)} phi_i = WHT(phi)[g(j)].
  std::vector<double> wht = phi;
  fwht(wht);
  std::vector<double> theta(dim);
  const double scale = 1.0 / static_cast<double>(dim);
  for (std::size_t j = 0; j < dim; ++j)
    theta[j] = wht[gray(static_cast<unsigned>(j))] * scale;
  return theta;
}

AqeSynthesis synthesize(int n_R, const MatrixFunctionSpec& f, int n_M) {
  const int count = 1 << n_R;
  AngleTable table;
  table.n_R = n_R;
  table.C = f.description == "inverse" ? std::ldexp(1.0, -n_R) : 0.0;
  table.phi.resize(count);
  for (int p = 0; p < count; ++p) table.phi[p] = phi_angle(p, f, n_R);
  table.theta = solve_thetas(table.phi, n_R);

  Circuit circuit(QubitLayout{n_R, n_M});
  const int anc = QubitLayout::ancilla;
  circuit.append(Instruction::single(GateKind::V, anc));
  for (int i = 0; i < count; ++i) {
    // The multiplexed target is Rz(-phi(p)) per register branch; the
    // Gray transform composes branch angles as M * (circuit angles),
    // hence the sign flip relative to the reported theta (M theta = phi).
    circuit.append(Instruction::rotation(GateKind::Rz, anc, -table.theta[i]));
    unsigned a = gray(static_cast<unsigned>(i));
    unsigned b = gray(static_cast<unsigned>((i + 1) % count));
    int bit = std::countr_zero(a ^ b);  // position from the LSB
    int control = circuit.layout().register_qubit(n_R - bit);
    circuit.append(Instruction::cnot(control, anc));
  }
  circuit.append(Instruction::single(GateKind::Vdg, anc));
  return AqeSynthesis{std::move(circuit), std::move(table)};
}

FConditionReport check_f_condition(const MatrixFunctionSpec& f,
                                   int grid_points) {
  require(grid_points >= 2, ErrorCode::InvalidArgument,
          "grid_points must be >= 2");
  const double h = 1.0 / (10.0 * grid_points);
  FConditionReport report;
  report.worst_value = -1.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = static_cast<double>(i) / grid_points;
    const double lo = std::max(x - h, 0.0);
    const double hi = x + h;
    const double df = (f.f(hi) - f.f(lo)) / (hi - lo);
    const double fx = f.f(x);
    const double denom = 1.0 - fx * fx;
    if (std::abs(denom) < 1e-15) {
      report.singular_denominator = true;
      continue;
    }
    const double value = std::abs(df * df * (1.0 + 1.0 / denom));
    if (value > report.worst_value) {
      report.worst_value = value;
      report.worst_x = x;
    }
  }
  if (report.worst_value < 0) report.worst_value = 0;  // all points singular
  report.satisfied =
      !report.singular_denominator && report.worst_value < f.eta * f.eta;
  return report;
}

}  // namespace qhhl
