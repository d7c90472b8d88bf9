// SPDX-License-Identifier: Apache-2.0
#include "linalg.hpp"

#include <cmath>

namespace qhhl {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  require(is_power_of_two(n), ErrorCode::InvalidArgument,
          "dimension " + std::to_string(n) + " is not a power of two");
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  CMatrix d = m * m.adjoint();
  d -= CMatrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix expi_hermitian(const CMatrix& h, double t) {
  require(is_hermitian(h, 1e-10), ErrorCode::Validation,
          "matrix exponential input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const auto& vals = es.eigenvalues();
  const CMatrix& vecs = es.eigenvectors();
  CVector phases(vals.size());
  for (Eigen::Index k = 0; k < vals.size(); ++k)
    phases(k) = std::exp(kI * (t * vals(k)));
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

double phase_aligned_distance(const CMatrix& u, const CMatrix& v) {
  require(u.rows() == v.rows() && u.cols() == v.cols(),
          ErrorCode::InvalidArgument, "phase alignment: shape mismatch");
  // Pick the entry where both matrices carry weight, so the phase quotient
  // is well conditioned.
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      double w = std::abs(u(i, j)) * std::abs(v(i, j));
      if (w > best) {
        best = w;
        bi = i;
        bj = j;
      }
    }
  cplx phase{1.0, 0.0};
  if (best > 0.0) {
    phase = (u(bi, bj) / v(bi, bj));
    phase /= std::abs(phase);
  }
  return (u - phase * v).norm();
}

double phase_aligned_distance(const CVector& x, const CVector& y) {
  require(x.size() == y.size(), ErrorCode::InvalidArgument,
          "phase alignment: length mismatch");
  cplx overlap = x.dot(y);  // conj(x) . y
  cplx phase = std::abs(overlap) > 0
                   ? std::conj(overlap) / std::abs(overlap)
                   : cplx{1, 0};
  return (x - phase * y).norm();
}

EulerZYZ euler_zyz(const CMatrix& u) {
  require(u.rows() == 2 && u.cols() == 2, ErrorCode::InvalidArgument,
          "euler_zyz expects a 2x2 matrix");
  EulerZYZ e{};
  double c = std::abs(u(0, 0));
  double s = std::abs(u(1, 0));
  e.gamma = 2.0 * std::atan2(s, c);
  if (s < 1e-14) {
    // Diagonal: only beta + delta is determined.
    e.beta = std::arg(u(1, 1)) - std::arg(u(0, 0));
    e.delta = 0.0;
    e.alpha = 0.5 * (std::arg(u(0, 0)) + std::arg(u(1, 1)));
  } else if (c < 1e-14) {
    // Anti-diagonal: only beta - delta is determined.
    e.beta = std::arg(u(1, 0)) - std::arg(-u(0, 1));
    e.delta = 0.0;
    e.alpha = 0.5 * (std::arg(u(1, 0)) + std::arg(-u(0, 1)));
  } else {
    double a00 = std::arg(u(0, 0));
    double a10 = std::arg(u(1, 0));
    double a11 = std::arg(u(1, 1));
    e.beta = a10 - a00;
    e.delta = a11 - a10;
    e.alpha = 0.5 * (a00 + a11);
  }
  return e;
}

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

CMatrix mat_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix mat_y() {
  CMatrix m(2, 2);
  m << cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0};
  return m;
}

CMatrix mat_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix mat_h() {
  CMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return kInvSqrt2 * m;
}

CMatrix mat_v() {
  CMatrix m(2, 2);
  m << cplx{0, -1}, cplx{0, 1}, cplx{1, 0}, cplx{1, 0};
  return kInvSqrt2 * m;
}

CMatrix mat_vdg() { return mat_v().adjoint(); }

CMatrix mat_rx(double theta) {
  CMatrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << cplx{c, 0}, cplx{0, -s}, cplx{0, -s}, cplx{c, 0};
  return m;
}

CMatrix mat_ry(double theta) {
  CMatrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

CMatrix mat_rz(double theta) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = std::exp(cplx{0, -theta / 2});
  m(1, 1) = std::exp(cplx{0, theta / 2});
  return m;
}

CMatrix mat_swap() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

}  // namespace qhhl
