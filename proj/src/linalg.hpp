// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "types.hpp"

namespace qhhl {

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

bool is_hermitian(const CMatrix& m, double tol = 1e-12);
bool is_unitary(const CMatrix& m, double tol = 1e-10);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// exp(i * t * h) for Hermitian h, by exact eigendecomposition.
CMatrix expi_hermitian(const CMatrix& h, double t);

/// Frobenius distance min over a global phase picked from the
/// largest-magnitude entry pair: ||u - e^{i theta} v||_F.
double phase_aligned_distance(const CMatrix& u, const CMatrix& v);

/// Phase-aligned vector distance ||x - e^{i theta} y|| with theta chosen
/// to maximize Re<x|e^{i theta} y>.
double phase_aligned_distance(const CVector& x, const CVector& y);

/// Euler angles (alpha, beta, gamma, delta) of a 2x2 unitary:
/// u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct EulerZYZ {
  double alpha;
  double beta;
  double gamma;
  double delta;
};
EulerZYZ euler_zyz(const CMatrix& u);

// Fixed 2x2 gate matrices.
CMatrix mat_x();
CMatrix mat_y();
CMatrix mat_z();
CMatrix mat_h();
CMatrix mat_v();     // (1/sqrt2) [[-i, i], [1, 1]]
CMatrix mat_vdg();
CMatrix mat_rx(double theta);
CMatrix mat_ry(double theta);
CMatrix mat_rz(double theta);
CMatrix mat_swap();

}  // namespace qhhl
