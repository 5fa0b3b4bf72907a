#pragma once

#include <complex>
#include <utility>

#include "polyberg/symbols.hpp"

namespace polyberg {

/// z = r e^{i theta}.
struct DiskPoint {
  double r = 0.0;
  double theta = 0.0;
};

/// Orthonormal disk polynomial b_{p,q} of L^2(D, mu_alpha), from Q in t = r^2.
std::complex<double> disk_poly(int p, int q, double alpha, DiskPoint pt);

/// Same function through the Jacobi function J: (1-r^2)^{-alpha/2} e^{i(p-q)theta} J(r^2) / sqrt(alpha+1).
/// Requires r < 1.
std::complex<double> disk_poly_via_jac(int p, int q, double alpha, DiskPoint pt);

/// (p, q) = (max(j+xi, j), max(j-xi, j)): the j-th basis function of frequency xi.
std::pair<int, int> basis_index(int xi, int j);

/// <a b_{p2,q2}, b_{p,q}> in L^2(D, mu_alpha) by tensor quadrature: a uniform
/// angular grid times composite Gauss-Legendre in t, split at symbol jumps.
/// angular_nodes = 0 picks the smallest alias-free count. Throws DomainError
/// when angular_nodes <= |p-q| + |p2-q2| + 1.
std::complex<double> toeplitz_entry_2d(const Symbol& a, double alpha, int p, int q, int p2, int q2,
                                       int radial_panels = 256, int angular_nodes = 0);

}  // namespace polyberg
