#include "polyberg/bergman_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "polyberg/errors.hpp"
#include "polyberg/jacobi.hpp"
#include "polyberg/quadrature.hpp"

namespace polyberg {
namespace {

void check_point(DiskPoint pt) {
  if (!(pt.r >= 0.0 && pt.r < 1.0)) throw DomainError("disk point must have 0 <= r < 1");
}

void check_indices(int p, int q) {
  if (p < 0 || q < 0) throw IndexError("disk polynomial indices must be nonnegative");
}

// Radial factor of b_{p,q} as a function of t = r^2, without the angular phase.
double radial(int p, int q, double alpha, double t) {
  const int f = std::abs(p - q);
  const JacobiParams jp{alpha, static_cast<double>(f), std::min(p, q)};
  return jac_norm_coeff(jp) / std::sqrt(alpha + 1.0) * std::pow(t, 0.5 * f) * q_eval(jp, t);
}

}  // namespace

std::complex<double> disk_poly(int p, int q, double alpha, DiskPoint pt) {
  check_indices(p, q);
  check_point(pt);
  return radial(p, q, alpha, pt.r * pt.r) * std::polar(1.0, (p - q) * pt.theta);
}

std::complex<double> disk_poly_via_jac(int p, int q, double alpha, DiskPoint pt) {
  check_indices(p, q);
  check_point(pt);
  const double t = pt.r * pt.r;
  const JacobiParams jp{alpha, static_cast<double>(std::abs(p - q)), std::min(p, q)};
  const double j = jac_fn_eval(jp, t);
  return std::pow(1.0 - t, -0.5 * alpha) * j / std::sqrt(alpha + 1.0) * std::polar(1.0, (p - q) * pt.theta);
}

std::pair<int, int> basis_index(int xi, int j) {
  if (j < 0) throw IndexError("basis_index: j must be nonnegative");
  return {std::max(j + xi, j), std::max(j - xi, j)};
}

std::complex<double> toeplitz_entry_2d(const Symbol& a, double alpha, int p, int q, int p2, int q2,
                                       int radial_panels, int angular_nodes) {
  check_indices(p, q);
  check_indices(p2, q2);
  if (!(alpha > -1.0)) throw DomainError("alpha must be > -1");
  if (radial_panels < 1) throw DomainError("radial_panels must be positive");
  const int needed = std::abs(p - q) + std::abs(p2 - q2) + 1;
  if (angular_nodes == 0) angular_nodes = needed + 1;
  if (angular_nodes <= needed) throw DomainError("toeplitz_entry_2d: too few angular nodes (aliasing)");

  std::vector<double> segments{0.0};
  for (double b : breakpoints(a)) {
    if (b > 0.0 && b < 1.0) segments.push_back(b);
  }
  segments.push_back(1.0);
  // Uniform panels, except that for non-integer alpha the segment ending at t = 1
  // is graded toward it: the endpoint error of (1-t)^alpha then falls like
  // panels^{-grading (alpha+1)} instead of panels^{-(alpha+1)}. That segment is
  // laid out in d = 1 - t so panels finer than the spacing of doubles near 1 keep
  // their nodes apart.
  const bool smooth = alpha >= 0.0 && alpha == std::floor(alpha);
  const double grading = smooth ? 1.0 : std::clamp(6.0 / (alpha + 1.0), 1.0, 12.0);
  std::vector<double> inner(segments.begin(), segments.end() - 1);
  const QuadratureGrid body = composite_gauss_legendre(inner, radial_panels);
  const double span = 1.0 - inner.back();
  std::vector<double> tail_cuts{0.0};
  for (int i = 1; i <= radial_panels; ++i) {
    tail_cuts.push_back(span * std::pow(static_cast<double>(i) / radial_panels, grading));
  }
  const QuadratureGrid tail = composite_gauss_legendre(tail_cuts, 1);

  std::vector<double> ts;
  std::vector<double> ds;
  std::vector<double> ws;
  for (std::size_t i = 0; i < body.nodes.size(); ++i) {
    ts.push_back(body.nodes[i]);
    ds.push_back(1.0 - body.nodes[i]);
    ws.push_back(body.weights[i]);
  }
  for (std::size_t i = 0; i < tail.nodes.size(); ++i) {
    ts.push_back(1.0 - tail.nodes[i]);
    ds.push_back(tail.nodes[i]);
    ws.push_back(tail.weights[i]);
  }

  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;
  std::vector<std::complex<double>> terms;
  terms.reserve(ts.size() * static_cast<std::size_t>(angular_nodes));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const double w = ws[i] * (alpha + 1.0) * std::pow(ds[i], alpha) / (2.0 * std::numbers::pi);
    const std::complex<double> av = eval_at_t(a, t);
    const double rad = radial(p2, q2, alpha, t) * radial(p, q, alpha, t);
    for (int m = 0; m < angular_nodes; ++m) {
      const double theta = m * dtheta;
      const std::complex<double> phase =
          std::polar(1.0, (p2 - q2) * theta) * std::conj(std::polar(1.0, (p - q) * theta));
      terms.push_back(w * dtheta * av * rad * phase);
    }
  }
  return pairwise_sum<std::complex<double>>(terms);
}

}  // namespace polyberg
