#pragma once

#include <span>
#include <vector>

namespace polyberg {

/// Highest polynomial degree accepted by the monomial representation.
inline constexpr int kMaxDegree = 64;

/// Index triple of the shifted Jacobi polynomial Q_m^{(alpha, beta)} on (0, 1).
/// `alpha` is the weight exponent at t = 1, `beta` the exponent at t = 0.
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;
  int m = 0;

  /// Throws DomainError unless alpha > -1, beta > -1, m >= 0.
  void validate() const;
};

/// Monomial coefficients in t, index = degree.
using PolyCoeffs = std::vector<double>;

/// Coefficients of Q_m^{(alpha,beta)}(t) = sum_k C(a+b+m+k, k) C(b+m, m-k) (-1)^{m-k} t^k,
/// evaluated in the arithmetic of `Real`.
template <class Real>
std::vector<Real> q_coeffs_as(const JacobiParams& p) {
  std::vector<Real> c(static_cast<std::size_t>(p.m) + 1);
  const Real a = p.alpha;
  const Real b = p.beta;
  for (int k = 0; k <= p.m; ++k) {
    Real first = 1;
    for (int i = 0; i < k; ++i) first *= (a + b + Real(p.m + k - i)) / Real(i + 1);
    Real second = 1;
    for (int i = 0; i < p.m - k; ++i) second *= (b + Real(p.m - i)) / Real(i + 1);
    const Real v = first * second;
    c[static_cast<std::size_t>(k)] = ((p.m - k) % 2 == 0) ? v : -v;
  }
  return c;
}

/// Q_m^{(alpha,beta)} coefficients. Throws UnsupportedError for m > kMaxDegree.
PolyCoeffs q_coeffs(const JacobiParams& p);

/// Horner evaluation with error-free transformations; accurate as if computed
/// in twice the working precision.
double horner_compensated(std::span<const double> coeffs, double t);

/// Q_m^{(alpha,beta)}(t) for t in [0, 1].
double q_eval(const JacobiParams& p, double t);

/// Normalizing coefficient k(alpha, beta, m) making J_m orthonormal on (0, 1).
double jac_norm_coeff(const JacobiParams& p);

/// The same coefficient for integer beta, via
/// k^2 = (2m + a + b + 1) C(m + a + b, b) / C(m + b, b).
double jac_norm_coeff_binomial(double alpha, int beta, int m);

/// J_m^{(alpha,beta)}(t) = k (1-t)^{alpha/2} t^{beta/2} Q_m(t).
double jac_fn_eval(const JacobiParams& p, double t);

/// Upper bound (2m + a + b + 1)^{m + 1 + (a+1)/2} x^{b/2} for sup_{[0,x]} |J_m|.
/// Only proven for alpha > 0; other alphas throw UnsupportedError.
double jac_sup_bound(const JacobiParams& p, double x);

}  // namespace polyberg
