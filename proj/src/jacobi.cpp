#include "polyberg/jacobi.hpp"

#include <cmath>
#include <string>

#include "polyberg/errors.hpp"
#include "polyberg/special_fn.hpp"

namespace polyberg {

void JacobiParams::validate() const {
  if (!(alpha > -1.0)) throw DomainError("JacobiParams: alpha must exceed -1");
  if (!(beta > -1.0)) throw DomainError("JacobiParams: beta must exceed -1");
  if (m < 0) throw DomainError("JacobiParams: degree must be nonnegative");
}

PolyCoeffs q_coeffs(const JacobiParams& p) {
  p.validate();
  if (p.m > kMaxDegree) {
    throw UnsupportedError("q_coeffs: degree " + std::to_string(p.m) + " exceeds " +
                           std::to_string(kMaxDegree));
  }
  return q_coeffs_as<double>(p);
}

namespace {

struct Split {
  double hi;
  double lo;
};

Split two_sum(double a, double b) {
  const double s = a + b;
  const double z = s - a;
  return {s, (a - (s - z)) + (b - z)};
}

Split two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace

double horner_compensated(std::span<const double> coeffs, double t) {
  if (coeffs.empty()) return 0.0;
  std::size_t i = coeffs.size() - 1;
  double s = coeffs[i];
  double err = 0.0;
  while (i-- > 0) {
    const Split prod = two_product(s, t);
    const Split sum = two_sum(prod.hi, coeffs[i]);
    s = sum.hi;
    err = err * t + (prod.lo + sum.lo);
  }
  return s + err;
}

double q_eval(const JacobiParams& p, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("q_eval: t must lie in [0, 1]");
  q_coeffs(p);  // validation and degree cap
  // Expanded coefficients alternate and grow like binomials, so the sum
  // cancels badly near the interior; quad precision absorbs that.
  const auto c = q_coeffs_as<__float128>(p);
  __float128 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return static_cast<double>(acc);
}

double jac_norm_coeff(const JacobiParams& p) {
  p.validate();
  const double a = p.alpha;
  const double b = p.beta;
  const double m = p.m;
  const double log_sq = std::log(2.0 * m + a + b + 1.0) + log_gamma(m + a + b + 1.0) +
                        log_gamma(m + 1.0) - log_gamma(m + a + 1.0) - log_gamma(m + b + 1.0);
  return std::exp(0.5 * log_sq);
}

double jac_norm_coeff_binomial(double alpha, int beta, int m) {
  JacobiParams{alpha, static_cast<double>(beta), m}.validate();
  if (beta < 0) throw DomainError("jac_norm_coeff_binomial: beta must be a nonnegative integer");
  const double sq = (2.0 * m + alpha + beta + 1.0) * binomial(m + alpha + beta, beta) /
                    binomial(static_cast<double>(m + beta), beta);
  return std::sqrt(sq);
}

double jac_fn_eval(const JacobiParams& p, double t) {
  p.validate();
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("jac_fn_eval: t must lie in [0, 1]");
  if ((t == 1.0 && p.alpha < 0.0) || (t == 0.0 && p.beta < 0.0)) {
    throw DomainError("jac_fn_eval: endpoint is singular for a negative exponent");
  }
  const double weight = std::pow(1.0 - t, 0.5 * p.alpha) * std::pow(t, 0.5 * p.beta);
  return jac_norm_coeff(p) * weight * q_eval(p, t);
}

double jac_sup_bound(const JacobiParams& p, double x) {
  p.validate();
  if (!(p.alpha > 0.0)) {
    throw UnsupportedError("jac_sup_bound: bound is unproven for alpha <= 0");
  }
  if (!(x > 0.0 && x < 1.0)) throw DomainError("jac_sup_bound: x must lie in (0, 1)");
  const double base = 2.0 * p.m + p.alpha + p.beta + 1.0;
  return std::pow(base, p.m + 1.0 + 0.5 * (p.alpha + 1.0)) * std::pow(x, 0.5 * p.beta);
}

}  // namespace polyberg
