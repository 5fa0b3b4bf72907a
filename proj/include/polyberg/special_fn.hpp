#pragma once

namespace polyberg {

/// ln Gamma(z) for z > 0. Series about 1 and 2 on [0.5, 2.5), Lanczos beyond.
double log_gamma(double z);

/// Euler Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
double beta(double x, double y);

/// Regularized incomplete Beta I_x(p, q), Lentz continued fraction.
double reg_incomplete_beta(double x, double p, double q);

/// Binomial coefficient with real upper index, C(top, k) as a product of k factors.
double binomial(double top, int k);

/// Gamma(z + a) / Gamma(z) <= (z + a)^a, checked with relative slack 1e-12.
bool wendel_bound_holds(double z, double a);

/// C(z + k, k) <= (z + k)^k / k!, checked with relative slack 1e-12.
bool binom_bound_holds(double z, int k);

}  // namespace polyberg
