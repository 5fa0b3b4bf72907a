#pragma once

#include <complex>
#include <vector>

#include "polyberg/symbols.hpp"

namespace polyberg {

/// Largest k + |xi| the exact moment table serves.
inline constexpr int kMaxMomentIndex = 192;

/// Monomial moment of the Jacobi weight: integral of t^k (1-t)^alpha t^{xi_abs} over (0, 1).
struct MomentKey {
  int k = 0;
  double alpha = 0.0;
  int xi_abs = 0;

  void validate() const;
};

/// B(xi_abs + k + 1, alpha + 1). Cached; identical keys give bitwise-identical values.
double moment(const MomentKey& key);

/// Integral of t^{xi_abs + k} (1-t)^alpha over (0, x) = B(..) I_x(xi_abs + k + 1, alpha + 1).
double truncated_moment(const MomentKey& key, double x);

/// How an entry integral is computed for a given symbol.
enum class EntryAccuracy {
  exact,       ///< closed-form Beta moments (polynomial and indicator symbols)
  quadrature,  ///< composite Gauss-Legendre on sampled data
  degraded,    ///< quadrature against an endpoint-singular weight (alpha < 0)
};

EntryAccuracy entry_accuracy(const Symbol& a, double alpha);

/// Panels of the composite rule used for sampled symbols.
inline constexpr int kSampledPanels = 256;

/// beta_{a,alpha,xi,j,k}: the integral of a(sqrt t) J_j^{(alpha,|xi|)}(t) J_k^{(alpha,|xi|)}(t) over (0, 1).
std::complex<double> beta_entry(const Symbol& a, double alpha, int xi, int j, int k);

/// All entries with 0 <= j, k < order, row-major. Bitwise equal to calling
/// beta_entry entry by entry.
std::vector<std::complex<double>> beta_block(const Symbol& a, double alpha, int xi, int order);

}  // namespace polyberg
