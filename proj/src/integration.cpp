#include "polyberg/integration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include <quadmath.h>

#include "polyberg/errors.hpp"
#include "polyberg/jacobi.hpp"
#include "polyberg/quadrature.hpp"

namespace polyberg {
namespace {

// Extended precision for the exact path. Monomial expansions of Q_j Q_k
// cancel heavily; double loses every digit of small entries by degree ~14.
using wide = __float128;

constexpr int kMaxMoment = kMaxMomentIndex;

void check_alpha(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > -1");
}

// B(m + 1, alpha + 1) for m = 0..top, built by the ratio m / (m + alpha + 1).
class MomentCache {
 public:
  std::vector<wide> upto(double alpha, int top) {
    const std::uint64_t key = std::bit_cast<std::uint64_t>(alpha);
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end() && static_cast<int>(it->second.size()) > top) {
        return {it->second.begin(), it->second.begin() + top + 1};
      }
    }
    std::unique_lock lock(mu_);
    auto& v = table_[key];
    if (v.empty()) v.push_back(wide(1) / (wide(alpha) + 1));
    while (static_cast<int>(v.size()) <= top) {
      const int m = static_cast<int>(v.size());
      v.push_back(v.back() * wide(m) / (wide(alpha) + wide(m + 1)));
    }
    return {v.begin(), v.begin() + top + 1};
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<std::uint64_t, std::vector<wide>> table_;
};

MomentCache& cache() {
  static MomentCache c;
  return c;
}

// Integrals of t^m (1-t)^alpha over (0, x), m = 0..top. With P = (1-x)^{alpha+1},
// T_m = M_m (1 - P sum_{i<=m} (alpha+1)_i / i! x^i).
// Integral of t^m (1-t)^alpha over [0, x] for m = 0..top. The top moment comes from
// the incomplete Beta series, whose terms are all positive (or from the complement
// series in 1 - x when x is close to 1), and the rest from the downward recurrence
//   T_m = ((m + alpha + 2) T_{m+1} + x^{m+1} (1-x)^{alpha+1}) / (m + 1),
// which also only adds positive terms. Nothing cancels, so tiny moments keep full
// relative precision.
std::vector<wide> truncated_upto(double alpha, int top, double x) {
  std::vector<wide> full = cache().upto(alpha, top);
  if (x >= 1.0) return full;
  std::vector<wide> out(full.size(), wide(0));
  if (x <= 0.0) return out;
  const wide wx = x;
  const wide wy = wide(1) - wx;
  const wide a1 = wide(alpha) + 1;
  const wide y_pow = expq(a1 * log1pq(-wx));  // (1-x)^{alpha+1}
  std::vector<wide> x_pow(top + 2);           // x^{m+1} at index m
  x_pow[0] = wx;
  for (int m = 1; m <= top + 1; ++m) x_pow[m] = x_pow[m - 1] * wx;

  const wide eps = FLT128_EPSILON;
  const wide ab = wide(top) + a1 + 1;
  wide t_top;
  if (x <= 0.9) {
    wide term = wide(1) / wide(top + 1);
    wide sum = term;
    for (int i = 0; term > eps * sum; ++i) {
      term *= (ab + i) / wide(top + 2 + i) * wx;
      sum += term;
    }
    t_top = x_pow[top] * y_pow * sum;
  } else {
    wide term = wide(1) / a1;
    wide sum = term;
    for (int i = 0; term > eps * sum || i < top; ++i) {
      term *= (ab + i) / (a1 + 1 + i) * wy;
      sum += term;
    }
    t_top = full[top] - x_pow[top] * y_pow * sum;
  }
  out[top] = t_top;
  for (int m = top - 1; m >= 0; --m) {
    out[m] = ((wide(m) + a1 + 1) * out[m + 1] + x_pow[m] * y_pow) / wide(m + 1);
  }
  return out;
}

// Shared work for every entry of one (symbol, alpha, |xi|, order) block.
struct Kernel {
  bool quadrature = false;
  std::complex<double> scale{1.0, 0.0};
  std::vector<std::vector<wide>> q;  // Q_j^{(alpha,|xi|)} coefficients
  std::vector<wide> weights;         // integral of a(sqrt t) t^i (1-t)^alpha t^|xi|
  std::vector<double> norms;
  std::vector<wide> norms_sq;  // k^2 in wide, for the exact path
  // Sampled path: J_j at the quadrature nodes and a at the nodes times the weight.
  std::vector<std::vector<double>> jac_at_nodes;
  std::vector<double> a_times_w;

  Kernel(const Symbol& a, double alpha, int xi_abs, int order) {
    check_alpha(alpha);
    norms.resize(order);
    norms_sq.resize(order);
    for (int j = 0; j < order; ++j) {
      norms[j] = jac_norm_coeff_binomial(alpha, xi_abs, j);
      // (2j + a + b + 1) C(j + a + b, b) / C(j + b, b), a = alpha, b = xi_abs
      wide sq = wide(2 * j + xi_abs + 1) + wide(alpha);
      for (int i = 1; i <= xi_abs; ++i) sq *= (wide(j + i) + wide(alpha)) / wide(j + i);
      norms_sq[j] = sq;
    }

    if (a.is<SampledSymbol>()) {
      quadrature = true;
      // The uniform panels are split at the table abscissae: linear interpolation
      // has a kink at each one, and a 4-point rule straddling kinks loses digits.
      const auto& table = a.as<SampledSymbol>().t;
      std::vector<double> cuts;
      cuts.reserve(kSampledPanels + table.size() + 1);
      for (int i = 0; i <= kSampledPanels; ++i) cuts.push_back(double(i) / kSampledPanels);
      for (double t : table) {
        if (t > 0.0 && t < 1.0) cuts.push_back(t);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      const QuadratureGrid g = composite_gauss_legendre(cuts, 1);
      a_times_w.resize(g.nodes.size());
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        a_times_w[i] = g.weights[i] * eval_at_t(a, g.nodes[i]).real();
      }
      jac_at_nodes.assign(order, std::vector<double>(g.nodes.size()));
      for (int j = 0; j < order; ++j) {
        const JacobiParams jp{alpha, static_cast<double>(xi_abs), j};
        q_coeffs(jp);  // validation and degree cap
        const std::vector<wide> c = q_coeffs_as<wide>(jp);
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
          const double t = g.nodes[i];
          wide qv = 0;
          for (auto it = c.rbegin(); it != c.rend(); ++it) qv = qv * wide(t) + *it;
          jac_at_nodes[j][i] = norms[j] * std::pow(1.0 - t, 0.5 * alpha) *
                               std::pow(t, 0.5 * xi_abs) * static_cast<double>(qv);
        }
      }
      return;
    }

    std::vector<wide> acoef;
    double cut = 1.0;
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ConstSymbol>) {
            acoef = {wide(1)};
            scale = s.value;
          } else if constexpr (std::is_same_v<T, IndicatorSymbol>) {
            acoef = {wide(1)};
            cut = s.s * s.s;
          } else if constexpr (std::is_same_v<T, PolySymbol>) {
            for (double c : s.coeffs) acoef.push_back(wide(c));
          } else if constexpr (std::is_same_v<T, JacobiGSymbol>) {
            if (s.alpha != alpha) throw DomainError("jacobi_g symbol bound to a different alpha");
            acoef = q_coeffs_as<wide>(JacobiParams{s.alpha, 0.0, s.p});
          }
        },
        a.kind());

    const int deg_q = order > 0 ? order - 1 : 0;
    const int deg_a = static_cast<int>(acoef.size()) - 1;
    const int top = xi_abs + 2 * deg_q + deg_a;
    if (top > kMaxMoment) throw UnsupportedError("moment degree exceeds the supported range");
    if (order > kMaxDegree + 1) throw UnsupportedError("matrix order exceeds the supported degree");
    const std::vector<wide> mom = truncated_upto(alpha, top, cut);

    weights.assign(2 * deg_q + 1, wide(0));
    for (int i = 0; i <= 2 * deg_q; ++i) {
      wide s = 0;
      for (int l = 0; l <= deg_a; ++l) s += acoef[l] * mom[xi_abs + i + l];
      weights[i] = s;
    }
    q.resize(order);
    for (int j = 0; j < order; ++j) {
      q[j] = q_coeffs_as<wide>(JacobiParams{alpha, static_cast<double>(xi_abs), j});
    }
  }

  std::complex<double> entry(int j, int k) const {
    if (j > k) std::swap(j, k);
    if (quadrature) {
      std::vector<double> terms(a_times_w.size());
      for (std::size_t i = 0; i < terms.size(); ++i) {
        terms[i] = a_times_w[i] * jac_at_nodes[j][i] * jac_at_nodes[k][i];
      }
      return {pairwise_sum<double>(terms), 0.0};
    }
    wide s = 0;
    for (std::size_t u = 0; u < q[j].size(); ++u) {
      wide inner = 0;
      for (std::size_t v = 0; v < q[k].size(); ++v) inner += q[k][v] * weights[u + v];
      s += q[j][u] * inner;
    }
    const double base = static_cast<double>(sqrtq(norms_sq[j] * norms_sq[k]) * s);
    return scale * base;
  }
};

void check_indices(int j, int k) {
  if (j < 0 || k < 0) throw IndexError("beta_entry: indices must be nonnegative");
}

}  // namespace

void MomentKey::validate() const {
  check_alpha(alpha);
  if (k < 0 || xi_abs < 0) throw DomainError("MomentKey: k and xi_abs must be nonnegative");
  if (k + xi_abs > kMaxMoment) throw UnsupportedError("MomentKey: k + xi_abs exceeds " + std::to_string(kMaxMoment));
}

double moment(const MomentKey& key) {
  key.validate();
  const int m = key.k + key.xi_abs;
  return static_cast<double>(cache().upto(key.alpha, m)[m]);
}

double truncated_moment(const MomentKey& key, double x) {
  key.validate();
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("truncated_moment: x must lie in [0, 1]");
  const int m = key.k + key.xi_abs;
  return static_cast<double>(truncated_upto(key.alpha, m, x)[m]);
}

EntryAccuracy entry_accuracy(const Symbol& a, double alpha) {
  check_alpha(alpha);
  if (!a.is<SampledSymbol>()) return EntryAccuracy::exact;
  return alpha < 0.0 ? EntryAccuracy::degraded : EntryAccuracy::quadrature;
}

std::complex<double> beta_entry(const Symbol& a, double alpha, int xi, int j, int k) {
  check_indices(j, k);
  const Kernel kern(a, alpha, std::abs(xi), std::max(j, k) + 1);
  return kern.entry(j, k);
}

std::vector<std::complex<double>> beta_block(const Symbol& a, double alpha, int xi, int order) {
  if (order < 0) throw IndexError("beta_block: negative order");
  const Kernel kern(a, alpha, std::abs(xi), order);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(order) * order);
  for (int j = 0; j < order; ++j) {
    for (int k = j; k < order; ++k) {
      const auto v = kern.entry(j, k);
      out[j * order + k] = v;
      out[k * order + j] = v;
    }
  }
  return out;
}

}  // namespace polyberg
