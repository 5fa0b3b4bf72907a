#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace polyberg {

/// Sum in a fixed binary-tree order; the result depends only on the input order.
template <class T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T(0);
  if (v.size() <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

/// 4-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre4 {
  std::array<double, 4> nodes;
  std::array<double, 4> weights;
};

inline const GaussLegendre4& gauss_legendre4() {
  static const GaussLegendre4 rule = [] {
    const double inner = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
    const double outer = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
    const double w_inner = (18.0 + std::sqrt(30.0)) / 36.0;
    const double w_outer = (18.0 - std::sqrt(30.0)) / 36.0;
    return GaussLegendre4{{-outer, -inner, inner, outer}, {w_outer, w_inner, w_inner, w_outer}};
  }();
  return rule;
}

/// Nodes and weights of the composite 4-point rule with `panels` equal panels
/// on each of the intervals delimited by `cuts` (which must include lo and hi).
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline QuadratureGrid composite_gauss_legendre(std::span<const double> cuts, int panels) {
  const auto& rule = gauss_legendre4();
  QuadratureGrid g;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double lo = cuts[c];
    const double hi = cuts[c + 1];
    if (!(hi > lo)) continue;
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = lo + (p + 0.5) * h;
      for (int i = 0; i < 4; ++i) {
        g.nodes.push_back(mid + 0.5 * h * rule.nodes[i]);
        g.weights.push_back(0.5 * h * rule.weights[i]);
      }
    }
  }
  return g;
}

}  // namespace polyberg
