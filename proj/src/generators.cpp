#include "polyberg/generators.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "polyberg/errors.hpp"
#include "polyberg/special_fn.hpp"

namespace polyberg {

template <class Scalar>
AntitriangularReport antitriangular_report(const Matrix<Scalar>& m, int p, Tolerances tol,
                                           std::optional<double> scale) {
  if (m.rows() != m.cols()) throw DomainError("antitriangular_report: matrix must be square");
  AntitriangularReport r;
  r.p = p;
  const double max_abs = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  r.scale = scale ? *scale : (max_abs > 0.0 ? max_abs : 1.0);
  r.anti_min = std::numeric_limits<double>::infinity();
  const int d = static_cast<int>(m.rows());
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const double v = std::abs(m(j, k));
      if (j + k < p) r.below_max = std::max(r.below_max, v);
      if (j + k == p) r.anti_min = std::min(r.anti_min, v);
    }
  }
  const bool below_ok = r.below_max < tol.zero * r.scale;
  if (p > 2 * d - 2) {
    r.zero_matrix = below_ok;
    r.holds = below_ok;
  } else {
    r.holds = below_ok && (p < 0 || r.anti_min > tol.nonzero * r.scale);
  }
  return r;
}

AntitriangularReport gp_antitriangular_report(int n, double alpha, int xi, int p, Tolerances tol) {
  const RealMatrix m = gamma_matrix<double>(make_gp(p, alpha), n, alpha, xi);
  const int shift = p - std::abs(xi);
  std::optional<double> scale;
  if (shift > 2 * static_cast<int>(m.rows()) - 2) scale = binomial(alpha + p, p);
  return antitriangular_report(m, shift, tol, scale);
}

template <class Scalar>
NuTable<Scalar> nu_table(const std::vector<Matrix<Scalar>>& g, Tolerances tol) {
  const int n = static_cast<int>(g.size());
  if (n == 0) throw DomainError("nu_table: no generators");
  for (const auto& m : g) {
    if (m.rows() != n || m.cols() != n) throw DomainError("nu_table: generators must be n x n");
  }
  const int last = n - 1;
  const Matrix<Scalar>& gl = g[last];
  const double gl_scale = gl.cwiseAbs().maxCoeff();
  const Scalar c = gl(last, last);
  if (!(gl_scale > 0.0) || !(std::abs(c) > tol.nonzero * gl_scale)) {
    throw PreconditionError("last generator is a nonzero multiple of E_{n-1,n-1}", last, last, last,
                            "nu_table: corner entry of G_{n-1} vanishes");
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if ((j != last || k != last) && !(std::abs(gl(j, k)) <= tol.zero * gl_scale)) {
        throw PreconditionError("last generator is a nonzero multiple of E_{n-1,n-1}", last, j, k,
                                "nu_table: G_{n-1} has a nonzero entry off the corner at (" +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  for (int p = 0; p < last; ++p) {
    const auto row = g[p].row(last);
    const double row_scale = row.cwiseAbs().maxCoeff();
    if (!(row_scale > 0.0) || !(std::abs(row(p)) > tol.nonzero * row_scale)) {
      throw PreconditionError("(G_p)_{n-1,p} is nonzero", p, last, p,
                              "nu_table: (G_" + std::to_string(p) + ")_{n-1,p} vanishes");
    }
    for (int k = 0; k < p; ++k) {
      if (!(std::abs(row(k)) <= tol.zero * row_scale)) {
        throw PreconditionError("(G_p)_{n-1,k} = 0 for k < p", p, last, k,
                                "nu_table: (G_" + std::to_string(p) + ")_{n-1," + std::to_string(k) +
                                    "} is not zero");
      }
    }
  }

  NuTable<Scalar> t;
  t.n = n;
  t.nu.assign(n, std::vector<Scalar>(n, Scalar(0)));
  t.nu[last][last] = Scalar(1) / (c * c);
  for (int p = last - 1; p >= 0; --p) {
    const Scalar pivot = g[p](last, p);
    t.nu[p][p] = Scalar(1) / (pivot * c);
    for (int j = p + 1; j < n; ++j) {
      Scalar s(0);
      for (int q = p + 1; q <= j; ++q) s += t.nu[q][j] * g[p](last, q);
      t.nu[p][j] = -s / pivot;
    }
  }
  return t;
}

template <class Scalar>
Matrix<Scalar> matrix_unit(const std::vector<Matrix<Scalar>>& g, const NuTable<Scalar>& nu, int p, int q) {
  const int n = nu.n;
  if (p < 0 || q < 0 || p >= n || q >= n) throw IndexError("matrix_unit: index out of range");
  Matrix<Scalar> left = Matrix<Scalar>::Zero(n, n);
  Matrix<Scalar> right = Matrix<Scalar>::Zero(n, n);
  for (int j = p; j < n; ++j) left += nu(p, j) * g[j];
  for (int k = q; k < n; ++k) right += nu(q, k) * g[k];
  const Matrix<Scalar>& gl = g[n - 1];
  return left.adjoint() * (gl.adjoint() * gl) * right;
}

int SeparationPlan::max_symbol_index() const {
  int m = middle;
  for (const auto& [c, k] : left) m = std::max(m, k);
  for (const auto& [c, k] : right) m = std::max(m, k);
  return m;
}

SeparationPlan same_frequency_plan(int n, double alpha, int xi, int p, int q, Tolerances tol) {
  const int d = block_order(n, xi);
  if (p < 0 || q < 0 || p >= d || q >= d) throw IndexError("same_frequency_plan: index out of range");
  const int base = d - 1 + std::abs(xi);
  std::vector<RealMatrix> gens;
  for (int j = 0; j < d; ++j) gens.push_back(gamma_matrix<double>(make_gp(base + j, alpha), n, alpha, xi));
  const NuTable<double> nu = nu_table(gens, tol);
  SeparationPlan plan;
  plan.n = n;
  plan.alpha = alpha;
  plan.xi = xi;
  for (int j = p; j < d; ++j) plan.left.emplace_back(nu(p, j), base + j);
  plan.middle = 2 * d + std::abs(xi) - 2;
  for (int j = q; j < d; ++j) plan.right.emplace_back(nu(q, j), base + j);
  return plan;
}

FrequencyCase frequency_case(int xi, int eta) {
  if (!(xi < eta)) throw DomainError("frequency_case: need xi < eta");
  if (xi >= 0) return FrequencyCase::both_nonnegative;
  if (eta < 0) return FrequencyCase::both_negative;
  return -xi <= eta ? FrequencyCase::mixed_near : FrequencyCase::mixed_far;
}

SeparationPlan cross_frequency_plan(int n, double alpha, int xi, int eta, int p, Tolerances tol) {
  if (!(xi < eta)) throw DomainError("cross_frequency_plan: need xi < eta");
  block_order(n, xi);
  // Case b (both negative) uses A_{n-1+j}; the others use A_{n-1+eta+j}. Both are
  // d-1+|eta|+j with d = d_{n,eta}, so the same-frequency recipe covers every case.
  frequency_case(xi, eta);
  return same_frequency_plan(n, alpha, eta, p, p, tol);
}

MatrixSeq<double> evaluate_plan(const SeparationPlan& plan, int xi_max) {
  std::map<int, MatrixSeq<double>> seqs;
  auto seq = [&](int k) -> const MatrixSeq<double>& {
    auto it = seqs.find(k);
    if (it == seqs.end()) {
      it = seqs.emplace(k, gamma_sequence<double>(make_gp(k, plan.alpha), plan.n, plan.alpha, xi_max)).first;
    }
    return it->second;
  };
  auto combo = [&](const std::vector<std::pair<double, int>>& terms) {
    MatrixSeq<double> s = 0.0 * seq(terms.front().second);
    for (const auto& [c, k] : terms) s = s + c * seq(k);
    return s;
  };
  if (plan.left.empty() || plan.right.empty()) throw DomainError("evaluate_plan: empty combination");
  const MatrixSeq<double>& mid = seq(plan.middle);
  return combo(plan.left) * (mid * mid) * combo(plan.right);
}

nlohmann::json plan_to_json(const SeparationPlan& plan) {
  auto terms = [](const std::vector<std::pair<double, int>>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [c, k] : v) a.push_back({c, k});
    return a;
  };
  return {{"left", terms(plan.left)}, {"middle", plan.middle}, {"right", terms(plan.right)},
          {"n", plan.n},           {"alpha", plan.alpha}};
}

#define POLYBERG_INSTANTIATE(S)                                                                        \
  template AntitriangularReport antitriangular_report<S>(const Matrix<S>&, int, Tolerances,           \
                                                         std::optional<double>);                       \
  template NuTable<S> nu_table<S>(const std::vector<Matrix<S>>&, Tolerances);                          \
  template Matrix<S> matrix_unit<S>(const std::vector<Matrix<S>>&, const NuTable<S>&, int, int);

POLYBERG_INSTANTIATE(double)
POLYBERG_INSTANTIATE(std::complex<double>)

#undef POLYBERG_INSTANTIATE

}  // namespace polyberg
