#include "polyberg/purestates.hpp"

#include <cmath>

#include "polyberg/errors.hpp"
#include "polyberg/integration.hpp"

namespace polyberg {
namespace {

constexpr double kEntryTol = 1e-10;

// Unimodular c with u = c v, if any (sup-norm tolerance).
bool proportional(const ComplexVector& u, const ComplexVector& v, double tol) {
  if (u.size() != v.size()) return false;
  const std::complex<double> ip = v.dot(u);  // v^H u
  if (std::abs(ip) == 0.0) return false;
  const std::complex<double> c = ip / std::abs(ip);
  return (u - c * v).cwiseAbs().maxCoeff() <= tol;
}

bool is_real(const ComplexVector& u) { return u.imag().cwiseAbs().maxCoeff() == 0.0; }

template <class Scalar>
std::complex<double> eval_impl(const PureState& s, const MatrixSeq<Scalar>& a) {
  if (std::holds_alternative<InfinityState>(s)) {
    if (!a.scalar_limit) throw DomainError("eval_state: sequence has no scalar limit");
    return *a.scalar_limit;
  }
  const auto& f = std::get<FiniteState>(s);
  if (!a.has(f.xi)) throw IndexError("eval_state: frequency outside the truncation");
  const auto& m = a[f.xi];
  if (m.rows() != f.u.size()) throw DomainError("eval_state: vector dimension does not match the block");
  const ComplexVector au = m.template cast<std::complex<double>>() * f.u;
  return f.u.dot(au);
}

ComplexVector unit(int d, int i) {
  ComplexVector e = ComplexVector::Zero(d);
  e(i) = 1.0;
  return e;
}

}  // namespace

FiniteState finite_state(int n, int xi, ComplexVector u) {
  const int d = block_order(n, xi);
  if (u.size() != d) {
    throw DomainError("state vector has dimension " + std::to_string(u.size()) + ", frequency " +
                      std::to_string(xi) + " needs " + std::to_string(d));
  }
  if (std::abs(u.norm() - 1.0) > 1e-12) throw DomainError("state vector must have unit norm");
  return {xi, std::move(u)};
}

bool same_state(const PureState& a, const PureState& b, double tol) {
  const bool ia = std::holds_alternative<InfinityState>(a);
  const bool ib = std::holds_alternative<InfinityState>(b);
  if (ia || ib) return ia && ib;
  const auto& fa = std::get<FiniteState>(a);
  const auto& fb = std::get<FiniteState>(b);
  return fa.xi == fb.xi && proportional(fa.u, fb.u, tol);
}

std::complex<double> eval_state(const PureState& s, const MatrixSeq<double>& a) { return eval_impl(s, a); }

std::complex<double> eval_state(const PureState& s, const MatrixSeq<std::complex<double>>& a) {
  return eval_impl(s, a);
}

std::complex<double> eval_state_integral(int xi, const ComplexVector& u, const Symbol& a, int n, double alpha) {
  const int d = block_order(n, xi);
  if (u.size() != d) throw DomainError("eval_state_integral: vector dimension does not match the block");
  const auto b = beta_block(a, alpha, xi, d);
  std::complex<double> s = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) s += std::conj(u(j)) * u(k) * b[j * d + k];
  }
  return s;
}

std::pair<int, int> witness_indices(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) throw DomainError("witness_indices: dimensions differ");
  const int d = static_cast<int>(u.size());
  double cross = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) cross = std::max(cross, std::abs(u(j) * v(k) - u(k) * v(j)));
  }
  if (!(cross > kEntryTol)) throw NotSeparableError("witness_indices: vectors are proportional");
  int p = 0;
  while (p < d && !(std::abs(u(p)) > kEntryTol)) ++p;
  if (std::abs(std::abs(v(p)) - std::abs(u(p))) > kEntryTol) return {p, p};
  const std::complex<double> tau = v(p) / u(p);
  int q = 0;
  while (q < d && !(std::abs(v(q) - tau * u(q)) > kEntryTol)) ++q;
  if (q == d) throw NotSeparableError("witness_indices: vectors are proportional");
  return {p, q};
}

std::pair<FiniteState, FiniteState> coincidence_pair(int n, double alpha) {
  if (n < 2) throw UnsupportedError("coincidence_pair: needs n >= 2");
  if (!(alpha > -1.0)) throw DomainError("alpha must be > -1");
  ComplexVector u = ComplexVector::Zero(n);
  u(0) = std::sqrt((alpha + 3.0) / (2.0 * (alpha + 2.0)));
  u(1) = std::sqrt((alpha + 1.0) / (2.0 * (alpha + 2.0)));
  u /= u.norm();
  return {FiniteState{0, u}, FiniteState{2, unit(n, 0)}};
}

std::pair<FiniteState, FiniteState> submatrix_coincidence_pair(int n, int eta) {
  if (eta < 1 || eta > n - 1) throw DomainError("submatrix_coincidence_pair: need 1 <= eta <= n-1");
  return {FiniteState{-eta, unit(n - eta, 0)}, FiniteState{eta, unit(n, 0)}};
}

std::optional<std::string> documented_coincidence(const PureState& a, const PureState& b, int n, double alpha,
                                                  double tol) {
  if (std::holds_alternative<InfinityState>(a) || std::holds_alternative<InfinityState>(b)) return std::nullopt;
  auto fa = std::get<FiniteState>(a);
  auto fb = std::get<FiniteState>(b);
  if (fa.xi > fb.xi) std::swap(fa, fb);
  if (n >= 2 && fa.xi == 0 && fb.xi == 2) {
    const auto [s, t] = coincidence_pair(n, alpha);
    if (proportional(fa.u, s.u, tol) && proportional(fb.u, t.u, tol)) return "weighted pair at frequencies 0 and 2";
  }
  if (fb.xi >= 1 && fa.xi == -fb.xi && fb.xi <= n - 1) {
    const auto [s, t] = submatrix_coincidence_pair(n, fb.xi);
    if (proportional(fa.u, s.u, tol) && proportional(fb.u, t.u, tol)) {
      return "leading basis vector at frequencies -" + std::to_string(fb.xi) + " and " + std::to_string(fb.xi);
    }
  }
  return std::nullopt;
}

Separation separate(const PureState& s1, const PureState& s2, int n, double alpha, Tolerances tol) {
  if (same_state(s1, s2)) throw NotSeparableError("not separable by construction: the states are equal");
  if (auto fam = documented_coincidence(s1, s2, n, alpha)) {
    throw NotSeparableError("not separable by construction: documented coincidence (" + *fam + ")");
  }
  Separation out;
  auto finish = [&] {
    out.first = eval_state(s1, out.witness);
    out.second = eval_state(s2, out.witness);
    out.gap = std::abs(out.first - out.second);
    return out;
  };

  const bool inf1 = std::holds_alternative<InfinityState>(s1);
  const bool inf2 = std::holds_alternative<InfinityState>(s2);
  if (inf1 || inf2) {
    const auto& f = std::get<FiniteState>(inf1 ? s2 : s1);
    block_order(n, f.xi);
    out.method = "limit";
    out.symbol = Symbol::indicator(0.5);
    out.witness = complexify(gamma_sequence<double>(*out.symbol, n, alpha, std::max(0, f.xi)));
    return finish();
  }

  const auto& f1 = std::get<FiniteState>(s1);
  const auto& f2 = std::get<FiniteState>(s2);
  const int xi_max = std::max({0, f1.xi, f2.xi});
  if (f1.xi == f2.xi) {
    out.method = "same_frequency";
    const auto [p, q] = witness_indices(f1.u, f2.u);
    const SeparationPlan direct = same_frequency_plan(n, alpha, f1.xi, p, q, tol);
    out.plans.push_back(direct);
    if (p == q || (is_real(f1.u) && is_real(f2.u))) {
      out.witness = complexify(evaluate_plan(direct, xi_max));
      return finish();
    }
    // Hermitian parts E_pq + E_qp and i(E_pq - E_qp); keep the one with the larger gap.
    const SeparationPlan back = same_frequency_plan(n, alpha, f1.xi, q, p, tol);
    out.plans.push_back(back);
    const auto epq = complexify(evaluate_plan(direct, xi_max));
    const auto eqp = complexify(evaluate_plan(back, xi_max));
    const std::complex<double> i(0.0, 1.0);
    const auto re = epq + eqp;
    const auto im = i * (epq - eqp);
    const double gap_re = std::abs(eval_state(s1, re) - eval_state(s2, re));
    const double gap_im = std::abs(eval_state(s1, im) - eval_state(s2, im));
    out.witness = gap_re >= gap_im ? re : im;
    return finish();
  }

  out.method = "cross_frequency";
  const FiniteState& lo = f1.xi < f2.xi ? f1 : f2;
  const FiniteState& hi = f1.xi < f2.xi ? f2 : f1;
  int p = 0;
  for (int j = 1; j < hi.u.size(); ++j) {
    if (std::abs(hi.u(j)) > std::abs(hi.u(p))) p = j;
  }
  const SeparationPlan plan = cross_frequency_plan(n, alpha, lo.xi, hi.xi, p, tol);
  out.plans.push_back(plan);
  out.witness = complexify(evaluate_plan(plan, xi_max));
  return finish();
}

MatrixSeq<double> closure_gap_witness(int n, double alpha, int xi_max) {
  if (n < 2) throw UnsupportedError("closure_gap_witness: needs n >= 2");
  if (xi_max < 2) throw DomainError("closure_gap_witness: xi_max must be at least 2");
  MatrixSeq<double> x = MatrixSeq<double>::zeros(n, alpha, xi_max);
  x[2] = RealMatrix::Identity(n, n);
  return x;
}

}  // namespace polyberg
