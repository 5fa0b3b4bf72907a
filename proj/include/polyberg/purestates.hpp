#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "polyberg/gammaseq.hpp"
#include "polyberg/generators.hpp"

namespace polyberg {

using ComplexVector = Eigen::VectorXcd;

/// sigma_{xi,u}: A -> <A_xi u, u>.
struct FiniteState {
  int xi = 0;
  ComplexVector u;
};

/// sigma_inf: A -> omega.
struct InfinityState {};

using PureState = std::variant<FiniteState, InfinityState>;

/// Checks dim u = d_{n,xi} and | ||u|| - 1 | <= 1e-12.
FiniteState finite_state(int n, int xi, ComplexVector u);

/// Same frequency and u = c v with |c| = 1, or both infinite.
bool same_state(const PureState& a, const PureState& b, double tol = 1e-10);

std::complex<double> eval_state(const PureState& s, const MatrixSeq<double>& a);
std::complex<double> eval_state(const PureState& s, const MatrixSeq<std::complex<double>>& a);

/// sum_{j,k} conj(u_j) u_k beta_{a,alpha,xi,j,k}, the expansion of int a |F|^2.
std::complex<double> eval_state_integral(int xi, const ComplexVector& u, const Symbol& a, int n, double alpha);

/// (p, q) with u_p conj(u_q) != v_p conj(v_q). NotSeparableError for dependent vectors.
std::pair<int, int> witness_indices(const ComplexVector& u, const ComplexVector& v);

/// Outcome of `separate`: a sequence X with first = s1(X), second = s2(X).
struct Separation {
  std::string method;                  // "same_frequency", "limit", "cross_frequency"
  MatrixSeq<std::complex<double>> witness;
  std::optional<Symbol> symbol;        // set when X = gamma(symbol)
  std::vector<SeparationPlan> plans;   // plans whose evaluations build X
  std::complex<double> first;
  std::complex<double> second;
  double gap = 0.0;
};

/// Builds a separating element for two pure states. Raises NotSeparableError for
/// equal states and for the documented coincidence families.
Separation separate(const PureState& s1, const PureState& s2, int n, double alpha, Tolerances tol = {});

/// (0, u) and (2, e_0) with u = (sqrt((alpha+3)/(2(alpha+2))), sqrt((alpha+1)/(2(alpha+2))), 0, ...).
/// They agree on every gamma(a). Requires n >= 2.
std::pair<FiniteState, FiniteState> coincidence_pair(int n, double alpha);

/// (-eta, e_0) and (eta, e_0), 1 <= eta <= n-1: gamma_{-eta} is a leading block of gamma_eta.
std::pair<FiniteState, FiniteState> submatrix_coincidence_pair(int n, int eta);

/// Name of the documented coincidence family containing the pair, if any.
std::optional<std::string> documented_coincidence(const PureState& a, const PureState& b, int n, double alpha,
                                                  double tol = 1e-10);

/// X_2 = I_n, every other block zero, limit 0.
MatrixSeq<double> closure_gap_witness(int n, double alpha, int xi_max);

}  // namespace polyberg
