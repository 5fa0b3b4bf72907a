#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyberg/gammaseq.hpp"

namespace polyberg {

/// Relative tolerances; each check multiplies them by the scale of the matrix or row at hand.
struct Tolerances {
  double zero = 1e-10;
  double nonzero = 1e-8;
};

struct AntitriangularReport {
  int p = 0;
  double below_max = 0.0;  // max |M_jk| over j + k < p
  double anti_min = 0.0;   // min |M_jk| over j + k = p; +inf when that antidiagonal is empty
  double scale = 1.0;
  bool holds = false;
  bool zero_matrix = false;  // p > 2 order - 2 and every entry is below tolerance
};

/// Default scale is max |entry| (1 for the zero matrix). A p beyond the last
/// antidiagonal asks whether M vanishes; a negative p holds vacuously.
template <class Scalar>
AntitriangularReport antitriangular_report(const Matrix<Scalar>& m, int p, Tolerances tol = {},
                                           std::optional<double> scale = std::nullopt);

/// Report for gamma(g_p)_xi at index p - |xi|. When that index is past the last
/// antidiagonal the block should vanish, and its own max entry is roundoff, so the
/// scale switches to C(alpha+p, p), the size of g_p near t = 0.
AntitriangularReport gp_antitriangular_report(int n, double alpha, int xi, int p, Tolerances tol = {});

/// Coefficients nu[p][j], 0 <= p <= j < n.
template <class Scalar>
struct NuTable {
  int n = 0;
  std::vector<std::vector<Scalar>> nu;

  Scalar operator()(int p, int j) const { return nu.at(p).at(j); }
};

/// Runs the descending recursion after checking that G_{n-1} is a multiple of
/// E_{n-1,n-1}, (G_p)_{n-1,p} != 0 and (G_p)_{n-1,k} = 0 for k < p.
/// Violations raise PreconditionError naming the condition and entry.
template <class Scalar>
NuTable<Scalar> nu_table(const std::vector<Matrix<Scalar>>& g, Tolerances tol = {});

/// (sum_j conj(nu_pj) G_j^*) G_{n-1}^* G_{n-1} (sum_k nu_qk G_k), which is E_{p,q}.
template <class Scalar>
Matrix<Scalar> matrix_unit(const std::vector<Matrix<Scalar>>& g, const NuTable<Scalar>& nu, int p, int q);

/// X = (sum c A_k) A_middle^2 (sum c' A_k') with A_k = gamma(g_k).
struct SeparationPlan {
  int n = 1;
  double alpha = 0.0;
  int xi = 0;  // frequency at which X is a matrix unit
  std::vector<std::pair<double, int>> left;
  int middle = 0;
  std::vector<std::pair<double, int>> right;

  int max_symbol_index() const;
};

/// Plan with X_xi = E_{p,q}: generators gamma(g_{d-1+|xi|+j})_xi, middle g_{2d+|xi|-2}.
SeparationPlan same_frequency_plan(int n, double alpha, int xi, int p, int q, Tolerances tol = {});

/// Which of the four frequency orderings a pair xi < eta falls in.
enum class FrequencyCase { both_nonnegative, both_negative, mixed_near, mixed_far };

FrequencyCase frequency_case(int xi, int eta);

/// Plan with X_eta = E_{p,p} and X_xi = 0, for xi < eta. In every case the
/// generator indices coincide with the same-frequency recipe at eta; X_xi
/// vanishes because gamma(g_{2n-2+eta})_xi is the zero matrix.
SeparationPlan cross_frequency_plan(int n, double alpha, int xi, int eta, int p, Tolerances tol = {});

/// Evaluates a plan as a sequence truncated at xi_max.
MatrixSeq<double> evaluate_plan(const SeparationPlan& plan, int xi_max);

nlohmann::json plan_to_json(const SeparationPlan& plan);

}  // namespace polyberg
