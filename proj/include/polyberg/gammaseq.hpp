#pragma once

#include <complex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "polyberg/symbols.hpp"

namespace polyberg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <class T>
inline constexpr bool is_complex_v = false;
template <class T>
inline constexpr bool is_complex_v<std::complex<T>> = true;

/// d_{n,xi} = min(n + xi, n). Throws IndexError for xi < -n + 1.
int block_order(int n, int xi);

/// Truncated matrix sequence: blocks for xi = -n+1 .. xi_max plus an optional
/// scalar limit omega (meaning A_xi -> omega I_n).
template <class Scalar>
struct MatrixSeq {
  int n = 1;
  double alpha = 0.0;
  int xi_max = 0;
  std::vector<Matrix<Scalar>> mats;
  std::optional<Scalar> scalar_limit;
  std::optional<Symbol> symbol;  // generating symbol, when the sequence is some gamma(a)

  int xi_min() const noexcept { return -n + 1; }
  bool has(int xi) const noexcept { return xi >= xi_min() && xi <= xi_max; }

  const Matrix<Scalar>& operator[](int xi) const;
  Matrix<Scalar>& operator[](int xi);

  /// Blocks of the right orders, all zero, with limit 0.
  static MatrixSeq zeros(int n, double alpha, int xi_max);
};

// Blockwise algebra. Both operands must share n and xi_max; limits combine
// when both are known, otherwise the result has none. The symbol is dropped.
template <class Scalar>
MatrixSeq<Scalar> operator+(const MatrixSeq<Scalar>& a, const MatrixSeq<Scalar>& b);
template <class Scalar>
MatrixSeq<Scalar> operator-(const MatrixSeq<Scalar>& a, const MatrixSeq<Scalar>& b);
template <class Scalar>
MatrixSeq<Scalar> operator*(Scalar c, const MatrixSeq<Scalar>& a);
template <class Scalar>
MatrixSeq<Scalar> operator*(const MatrixSeq<Scalar>& a, const MatrixSeq<Scalar>& b);

/// Converts a real sequence to complex.
MatrixSeq<std::complex<double>> complexify(const MatrixSeq<double>& a);

/// gamma_{n,alpha}(a)_xi. For Scalar = double, complex symbols raise DomainError.
template <class Scalar>
Matrix<Scalar> gamma_matrix(const Symbol& a, int n, double alpha, int xi);

/// All blocks xi = -n+1 .. xi_max, built concurrently; scalar limit from the symbol.
template <class Scalar>
MatrixSeq<Scalar> gamma_sequence(const Symbol& a, int n, double alpha, int xi_max);

/// A_xi equals the leading (n+xi) x (n+xi) block of A_{|xi|} to `tol`.
/// Throws IndexError when |xi| > xi_max.
template <class Scalar>
bool negative_submatrix_check(const MatrixSeq<Scalar>& seq, int xi, double tol = 1e-12);

/// Largest singular value by power iteration on M^H M.
template <class Scalar>
double spectral_norm(const Matrix<Scalar>& m, int max_iter = 500, double tol = 1e-10);

/// ||A_xi - omega I_n||. Throws DomainError when the limit is unknown.
template <class Scalar>
double tail_deviation(const MatrixSeq<Scalar>& seq, int xi);

/// max over blocks of the spectral norm.
template <class Scalar>
double sup_norm(const MatrixSeq<Scalar>& seq);

/// Heuristic: mean of the diagonal of A_{xi_max}. Not a proven limit.
template <class Scalar>
Scalar estimate_limit(const MatrixSeq<Scalar>& seq);

/// {"n","alpha","xi_min","xi_max","symbol","matrices":[{"xi","rows"}],"scalar_limit"}.
/// Complex values are written as [re, im]. Doubles round-trip bitwise.
template <class Scalar>
nlohmann::json to_json(const MatrixSeq<Scalar>& seq);
template <class Scalar>
MatrixSeq<Scalar> seq_from_json(const nlohmann::json& j);

/// One block as CSV with header "j,k,value".
template <class Scalar>
std::string block_csv(const MatrixSeq<Scalar>& seq, int xi);

}  // namespace polyberg
