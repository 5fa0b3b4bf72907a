#include "polyberg/gammaseq.hpp"

#include <cmath>
#include <sstream>

#include "polyberg/errors.hpp"
#include "polyberg/integration.hpp"
#include "polyberg/parallel.hpp"

namespace polyberg {
namespace {

template <class Scalar>
Scalar narrow(std::complex<double> v, const char* what) {
  if constexpr (is_complex_v<Scalar>) {
    return v;
  } else {
    if (v.imag() != 0.0) throw DomainError(std::string(what) + ": complex value in a real sequence");
    return v.real();
  }
}

template <class Scalar>
nlohmann::json scalar_json(Scalar v) {
  if constexpr (is_complex_v<Scalar>) {
    return nlohmann::json::array({v.real(), v.imag()});
  } else {
    return v;
  }
}

template <class Scalar>
Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("complex value must be [re, im]");
    return narrow<Scalar>({j[0].get<double>(), j[1].get<double>()}, "seq_from_json");
  }
  return narrow<Scalar>({j.get<double>(), 0.0}, "seq_from_json");
}

template <class Scalar>
void check_compatible(const MatrixSeq<Scalar>& a, const MatrixSeq<Scalar>& b) {
  if (a.n != b.n || a.xi_max != b.xi_max) {
    throw DomainError("matrix sequences differ in n or truncation");
  }
}

}  // namespace

int block_order(int n, int xi) {
  if (n < 1) throw DomainError("n must be positive");
  if (xi < -n + 1) throw IndexError("frequency below -n+1");
  return std::min(n + xi, n);
}

template <class Scalar>
const Matrix<Scalar>& MatrixSeq<Scalar>::operator[](int xi) const {
  if (!has(xi)) throw IndexError("frequency " + std::to_string(xi) + " outside the truncation");
  return mats[static_cast<std::size_t>(xi - xi_min())];
}

template <class Scalar>
Matrix<Scalar>& MatrixSeq<Scalar>::operator[](int xi) {
  if (!has(xi)) throw IndexError("frequency " + std::to_string(xi) + " outside the truncation");
  return mats[static_cast<std::size_t>(xi - xi_min())];
}

template <class Scalar>
MatrixSeq<Scalar> MatrixSeq<Scalar>::zeros(int n, double alpha, int xi_max) {
  if (xi_max < 0) throw DomainError("xi_max must be nonnegative");
  MatrixSeq s;
  s.n = n;
  s.alpha = alpha;
  s.xi_max = xi_max;
  for (int xi = -n + 1; xi <= xi_max; ++xi) {
    const int d = block_order(n, xi);
    s.mats.push_back(Matrix<Scalar>::Zero(d, d));
  }
  s.scalar_limit = Scalar(0);
  return s;
}

template <class Scalar>
MatrixSeq<Scalar> operator+(const MatrixSeq<Scalar>& a, const MatrixSeq<Scalar>& b) {
  check_compatible(a, b);
  MatrixSeq<Scalar> r = a;
  r.symbol.reset();
  for (std::size_t i = 0; i < r.mats.size(); ++i) r.mats[i] += b.mats[i];
  if (a.scalar_limit && b.scalar_limit) {
    r.scalar_limit = *a.scalar_limit + *b.scalar_limit;
  } else {
    r.scalar_limit.reset();
  }
  return r;
}

template <class Scalar>
MatrixSeq<Scalar> operator-(const MatrixSeq<Scalar>& a, const MatrixSeq<Scalar>& b) {
  return a + Scalar(-1) * b;
}

template <class Scalar>
MatrixSeq<Scalar> operator*(Scalar c, const MatrixSeq<Scalar>& a) {
  MatrixSeq<Scalar> r = a;
  r.symbol.reset();
  for (auto& m : r.mats) m *= c;
  if (r.scalar_limit) r.scalar_limit = c * *r.scalar_limit;
  return r;
}

template <class Scalar>
MatrixSeq<Scalar> operator*(const MatrixSeq<Scalar>& a, const MatrixSeq<Scalar>& b) {
  check_compatible(a, b);
  MatrixSeq<Scalar> r = a;
  r.symbol.reset();
  for (std::size_t i = 0; i < r.mats.size(); ++i) r.mats[i] = a.mats[i] * b.mats[i];
  if (a.scalar_limit && b.scalar_limit) {
    r.scalar_limit = *a.scalar_limit * *b.scalar_limit;
  } else {
    r.scalar_limit.reset();
  }
  return r;
}

MatrixSeq<std::complex<double>> complexify(const MatrixSeq<double>& a) {
  MatrixSeq<std::complex<double>> r;
  r.n = a.n;
  r.alpha = a.alpha;
  r.xi_max = a.xi_max;
  r.symbol = a.symbol;
  for (const auto& m : a.mats) r.mats.push_back(m.cast<std::complex<double>>());
  if (a.scalar_limit) r.scalar_limit = *a.scalar_limit;
  return r;
}

template <class Scalar>
Matrix<Scalar> gamma_matrix(const Symbol& a, int n, double alpha, int xi) {
  const int d = block_order(n, xi);
  const std::vector<std::complex<double>> entries = beta_block(a, alpha, xi, d);
  Matrix<Scalar> m(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) m(j, k) = narrow<Scalar>(entries[j * d + k], "gamma_matrix");
  }
  return m;
}

template <class Scalar>
MatrixSeq<Scalar> gamma_sequence(const Symbol& a, int n, double alpha, int xi_max) {
  if (xi_max < 0) throw DomainError("xi_max must be nonnegative");
  if constexpr (!is_complex_v<Scalar>) {
    if (!a.is_real()) throw DomainError("gamma_sequence: complex symbol in a real sequence");
  }
  MatrixSeq<Scalar> s;
  s.n = n;
  s.alpha = alpha;
  s.xi_max = xi_max;
  s.symbol = a;
  s.mats.resize(static_cast<std::size_t>(xi_max + n));
  parallel_for(-n + 1, xi_max + 1, [&](int xi) { s[xi] = gamma_matrix<Scalar>(a, n, alpha, xi); });
  if (auto lim = boundary_limit(a)) s.scalar_limit = narrow<Scalar>(*lim, "gamma_sequence");
  return s;
}

template <class Scalar>
bool negative_submatrix_check(const MatrixSeq<Scalar>& seq, int xi, double tol) {
  if (xi >= 0 || xi < seq.xi_min()) throw IndexError("negative_submatrix_check: need -n+1 <= xi <= -1");
  if (-xi > seq.xi_max) throw IndexError("negative_submatrix_check: insufficient truncation for |xi|");
  const int d = seq.n + xi;
  const auto diff = (seq[xi] - seq[-xi].topLeftCorner(d, d)).cwiseAbs().maxCoeff();
  return diff <= tol;
}

template <class Scalar>
double spectral_norm(const Matrix<Scalar>& m, int max_iter, double tol) {
  if (m.size() == 0) return 0.0;
  const Matrix<Scalar> h = m.adjoint() * m;
  const Eigen::Index d = h.cols();
  Matrix<Scalar> v(d, 1);
  for (Eigen::Index i = 0; i < d; ++i) v(i, 0) = Scalar(1.0 + 0.1 * static_cast<double>(i) / d);
  v /= v.norm();
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Matrix<Scalar> w = h * v;
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    const double next = std::real((v.adjoint() * w)(0, 0));
    v = w / nw;
    if (std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

template <class Scalar>
double tail_deviation(const MatrixSeq<Scalar>& seq, int xi) {
  if (!seq.scalar_limit) throw DomainError("tail_deviation: scalar limit is undefined");
  if (xi < 0) throw IndexError("tail_deviation: xi must be nonnegative");
  const Matrix<Scalar>& m = seq[xi];
  const Matrix<Scalar> dev = m - *seq.scalar_limit * Matrix<Scalar>::Identity(m.rows(), m.cols());
  return spectral_norm<Scalar>(dev);
}

template <class Scalar>
double sup_norm(const MatrixSeq<Scalar>& seq) {
  double s = 0.0;
  for (const auto& m : seq.mats) s = std::max(s, spectral_norm<Scalar>(m));
  return s;
}

template <class Scalar>
Scalar estimate_limit(const MatrixSeq<Scalar>& seq) {
  const auto& m = seq[seq.xi_max];
  return m.diagonal().mean();
}

template <class Scalar>
nlohmann::json to_json(const MatrixSeq<Scalar>& seq) {
  nlohmann::json j;
  j["n"] = seq.n;
  j["alpha"] = seq.alpha;
  j["xi_min"] = seq.xi_min();
  j["xi_max"] = seq.xi_max;
  j["symbol"] = seq.symbol ? symbol_to_json(*seq.symbol) : nlohmann::json(nullptr);
  nlohmann::json mats = nlohmann::json::array();
  for (int xi = seq.xi_min(); xi <= seq.xi_max; ++xi) {
    const auto& m = seq[xi];
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_json<Scalar>(m(r, c)));
      rows.push_back(std::move(row));
    }
    mats.push_back({{"xi", xi}, {"rows", std::move(rows)}});
  }
  j["matrices"] = std::move(mats);
  j["scalar_limit"] = seq.scalar_limit ? scalar_json<Scalar>(*seq.scalar_limit) : nlohmann::json(nullptr);
  return j;
}

template <class Scalar>
MatrixSeq<Scalar> seq_from_json(const nlohmann::json& j) {
  try {
    MatrixSeq<Scalar> s;
    s.n = j.at("n").get<int>();
    s.alpha = j.at("alpha").get<double>();
    s.xi_max = j.at("xi_max").get<int>();
    if (s.n < 1 || s.xi_max < 0) throw ParseError("invalid n or xi_max");
    if (j.contains("xi_min") && j["xi_min"].get<int>() != s.xi_min()) throw ParseError("xi_min must be -n+1");
    if (j.contains("symbol") && !j["symbol"].is_null()) s.symbol = symbol_from_json(j["symbol"], s.alpha);
    s.mats.resize(static_cast<std::size_t>(s.xi_max + s.n));
    std::vector<bool> seen(s.mats.size(), false);
    for (const auto& block : j.at("matrices")) {
      const int xi = block.at("xi").get<int>();
      if (!s.has(xi)) throw ParseError("block frequency outside the declared range");
      const int d = block_order(s.n, xi);
      const auto& rows = block.at("rows");
      if (static_cast<int>(rows.size()) != d) throw ParseError("block has the wrong order");
      Matrix<Scalar> m(d, d);
      for (int r = 0; r < d; ++r) {
        if (static_cast<int>(rows[r].size()) != d) throw ParseError("block row has the wrong length");
        for (int c = 0; c < d; ++c) m(r, c) = scalar_from_json<Scalar>(rows[r][c]);
      }
      s[xi] = std::move(m);
      seen[static_cast<std::size_t>(xi - s.xi_min())] = true;
    }
    for (bool b : seen) {
      if (!b) throw ParseError("missing block");
    }
    if (j.contains("scalar_limit") && !j["scalar_limit"].is_null()) {
      s.scalar_limit = scalar_from_json<Scalar>(j["scalar_limit"]);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix sequence JSON: ") + e.what());
  }
}

template <class Scalar>
std::string block_csv(const MatrixSeq<Scalar>& seq, int xi) {
  const auto& m = seq[xi];
  std::ostringstream os;
  os.precision(17);
  os << "j,k,value\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      os << r << ',' << c << ',';
      if constexpr (is_complex_v<Scalar>) {
        const auto v = m(r, c);
        os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << 'i';
      } else {
        os << m(r, c);
      }
      os << '\n';
    }
  }
  return os.str();
}

#define POLYBERG_INSTANTIATE(S)                                                                 \
  template struct MatrixSeq<S>;                                                                 \
  template MatrixSeq<S> operator+(const MatrixSeq<S>&, const MatrixSeq<S>&);                    \
  template MatrixSeq<S> operator-(const MatrixSeq<S>&, const MatrixSeq<S>&);                    \
  template MatrixSeq<S> operator*(S, const MatrixSeq<S>&);                                      \
  template MatrixSeq<S> operator*(const MatrixSeq<S>&, const MatrixSeq<S>&);                    \
  template Matrix<S> gamma_matrix<S>(const Symbol&, int, double, int);                          \
  template MatrixSeq<S> gamma_sequence<S>(const Symbol&, int, double, int);                     \
  template bool negative_submatrix_check<S>(const MatrixSeq<S>&, int, double);                  \
  template double spectral_norm<S>(const Matrix<S>&, int, double);                              \
  template double tail_deviation<S>(const MatrixSeq<S>&, int);                                  \
  template double sup_norm<S>(const MatrixSeq<S>&);                                             \
  template S estimate_limit<S>(const MatrixSeq<S>&);                                            \
  template nlohmann::json to_json<S>(const MatrixSeq<S>&);                                      \
  template MatrixSeq<S> seq_from_json<S>(const nlohmann::json&);                                \
  template std::string block_csv<S>(const MatrixSeq<S>&, int);

POLYBERG_INSTANTIATE(double)
POLYBERG_INSTANTIATE(std::complex<double>)

#undef POLYBERG_INSTANTIATE

}  // namespace polyberg
