#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polyberg/jacobi.hpp"

namespace polyberg {

// Radial generating symbols a on [0, 1), stored in the variable t = r^2:
// every kind describes the function t -> a(sqrt(t)).

struct ConstSymbol {
  std::complex<double> value;
};

/// 1_{[0,s)} in r, i.e. 1 for t < s^2.
struct IndicatorSymbol {
  double s;
};

/// a(sqrt(t)) = sum_k coeffs[k] t^k.
struct PolySymbol {
  PolyCoeffs coeffs;
};

/// g_{p,alpha}(r) = Q_p^{(alpha,0)}(r^2), i.e. Q_p^{(alpha,0)}(t) in t-space.
/// Kept symbolic so that its coefficients can be formed in extended precision.
struct JacobiGSymbol {
  int p;
  double alpha;
};

/// Piecewise-linear interpolation of (t, value) samples; constant beyond the ends.
struct SampledSymbol {
  std::vector<double> t;
  std::vector<double> values;
  std::optional<double> limit;
};

using SymbolKind =
    std::variant<ConstSymbol, IndicatorSymbol, PolySymbol, JacobiGSymbol, SampledSymbol>;

/// Immutable radial symbol. Construct through the factories below, which
/// enforce the per-kind invariants.
class Symbol {
 public:
  static Symbol constant(std::complex<double> value);
  static Symbol indicator(double s);
  static Symbol poly_t(PolyCoeffs coeffs);
  static Symbol jacobi_g(int p, double alpha);
  /// Linear interpolation between samples. Past the last sample the value is
  /// held flat, or, with a limit, interpolated toward (1, limit).
  static Symbol sampled(std::vector<double> t, std::vector<double> values,
                        std::optional<double> limit = std::nullopt);

  const SymbolKind& kind() const noexcept { return kind_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(kind_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(kind_);
  }

  /// True unless the symbol is a constant with nonzero imaginary part.
  bool is_real() const noexcept;

 private:
  explicit Symbol(SymbolKind k) : kind_(std::move(k)) {}
  SymbolKind kind_;
};

/// g_{p,alpha}, the generating symbol Q_p^{(alpha,0)}(r^2).
Symbol make_gp(int p, double alpha);

/// a(sqrt(t)) for t in [0, 1).
std::complex<double> eval_at_t(const Symbol& a, double t);

/// lim_{r -> 1} a(r) when known.
std::optional<std::complex<double>> boundary_limit(const Symbol& a);

/// Monomial coefficients for the polynomial kinds (Const, PolyT, JacobiG), in double.
std::optional<PolyCoeffs> poly_coeffs(const Symbol& a);

/// Points in t where the symbol jumps (Indicator: s^2).
std::vector<double> breakpoints(const Symbol& a);

/// sup_{t in [0,1)} |a(sqrt(t))|; polynomial kinds are maximized by grid search
/// followed by Newton refinement of the critical points.
double sup_abs(const Symbol& a);

/// sup_{t in [x,1)} |a(sqrt(t)) - omega|.
double sup_abs_deviation(const Symbol& a, double x, std::complex<double> omega);

/// JSON: {"kind":"const","value":v} (v real or [re,im]) | {"kind":"indicator","s":s}
/// | {"kind":"poly_t","coeffs":[...]} | {"kind":"jacobi_g","p":p}
/// | {"kind":"sampled","points":[[t,v],...],"limit":w}.
/// `alpha` binds the weight of jacobi_g symbols, which the encoding omits.
Symbol symbol_from_json(const nlohmann::json& j, double alpha);
nlohmann::json symbol_to_json(const Symbol& a);

}  // namespace polyberg
