#include "polyberg/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyberg/errors.hpp"
#include "polyberg/special_fn.hpp"

namespace polyberg {

Symbol Symbol::constant(std::complex<double> value) { return Symbol(ConstSymbol{value}); }

Symbol Symbol::indicator(double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("indicator symbol: s must lie in (0, 1)");
  return Symbol(IndicatorSymbol{s});
}

Symbol Symbol::poly_t(PolyCoeffs coeffs) {
  if (coeffs.empty()) throw DomainError("poly_t symbol: coefficient list is empty");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw DomainError("poly_t symbol: coefficients must be finite");
  }
  if (static_cast<int>(coeffs.size()) > kMaxDegree + 1) {
    throw UnsupportedError("poly_t symbol: degree exceeds " + std::to_string(kMaxDegree));
  }
  return Symbol(PolySymbol{std::move(coeffs)});
}

Symbol Symbol::jacobi_g(int p, double alpha) {
  if (p < 0) throw DomainError("jacobi_g symbol: p must be nonnegative");
  if (p > kMaxDegree) throw UnsupportedError("jacobi_g symbol: p exceeds " + std::to_string(kMaxDegree));
  if (!(alpha > -1.0)) throw DomainError("jacobi_g symbol: alpha must exceed -1");
  return Symbol(JacobiGSymbol{p, alpha});
}

Symbol Symbol::sampled(std::vector<double> t, std::vector<double> values, std::optional<double> limit) {
  if (t.size() != values.size()) throw DomainError("sampled symbol: t and value counts differ");
  if (t.size() < 2) throw DomainError("sampled symbol: need at least two samples");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] >= 0.0 && t[i] < 1.0)) throw DomainError("sampled symbol: t must lie in [0, 1)");
    if (i > 0 && !(t[i] > t[i - 1])) throw DomainError("sampled symbol: t must be strictly increasing");
  }
  return Symbol(SampledSymbol{std::move(t), std::move(values), limit});
}

bool Symbol::is_real() const noexcept {
  if (const auto* c = std::get_if<ConstSymbol>(&kind_)) return c->value.imag() == 0.0;
  return true;
}

Symbol make_gp(int p, double alpha) { return Symbol::jacobi_g(p, alpha); }

namespace {

double interpolate(const SampledSymbol& s, double t) {
  if (t <= s.t.front()) return s.values.front();
  if (t >= s.t.back()) {
    // With a known boundary limit, the last segment runs to (1, limit).
    if (!s.limit || t >= 1.0) return s.limit && t >= 1.0 ? *s.limit : s.values.back();
    const double w = (t - s.t.back()) / (1.0 - s.t.back());
    return (1.0 - w) * s.values.back() + w * *s.limit;
  }
  const auto it = std::upper_bound(s.t.begin(), s.t.end(), t);
  const auto i = static_cast<std::size_t>(it - s.t.begin());
  const double w = (t - s.t[i - 1]) / (s.t[i] - s.t[i - 1]);
  return (1.0 - w) * s.values[i - 1] + w * s.values[i];
}

PolyCoeffs derivative(const PolyCoeffs& c) {
  PolyCoeffs d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

// max_{t in [lo, hi]} |p(t) - shift|: dense grid, then Newton on p' around
// every grid-local maximum.
double poly_sup_abs(const PolyCoeffs& c, double lo, double hi, double shift) {
  const auto f = [&](double t) { return std::fabs(horner_compensated(c, t) - shift); };
  double best = std::max(f(lo), f(hi));
  if (c.size() <= 1 || hi <= lo) return best;
  const PolyCoeffs d1 = derivative(c);
  const PolyCoeffs d2 = derivative(d1);
  constexpr int kGrid = 4096;
  const double h = (hi - lo) / kGrid;
  std::vector<double> vals(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) vals[i] = f(lo + i * h);
  for (int i = 0; i <= kGrid; ++i) {
    best = std::max(best, vals[i]);
    const bool local = (i == 0 || vals[i] >= vals[i - 1]) && (i == kGrid || vals[i] >= vals[i + 1]);
    if (!local) continue;
    double t = lo + i * h;
    for (int it = 0; it < 30; ++it) {
      const double g2 = horner_compensated(d2, t);
      if (g2 == 0.0) break;
      const double step = horner_compensated(d1, t) / g2;
      t -= step;
      if (t < lo - h || t > hi + h) break;
      if (std::fabs(step) < 1e-15) break;
    }
    if (t >= lo && t <= hi) best = std::max(best, f(t));
  }
  return best;
}

}  // namespace

std::optional<PolyCoeffs> poly_coeffs(const Symbol& a) {
  if (const auto* c = std::get_if<ConstSymbol>(&a.kind())) {
    if (c->value.imag() != 0.0) return std::nullopt;
    return PolyCoeffs{c->value.real()};
  }
  if (const auto* p = std::get_if<PolySymbol>(&a.kind())) return p->coeffs;
  if (const auto* g = std::get_if<JacobiGSymbol>(&a.kind())) {
    return q_coeffs(JacobiParams{g->alpha, 0.0, g->p});
  }
  return std::nullopt;
}

std::complex<double> eval_at_t(const Symbol& a, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("eval_at_t: t must lie in [0, 1)");
  return std::visit(
      [t](const auto& k) -> std::complex<double> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstSymbol>) {
          return k.value;
        } else if constexpr (std::is_same_v<K, IndicatorSymbol>) {
          return t < k.s * k.s ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<K, PolySymbol>) {
          return horner_compensated(k.coeffs, t);
        } else if constexpr (std::is_same_v<K, JacobiGSymbol>) {
          return q_eval(JacobiParams{k.alpha, 0.0, k.p}, t);
        } else {
          return interpolate(k, t);
        }
      },
      a.kind());
}

std::optional<std::complex<double>> boundary_limit(const Symbol& a) {
  return std::visit(
      [](const auto& k) -> std::optional<std::complex<double>> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstSymbol>) {
          return k.value;
        } else if constexpr (std::is_same_v<K, IndicatorSymbol>) {
          return std::complex<double>(0.0);
        } else if constexpr (std::is_same_v<K, PolySymbol>) {
          double s = 0.0;
          for (double c : k.coeffs) s += c;
          return std::complex<double>(s);
        } else if constexpr (std::is_same_v<K, JacobiGSymbol>) {
          return std::complex<double>(binomial(k.alpha + k.p, k.p));
        } else {
          if (!k.limit) return std::nullopt;
          return std::complex<double>(*k.limit);
        }
      },
      a.kind());
}

std::vector<double> breakpoints(const Symbol& a) {
  if (const auto* ind = std::get_if<IndicatorSymbol>(&a.kind())) return {ind->s * ind->s};
  return {};
}

double sup_abs(const Symbol& a) { return sup_abs_deviation(a, 0.0, 0.0); }

double sup_abs_deviation(const Symbol& a, double x, std::complex<double> omega) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("sup_abs_deviation: x must lie in [0, 1)");
  if (const auto* c = std::get_if<ConstSymbol>(&a.kind())) return std::abs(c->value - omega);
  if (const auto* ind = std::get_if<IndicatorSymbol>(&a.kind())) {
    const double s2 = ind->s * ind->s;
    if (x >= s2) return std::abs(omega);
    return std::max(std::abs(1.0 - omega), std::abs(omega));
  }
  if (const auto* s = std::get_if<SampledSymbol>(&a.kind())) {
    double best = std::abs(interpolate(*s, x) - omega);
    for (std::size_t i = 0; i < s->t.size(); ++i) {
      if (s->t[i] >= x) best = std::max(best, std::abs(s->values[i] - omega));
    }
    return best;
  }
  const PolyCoeffs c = *poly_coeffs(a);
  if (omega.imag() != 0.0) {
    // Real polynomial against a complex shift: |p - w|^2 = (p - Re w)^2 + (Im w)^2.
    const double re = poly_sup_abs(c, x, 1.0, omega.real());
    return std::hypot(re, omega.imag());
  }
  return poly_sup_abs(c, x, 1.0, omega.real());
}

namespace {

std::complex<double> complex_from_json(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParseError("expected a number or [re, im] pair");
}

}  // namespace

Symbol symbol_from_json(const nlohmann::json& j, double alpha) {
  try {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("symbol JSON must be an object with \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "const") return Symbol::constant(complex_from_json(j.at("value")));
    if (kind == "indicator") return Symbol::indicator(j.at("s").get<double>());
    if (kind == "poly_t") return Symbol::poly_t(j.at("coeffs").get<std::vector<double>>());
    if (kind == "jacobi_g") return Symbol::jacobi_g(j.at("p").get<int>(), alpha);
    if (kind == "sampled") {
      std::vector<double> t;
      std::vector<double> v;
      for (const auto& pt : j.at("points")) {
        if (!pt.is_array() || pt.size() != 2) throw ParseError("sampled points must be [t, value] pairs");
        t.push_back(pt[0].get<double>());
        v.push_back(pt[1].get<double>());
      }
      std::optional<double> limit;
      if (j.contains("limit") && !j.at("limit").is_null()) limit = j.at("limit").get<double>();
      return Symbol::sampled(std::move(t), std::move(v), limit);
    }
    throw ParseError("unknown symbol kind \"" + kind + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed symbol JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid symbol: ") + e.what());
  } catch (const UnsupportedError& e) {
    throw ParseError(std::string("invalid symbol: ") + e.what());
  }
}

nlohmann::json symbol_to_json(const Symbol& a) {
  return std::visit(
      [](const auto& k) -> nlohmann::json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstSymbol>) {
          if (k.value.imag() == 0.0) return {{"kind", "const"}, {"value", k.value.real()}};
          return {{"kind", "const"}, {"value", {k.value.real(), k.value.imag()}}};
        } else if constexpr (std::is_same_v<K, IndicatorSymbol>) {
          return {{"kind", "indicator"}, {"s", k.s}};
        } else if constexpr (std::is_same_v<K, PolySymbol>) {
          return {{"kind", "poly_t"}, {"coeffs", k.coeffs}};
        } else if constexpr (std::is_same_v<K, JacobiGSymbol>) {
          return {{"kind", "jacobi_g"}, {"p", k.p}};
        } else {
          nlohmann::json pts = nlohmann::json::array();
          for (std::size_t i = 0; i < k.t.size(); ++i) pts.push_back({k.t[i], k.values[i]});
          nlohmann::json out = {{"kind", "sampled"}, {"points", pts}};
          out["limit"] = k.limit ? nlohmann::json(*k.limit) : nlohmann::json(nullptr);
          return out;
        }
      },
      a.kind());
}

}  // namespace polyberg
