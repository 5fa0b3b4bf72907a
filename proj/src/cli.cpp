#include "polyberg/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyberg/bergman_oracle.hpp"
#include "polyberg/errors.hpp"
#include "polyberg/integration.hpp"
#include "polyberg/verify.hpp"

namespace polyberg {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + whole + "'");
  }
  if (used != s.size()) throw ParseError("bad number '" + whole + "'");
  return v;
}

json scalar_out(std::complex<double> v) {
  if (v.imag() == 0.0) return v.real();
  return json::array({v.real(), v.imag()});
}

struct Common {
  int n = 2;
  double alpha = 0.0;
  int xi_max = 64;
  std::string symbol;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  double tol_zero = 1e-10;
  double tol_nonzero = 1e-8;
  int xi = 0;
  std::vector<std::string> states;
};

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_config(const Common& c) {
  if (c.n < 1) throw BadInput("--n must be at least 1");
  if (!(c.alpha > -1.0) || !std::isfinite(c.alpha)) throw BadInput("--alpha must be a finite number > -1");
  if (c.xi_max < 0) throw BadInput("--xi-max must be nonnegative");
  if (c.format != "json" && c.format != "csv") throw BadInput("--format must be json or csv");
}

Symbol load_symbol(const Common& c) {
  if (c.symbol.empty()) throw ParseError("--symbol is required");
  std::string text = c.symbol;
  if (text.front() == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw ParseError("cannot read symbol file " + text.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("symbol is not valid JSON: ") + e.what());
  }
  return symbol_from_json(j, c.alpha);
}

// Writes to --out when given, else to `out`.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw BadInput("cannot write " + c.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// With --out the summary goes to stdout; otherwise stdout carries the data.
std::ostream& summary_stream(const Common& c, std::ostream& out, std::ostream& err) {
  return c.out.empty() ? err : out;
}

int cmd_gamma(const Common& c, std::ostream& out, std::ostream& err) {
  const Symbol a = load_symbol(c);
  if (a.is_real()) {
    const auto seq = gamma_sequence<double>(a, c.n, c.alpha, c.xi_max);
    emit(c, out, c.format == "csv" ? block_csv(seq, c.xi) : to_json(seq).dump(2));
    auto& s = summary_stream(c, out, err);
    for (int xi = seq.xi_min(); xi <= seq.xi_max; ++xi) {
      s << "xi " << xi << " norm " << std::setprecision(12) << spectral_norm<double>(seq[xi]);
      if (seq.scalar_limit && xi >= 0) s << " tail_deviation " << tail_deviation(seq, xi);
      s << '\n';
    }
    if (entry_accuracy(a, c.alpha) == EntryAccuracy::degraded) {
      s << "warning: sampled symbol with alpha < 0; quadrature accuracy degraded near t = 1\n";
    }
  } else {
    const auto seq = gamma_sequence<std::complex<double>>(a, c.n, c.alpha, c.xi_max);
    emit(c, out, c.format == "csv" ? block_csv(seq, c.xi) : to_json(seq).dump(2));
    auto& s = summary_stream(c, out, err);
    for (int xi = seq.xi_min(); xi <= seq.xi_max; ++xi) {
      s << "xi " << xi << " norm " << std::setprecision(12) << spectral_norm<std::complex<double>>(seq[xi]);
      if (seq.scalar_limit && xi >= 0) s << " tail_deviation " << tail_deviation(seq, xi);
      s << '\n';
    }
  }
  return kExitOk;
}

json state_json(const PureState& s) {
  if (std::holds_alternative<InfinityState>(s)) return "inf";
  const auto& f = std::get<FiniteState>(s);
  json u = json::array();
  for (Eigen::Index i = 0; i < f.u.size(); ++i) u.push_back(scalar_out(f.u(i)));
  return {{"xi", f.xi}, {"u", u}};
}

int cmd_purestate(const Common& c, std::ostream& out, std::ostream&) {
  if (c.format != "json") throw BadInput("purestate writes JSON only");
  if (c.states.empty()) throw ParseError("--state is required");
  const Symbol a = load_symbol(c);
  json rows = json::array();
  for (const auto& text : c.states) {
    const PureState s = parse_state(text, c.n);
    int top = 0;
    if (const auto* f = std::get_if<FiniteState>(&s)) top = std::max(0, f->xi);
    const auto seq = gamma_sequence<std::complex<double>>(a, c.n, c.alpha, top);
    json row{{"state", state_json(s)}, {"value", scalar_out(eval_state(s, seq))}};
    if (const auto* f = std::get_if<FiniteState>(&s)) {
      row["integral"] = scalar_out(eval_state_integral(f->xi, f->u, a, c.n, c.alpha));
    }
    rows.push_back(row);
  }
  emit(c, out, json{{"n", c.n}, {"alpha", c.alpha}, {"symbol", symbol_to_json(a)}, {"states", rows}}.dump(2));
  return kExitOk;
}

int cmd_separate(const Common& c, std::ostream& out, std::ostream& err) {
  if (c.format != "json") throw BadInput("separate writes JSON only");
  if (c.states.size() != 2) throw ParseError("separate needs exactly two --state arguments");
  const PureState s1 = parse_state(c.states[0], c.n);
  const PureState s2 = parse_state(c.states[1], c.n);
  Separation sep;
  try {
    sep = separate(s1, s2, c.n, c.alpha, {c.tol_zero, c.tol_nonzero});
  } catch (const NotSeparableError& e) {
    const std::string what = e.what();
    const std::string tag = "not separable by construction";
    err << (what.rfind(tag, 0) == 0 ? what : tag + ": " + what) << '\n';
    return kExitNotSeparable;
  }
  json plans = json::array();
  for (const auto& p : sep.plans) plans.push_back(plan_to_json(p));
  json j{{"method", sep.method},
         {"states", {state_json(s1), state_json(s2)}},
         {"plans", plans},
         {"symbol", sep.symbol ? symbol_to_json(*sep.symbol) : json(nullptr)},
         {"values", {scalar_out(sep.first), scalar_out(sep.second)}},
         {"gap", sep.gap}};
  emit(c, out, j.dump(2));
  return sep.gap > 1e-8 ? kExitOk : kExitFailure;
}

int cmd_basis(const Common& c, std::ostream& out, std::ostream&) {
  const int d = block_order(c.n, c.xi);
  const int base = d - 1 + std::abs(c.xi);
  std::vector<RealMatrix> gens;
  for (int j = 0; j < d; ++j) gens.push_back(gamma_matrix<double>(make_gp(base + j, c.alpha), c.n, c.alpha, c.xi));
  const auto nu = nu_table(gens, {c.tol_zero, c.tol_nonzero});
  json units = json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "p,q,max_error\n";
  double worst = 0.0;
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      RealMatrix e = RealMatrix::Zero(d, d);
      e(p, q) = 1.0;
      const double error = (matrix_unit(gens, nu, p, q) - e).cwiseAbs().maxCoeff();
      worst = std::max(worst, error);
      units.push_back({{"p", p}, {"q", q}, {"max_error", error}});
      csv << p << ',' << q << ',' << error << '\n';
    }
  }
  json nu_rows = json::array();
  for (int p = 0; p < d; ++p) {
    json row = json::array();
    for (int j = p; j < d; ++j) row.push_back(nu(p, j));
    nu_rows.push_back(row);
  }
  json gen_idx = json::array();
  for (int j = 0; j < d; ++j) gen_idx.push_back(base + j);
  emit(c, out, c.format == "csv" ? csv.str()
                                 : json{{"n", c.n}, {"alpha", c.alpha}, {"xi", c.xi}, {"generators", gen_idx},
                                        {"nu", nu_rows}, {"units", units}, {"max_error", worst}}
                                       .dump(2));
  return worst <= 1e-8 ? kExitOk : kExitFailure;
}

int cmd_oracle(const Common& c, std::ostream& out, std::ostream&) {
  const Symbol a = load_symbol(c);
  const int top = std::min(c.xi_max, 3);
  json rows = json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "xi,j,k,oracle,exact,difference\n";
  double worst = 0.0;
  for (int xi = -c.n + 1; xi <= top; ++xi) {
    const int d = block_order(c.n, xi);
    const auto b = beta_block(a, c.alpha, xi, d);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const auto [p, q] = basis_index(xi, j);
        const auto [p2, q2] = basis_index(xi, k);
        const auto v = toeplitz_entry_2d(a, c.alpha, p, q, p2, q2);
        const double diff = std::abs(v - b[j * d + k]);
        worst = std::max(worst, diff);
        rows.push_back({{"xi", xi}, {"j", j}, {"k", k}, {"oracle", scalar_out(v)},
                        {"exact", scalar_out(b[j * d + k])}, {"difference", diff}});
        csv << xi << ',' << j << ',' << k << ',' << v.real() << ',' << b[j * d + k].real() << ',' << diff << '\n';
      }
    }
  }
  emit(c, out, c.format == "csv" ? csv.str() : json{{"entries", rows}, {"max_difference", worst}}.dump(2));
  return worst <= 1e-6 ? kExitOk : kExitFailure;
}

int cmd_verify(const Common& c, std::ostream& out, std::ostream& err) {
  VerifyConfig cfg;
  cfg.n = c.n;
  cfg.alpha = c.alpha;
  cfg.xi_max = c.xi_max;
  cfg.seed = c.seed;
  cfg.tol = {c.tol_zero, c.tol_nonzero};
  const auto results = run_invariant_suite(cfg);
  std::ostringstream table;
  int failed = 0;
  if (c.format == "csv") table << "check,status,detail\n";
  for (const auto& r : results) {
    const char* status = r.status == CheckStatus::pass ? "pass" : r.status == CheckStatus::fail ? "FAIL" : "skip";
    if (r.status == CheckStatus::fail) ++failed;
    if (c.format == "csv") {
      table << '"' << r.name << "\"," << status << ",\"" << r.detail << "\"\n";
    } else {
      table << std::left << std::setw(40) << r.name << ' ' << status;
      if (!r.detail.empty()) table << "  " << r.detail;
      table << '\n';
    }
  }
  emit(c, out, table.str());
  if (failed > 0) {
    err << failed << " check(s) failed:";
    for (const auto& r : results) {
      if (r.status == CheckStatus::fail) err << ' ' << r.name << ';';
    }
    err << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty complex number");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  s = trim(s);
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s, text)};
  return {parse_real(trim(s.substr(0, split)), text), parse_real(trim(s.substr(split)), text)};
}

PureState parse_state(const std::string& text, int n) {
  const std::string s = trim(text);
  if (s == "inf" || s == "infinity") return InfinityState{};
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("state must be '<xi>:<vector>' or 'inf': " + text);
  int xi = 0;
  try {
    const std::string head = trim(s.substr(0, colon));
    std::size_t used = 0;
    xi = std::stoi(head, &used);
    if (used != head.size()) throw ParseError("trailing characters");
  } catch (const std::exception&) {
    throw ParseError("bad frequency in state '" + text + "'");
  }
  std::string body = trim(s.substr(colon + 1));
  std::vector<std::complex<double>> entries;
  bool parsed_json = false;
  if (!body.empty() && body.front() == '[') {
    try {
      const json j = json::parse(body);
      if (j.is_array()) {
        for (const auto& e : j) {
          if (e.is_array() && e.size() == 2) {
            entries.emplace_back(e[0].get<double>(), e[1].get<double>());
          } else if (e.is_number()) {
            entries.emplace_back(e.get<double>(), 0.0);
          } else if (e.is_string()) {
            entries.push_back(parse_complex(e.get<std::string>()));
          } else {
            throw ParseError("bad vector entry");
          }
        }
        parsed_json = true;
      }
    } catch (const json::exception&) {
      entries.clear();
    }
    if (!parsed_json) {
      if (body.back() != ']') throw ParseError("unbalanced brackets in state '" + text + "'");
      body = body.substr(1, body.size() - 2);
    }
  }
  if (!parsed_json) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) entries.push_back(parse_complex(tok));
  }
  ComplexVector u(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) u(static_cast<Eigen::Index>(i)) = entries[i];
  const double norm = u.norm();
  if (!(std::abs(norm - 1.0) <= 1e-6)) throw ParseError("state vector must have unit norm: '" + text + "'");
  u /= norm;
  try {
    return finite_state(n, xi, std::move(u));
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix sequences of radial Toeplitz operators on polyanalytic weighted Bergman spaces"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "polyanalytic order n (block size)");
    sub->add_option("--alpha", c.alpha, "weight parameter alpha > -1");
    sub->add_option("--xi-max", c.xi_max, "largest frequency kept");
    sub->add_option("--format", c.format, "json or csv");
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--tol-zero", c.tol_zero, "relative tolerance for zero entries");
    sub->add_option("--tol-nonzero", c.tol_nonzero, "relative tolerance for nonzero entries");
  };
  auto* gamma = app.add_subcommand("gamma", "compute gamma_{n,alpha}(a) for -n+1 <= xi <= xi-max");
  add_common(gamma);
  gamma->add_option("--symbol", c.symbol, "symbol JSON or @file")->required();
  gamma->add_option("--xi", c.xi, "frequency written in csv format");

  auto* pure = app.add_subcommand("purestate", "evaluate pure states on gamma(a)");
  add_common(pure);
  pure->add_option("--symbol", c.symbol, "symbol JSON or @file")->required();
  pure->add_option("--state", c.states, "'<xi>:<vector>' or 'inf'")->required();

  auto* sep = app.add_subcommand("separate", "build an element separating two pure states");
  add_common(sep);
  sep->add_option("--state", c.states, "'<xi>:<vector>' or 'inf' (twice)")->required()->expected(1, 2);

  auto* basis = app.add_subcommand("basis", "reconstruct matrix units from gamma(g_k) generators");
  add_common(basis);
  basis->add_option("--xi", c.xi, "frequency of the generators");

  auto* oracle = app.add_subcommand("oracle", "cross-check entries against disk quadrature");
  add_common(oracle);
  oracle->add_option("--symbol", c.symbol, "symbol JSON or @file")->required();

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify);
  verify->add_option("--seed", c.seed, "seed for randomized checks");

  c.xi_max = 64;
  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  if (verify->parsed() && verify->count("--xi-max") == 0) c.xi_max = 16;
  if (verify->parsed() && verify->count("--n") == 0) c.n = 3;

  try {
    check_config(c);
    if (gamma->parsed()) return cmd_gamma(c, out, err);
    if (pure->parsed()) return cmd_purestate(c, out, err);
    if (sep->parsed()) return cmd_separate(c, out, err);
    if (basis->parsed()) return cmd_basis(c, out, err);
    if (oracle->parsed()) return cmd_oracle(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NotSeparableError& e) {
    err << "not separable by construction: " << e.what() << '\n';
    return kExitNotSeparable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitBadInput;
}

}  // namespace polyberg
