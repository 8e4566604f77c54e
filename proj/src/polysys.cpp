#include "eqlab/polysys.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "eqlab/errors.hpp"

namespace eqlab {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool graded_lex_greater(const Exponents& a, const Exponents& b) {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

void require_n(int n) {
  if (n < 1) throw InvalidParameter("bound formulas need n >= 1");
}

}  // namespace

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  Polynomial p(num_vars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, Exponents exponents) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
  return best;
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Monomial> Polynomial::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({c, e});
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return graded_lex_greater(a.exponents, b.exponents);
  });
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw InvalidParameter("polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw InvalidParameter("polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw InvalidParameter("polynomial variable counts differ");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial out(p.num_vars_);
  for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(num_vars_, 1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

double Polynomial::evaluate(const std::vector<double>& values) const {
  if (values.size() != num_vars_) throw InvalidParameter("wrong number of values");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= values[i];
    }
    sum += term;
  }
  return sum;
}

Rational Polynomial::evaluate_exact(const std::vector<Rational>& values) const {
  if (values.size() != num_vars_) throw InvalidParameter("wrong number of values");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= values[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& replacements) const {
  if (replacements.size() != num_vars_) throw InvalidParameter("one replacement per variable");
  const std::size_t target_vars = replacements.empty() ? 0 : replacements.front().num_vars();
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * replacements[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

ExactConfiguration exact_from(const Configuration& config) {
  ExactConfiguration out;
  out.reserve(config.size());
  for (const auto& p : config.points()) {
    out.push_back({rational_from_double(p.x), rational_from_double(p.y), rational_from_double(p.m)});
  }
  return out;
}

PolynomialSystem build_system_w(const ExactConfiguration& config) {
  const std::size_t n = config.size();
  if (n == 0) throw InvalidParameter("polynomial system needs at least one mass");
  const std::size_t vars = n + 2;
  PolynomialSystem sys;
  sys.kind = SystemKind::W;
  sys.variable_names = {"x", "y"};
  for (std::size_t i = 1; i <= n; ++i) sys.variable_names.push_back("w" + std::to_string(i));

  const Polynomial x = Polynomial::variable(vars, 0);
  const Polynomial y = Polynomial::variable(vars, 1);
  const Polynomial one = Polynomial::constant(vars, 1);
  Polynomial eq_x = x;
  Polynomial eq_y = y;
  std::vector<Polynomial> norms;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = config[i];
    const Polynomial w = Polynomial::variable(vars, i + 2);
    const Polynomial w3 = w.pow(3);
    const Polynomial dx = x - Polynomial::constant(vars, p.x);
    const Polynomial dy = y - Polynomial::constant(vars, p.y);
    eq_x -= p.m * (dx * w3);
    eq_y -= p.m * (dy * w3);
    norms.push_back(w.pow(2) * (dx.pow(2) + dy.pow(2)) - one);
  }
  sys.equations.push_back(std::move(eq_x));
  sys.equations.push_back(std::move(eq_y));
  for (auto& e : norms) sys.equations.push_back(std::move(e));
  return sys;
}

PolynomialSystem build_system_w(const Configuration& config) { return build_system_w(exact_from(config)); }

PolynomialSystem build_system_ab(const ExactConfiguration& config) {
  const std::size_t n = config.size();
  if (n == 0) throw InvalidParameter("polynomial system needs at least one mass");
  const std::size_t vars = 3 * n;
  PolynomialSystem sys;
  sys.kind = SystemKind::AB;
  for (const char* prefix : {"a", "b", "w"}) {
    for (std::size_t i = 1; i <= n; ++i) sys.variable_names.push_back(prefix + std::to_string(i));
  }
  const auto a = [&](std::size_t i) { return Polynomial::variable(vars, i); };
  const auto b = [&](std::size_t i) { return Polynomial::variable(vars, n + i); };
  const auto w = [&](std::size_t i) { return Polynomial::variable(vars, 2 * n + i); };
  const auto k = [&](const Rational& c) { return Polynomial::constant(vars, c); };

  Polynomial eq_x = a(0) + k(config[0].x);
  Polynomial eq_y = b(0) + k(config[0].y);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial w3 = w(i).pow(3);
    eq_x -= config[i].m * (a(i) * w3);
    eq_y -= config[i].m * (b(i) * w3);
  }
  sys.equations.push_back(std::move(eq_x));
  sys.equations.push_back(std::move(eq_y));
  for (std::size_t i = 0; i < n; ++i) {
    sys.equations.push_back(w(i).pow(2) * (a(i).pow(2) + b(i).pow(2)) - k(1));
  }
  for (std::size_t i = 1; i < n; ++i) {
    sys.equations.push_back(a(i) - a(0) - k(config[0].x - config[i].x));
  }
  for (std::size_t i = 1; i < n; ++i) {
    sys.equations.push_back(b(i) - b(0) - k(config[0].y - config[i].y));
  }
  return sys;
}

PolynomialSystem build_system_ab(const Configuration& config) { return build_system_ab(exact_from(config)); }

std::vector<double> lift_point(const PolynomialSystem& system, const Configuration& config, Vec2 p) {
  const std::size_t n = config.size();
  const double limit = kDefaultSingularityCutoff * config.scale();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (p - config[i].position()).norm();
    if (!(r > limit)) throw LiftFailure("point coincides with mass " + std::to_string(i));
    w[i] = 1.0 / r;
  }
  std::vector<double> values;
  if (system.kind == SystemKind::W) {
    if (system.num_vars() != n + 2) throw LiftFailure("system does not match the configuration");
    values = {p.x, p.y};
  } else {
    if (system.num_vars() != 3 * n) throw LiftFailure("system does not match the configuration");
    for (std::size_t i = 0; i < n; ++i) values.push_back(p.x - config[i].x);
    for (std::size_t i = 0; i < n; ++i) values.push_back(p.y - config[i].y);
  }
  values.insert(values.end(), w.begin(), w.end());
  return values;
}

double lift_and_residual(const PolynomialSystem& system, const Configuration& config,
                         const Equilibrium& eq) {
  const std::vector<double> values = lift_point(system, config, eq.location);
  double worst = 0.0;
  for (const auto& e : system.equations) worst = std::max(worst, std::abs(e.evaluate(values)));
  return worst;
}

Rational max_abs_residual_exact(const PolynomialSystem& system, const std::vector<Rational>& values) {
  Rational worst = 0;
  for (const auto& e : system.equations) {
    const Rational v = abs(e.evaluate_exact(values));
    if (v > worst) worst = v;
  }
  return worst;
}

BigInt bezout_bound(int n) {
  require_n(n);
  return boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(n + 2));
}

BigInt mv_formula(int n) {
  require_n(n);
  const BigInt nn = n;
  return (9 * nn * nn + 3 * nn - 4) * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n - 1));
}

BigInt mv_tilde_formula(int n) {
  require_n(n);
  const BigInt nn = n;
  return (9 * nn * nn + nn + 2) * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n - 1));
}

std::optional<long> ReferenceDegrees::lookup(int n) const {
  const auto it = degrees.find(n);
  if (it == degrees.end()) return std::nullopt;
  return it->second;
}

ReferenceDegrees reference_degrees() {
  // Published Groebner degree computations; larger n did not terminate.
  ReferenceDegrees ref;
  ref.degrees = {{2, 120}, {3, 696}, {4, 3544}};
  ref.two_mass_symmetric_bound = 52;
  return ref;
}

SupportSet newton_supports(const PolynomialSystem& system) {
  SupportSet out;
  for (const auto& eq : system.equations) {
    std::vector<Exponents> support;
    for (const auto& m : eq.monomials()) support.push_back(m.exponents);
    out.equations.push_back(std::move(support));
  }
  return out;
}

std::string format_supports(const SupportSet& supports) {
  std::ostringstream out;
  for (const auto& eq : supports.equations) {
    for (std::size_t t = 0; t < eq.size(); ++t) {
      if (t > 0) out << ';';
      for (std::size_t i = 0; i < eq[t].size(); ++i) {
        if (i > 0) out << ',';
        out << eq[t][i];
      }
    }
    out << '\n';
  }
  return out.str();
}

SupportSet parse_supports(std::string_view text) {
  SupportSet out;
  std::size_t width = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<Exponents> eq;
    while (true) {
      const std::size_t semi = line.find(';');
      std::string_view vec = line.substr(0, semi);
      Exponents e;
      while (true) {
        const std::size_t comma = vec.find(',');
        const std::string_view tok = vec.substr(0, comma);
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw InvalidParameter("malformed exponent '" + std::string(tok) + "'");
        }
        e.push_back(v);
        if (comma == std::string_view::npos) break;
        vec.remove_prefix(comma + 1);
      }
      if (width == 0) width = e.size();
      if (e.size() != width) throw InvalidParameter("exponent vectors differ in length");
      eq.push_back(std::move(e));
      if (semi == std::string_view::npos) break;
      line.remove_prefix(semi + 1);
    }
    out.equations.push_back(std::move(eq));
  }
  return out;
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& term : p.monomials()) {
    const bool negative = term.coefficient < 0;
    const Rational magnitude = negative ? Rational(-term.coefficient) : term.coefficient;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      if (term.exponents[i] == 0) continue;
      factors.push_back(term.exponents[i] == 1 ? names.at(i)
                                               : names.at(i) + "^" + std::to_string(term.exponents[i]));
    }
    const bool unit = magnitude == 1;
    if (factors.empty()) {
      out << to_string(magnitude);
      continue;
    }
    if (!unit) {
      const bool fraction = boost::multiprecision::denominator(magnitude) != 1;
      out << (fraction ? "(" + to_string(magnitude) + ")" : to_string(magnitude)) << '*';
    }
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f > 0) out << '*';
      out << factors[f];
    }
  }
  return out.str();
}

std::string format_system(const PolynomialSystem& system) {
  std::ostringstream out;
  for (const auto& eq : system.equations) out << format_polynomial(eq, system.variable_names) << " = 0\n";
  return out.str();
}

}  // namespace eqlab
