#pragma once

// Polynomial reformulations of the equilibrium equations with exact rational
// coefficients, the closed-form root-count bounds, and the stored reference
// degrees. Nothing here uses floating point except the lifted residuals.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqlab/core_model.hpp"
#include "eqlab/rational.hpp"
#include "eqlab/solver.hpp"

namespace eqlab {

using Exponents = std::vector<unsigned>;

struct Monomial {
  Rational coefficient;
  Exponents exponents;
};

// Sparse polynomial in a fixed number of variables. Zero coefficients are
// never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(const Rational& c, Exponents exponents);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;
  // Coefficient of the given exponent vector (zero if absent).
  Rational coefficient(const Exponents& exponents) const;
  // Terms in descending graded-lexicographic order.
  std::vector<Monomial> monomials() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  Polynomial pow(unsigned e) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  double evaluate(const std::vector<double>& values) const;
  Rational evaluate_exact(const std::vector<Rational>& values) const;
  // Replaces variable i by replacements[i]; all replacements share one
  // variable count, which becomes the result's.
  Polynomial substitute(const std::vector<Polynomial>& replacements) const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t num_vars_;
  std::map<Exponents, Rational> terms_;
};

struct ExactMassPoint {
  Rational x;
  Rational y;
  Rational m;
};

using ExactConfiguration = std::vector<ExactMassPoint>;

// Exact parameters from doubles through their shortest decimal forms.
ExactConfiguration exact_from(const Configuration& config);

enum class SystemKind {
  W,   // variables (x, y, w_1..w_n), n+2 equations
  AB,  // variables (a_1..a_n, b_1..b_n, w_1..w_n), 3n equations
};

struct PolynomialSystem {
  SystemKind kind = SystemKind::W;
  std::vector<std::string> variable_names;
  std::vector<Polynomial> equations;

  std::size_t num_vars() const { return variable_names.size(); }
  bool square() const { return equations.size() == variable_names.size(); }
};

// x - sum m_i (x - x_i) w_i^3, y - sum m_i (y - y_i) w_i^3,
// w_i^2 ((x - x_i)^2 + (y - y_i)^2) - 1.
PolynomialSystem build_system_w(const ExactConfiguration& config);
PolynomialSystem build_system_w(const Configuration& config);

// (a_1 + x_1) - sum m_i a_i w_i^3, (b_1 + y_1) - sum m_i b_i w_i^3,
// w_i^2 (a_i^2 + b_i^2) - 1, a_i - a_1 - (x_1 - x_i), b_i - b_1 - (y_1 - y_i).
PolynomialSystem build_system_ab(const ExactConfiguration& config);
PolynomialSystem build_system_ab(const Configuration& config);

// Values of the system variables at a planar point: w_i = 1/|p - z_i| and,
// for the AB system, a_i = x - x_i, b_i = y - y_i. Throws LiftFailure at a mass.
std::vector<double> lift_point(const PolynomialSystem& system, const Configuration& config, Vec2 p);

// Max absolute equation residual at the lifted equilibrium.
double lift_and_residual(const PolynomialSystem& system, const Configuration& config,
                         const Equilibrium& eq);

Rational max_abs_residual_exact(const PolynomialSystem& system, const std::vector<Rational>& values);

// 4^(n+2).
BigInt bezout_bound(int n);
// (9n^2 + 3n - 4) 2^(n-1).
BigInt mv_formula(int n);
// (9n^2 + n + 2) 2^(n-1).
BigInt mv_tilde_formula(int n);

struct ReferenceDegrees {
  std::map<int, long> degrees;           // published degree bounds by n
  long two_mass_symmetric_bound = 0;     // masses at (+-1, 0)
  std::optional<long> lookup(int n) const;
};

ReferenceDegrees reference_degrees();

// Per equation, the exponent vectors with nonzero coefficient.
struct SupportSet {
  std::vector<std::vector<Exponents>> equations;
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

SupportSet newton_supports(const PolynomialSystem& system);

// One equation per line; exponent vectors separated by ';', entries by ','.
std::string format_supports(const SupportSet& supports);
SupportSet parse_supports(std::string_view text);

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names);
// One "<polynomial> = 0" line per equation.
std::string format_system(const PolynomialSystem& system);

}  // namespace eqlab
