#include "eqlab/bounds_examples.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "eqlab/errors.hpp"

namespace eqlab {

CollinearConfig::CollinearConfig(std::vector<double> diagonal_positions)
    : positions_(std::move(diagonal_positions)) {
  if (positions_.empty()) throw InvalidParameter("collinear configuration needs a mass");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!std::isfinite(positions_[i]) || !(positions_[i] > 0.0)) {
      throw InvalidParameter("diagonal positions must be positive");
    }
    if (i > 0 && !(positions_[i] > positions_[i - 1])) {
      throw InvalidParameter("diagonal positions must be strictly increasing");
    }
  }
}

Configuration CollinearConfig::to_configuration() const {
  std::vector<MassPoint> points;
  points.reserve(positions_.size());
  for (double z : positions_) points.push_back({z, z, 1.0});
  return Configuration(std::move(points));
}

namespace {

void check_off_singularity(const CollinearConfig& config, double x) {
  const double limit = kDefaultSingularityCutoff * std::max(1.0, config.positions().back());
  for (double z : config.positions()) {
    if (std::abs(x - z) * std::numbers::sqrt2 <= limit) {
      throw SingularEvaluation("collinear f is singular at x = " + std::to_string(z));
    }
  }
}

// Bisection on a bracket with f(lo) < 0 < f(hi), down to adjacent doubles.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double collinear_f(const CollinearConfig& config, double x) {
  check_off_singularity(config, x);
  double value = x;
  for (double z : config.positions()) {
    const double d = x - z;
    const double s = 2.0 * d * d;
    value -= d / (s * std::sqrt(s));
  }
  return value;
}

double collinear_f_prime(const CollinearConfig& config, double x) {
  check_off_singularity(config, x);
  double value = 1.0;
  for (double z : config.positions()) {
    const double a = std::abs(x - z);
    value += 1.0 / (std::numbers::sqrt2 * a * a * a);
  }
  return value;
}

std::vector<Vec2> collinear_equilibria(const CollinearConfig& config) {
  const auto f = [&](double x) { return collinear_f(config, x); };
  const auto& z = config.positions();
  const std::size_t n = z.size();
  std::vector<Vec2> roots;
  roots.reserve(n + 1);

  // f -> -inf just right of each z_i and as x -> -inf; f -> +inf just left of
  // each z_i and as x -> +inf.
  const auto approach = [&](double pole, double direction, double width, bool want_negative) {
    for (double delta = 0.5 * width; delta > 0.0; delta *= 0.5) {
      const double x = pole + direction * delta;
      if (x == pole) break;
      const double v = f(x);
      if ((v < 0.0) == want_negative && v != 0.0) return x;
    }
    throw BracketFailure("no sign change next to z = " + std::to_string(pole));
  };
  const auto expand = [&](double anchor, double direction, bool want_negative) {
    for (double reach = 1.0; reach < 1e300; reach *= 2.0) {
      const double x = anchor + direction * reach;
      const double v = f(x);
      if ((v < 0.0) == want_negative && v != 0.0) return x;
    }
    throw BracketFailure("unbounded interval never changes sign");
  };

  const auto add = [&](double x) { roots.push_back({x, x}); };
  add(bisect(f, expand(z[0], -1.0, true), approach(z[0], -1.0, std::max(1.0, z[0]), false)));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gap = z[i + 1] - z[i];
    add(bisect(f, approach(z[i], 1.0, gap, true), approach(z[i + 1], -1.0, gap, false)));
  }
  add(bisect(f, approach(z[n - 1], 1.0, std::max(1.0, z[n - 1]), true), expand(z[n - 1], 1.0, false)));
  return roots;
}

Configuration lagrange_config(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0)) throw InvalidParameter("Lagrange masses must be positive");
  const double total = m1 + m2;
  const double d = std::cbrt(total);
  return Configuration({{-m2 * d / total, 0.0, m1}, {m1 * d / total, 0.0, m2}});
}

Configuration triangle_config(double m) {
  if (!(m > 0.0)) throw InvalidParameter("triangle mass must be positive");
  const double side = std::cbrt(3.0 * m);
  const double circumradius = side / std::sqrt(3.0);
  std::vector<MassPoint> points;
  for (int k = 0; k < 3; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / 3.0;
    points.push_back({circumradius * std::cos(angle), circumradius * std::sin(angle), m});
  }
  points[0].y = 0.0;
  return Configuration(std::move(points));
}

}  // namespace eqlab
