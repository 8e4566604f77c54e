#pragma once

// Named example families: unit masses on the diagonal (exactly n+1
// equilibria), the two-body Lagrange setting and the equal-mass triangle, both
// scaled to unit angular speed.

#include <vector>

#include "eqlab/core_model.hpp"

namespace eqlab {

// Unit masses at (z_i, z_i) with 0 < z_1 < ... < z_n.
class CollinearConfig {
 public:
  explicit CollinearConfig(std::vector<double> diagonal_positions);

  const std::vector<double>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  Configuration to_configuration() const;

 private:
  std::vector<double> positions_;
};

// Diagonal restriction F_x(x, x) = x - sum_i (x - z_i) / (2 (x - z_i)^2)^(3/2).
double collinear_f(const CollinearConfig& config, double x);
// 1 + sum_i 1 / (sqrt(2) |x - z_i|^3).
double collinear_f_prime(const CollinearConfig& config, double x);

// One root of collinear_f per interval (-inf, z_1), (z_1, z_2), ..., (z_n, inf),
// as diagonal points. Throws BracketFailure if an interval has no sign change.
std::vector<Vec2> collinear_equilibria(const CollinearConfig& config);

// Masses m1 at (-m2 d/M, 0) and m2 at (m1 d/M, 0), M = m1 + m2, d = M^(1/3).
Configuration lagrange_config(double m1, double m2);

// Equal masses m on an equilateral triangle of side (3m)^(1/3) centred at the
// origin, first vertex on the positive x axis.
Configuration triangle_config(double m);

}  // namespace eqlab
