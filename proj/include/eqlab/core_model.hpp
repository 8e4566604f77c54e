#pragma once

// Effective potential F(z) = |z|^2/2 + sum_i m_i/|z - z_i| of point masses in a
// co-rotating frame, with analytic derivatives and a bounded search domain
// that provably contains every critical point.

#include <cmath>
#include <span>
#include <utility>
#include <vector>

namespace eqlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;

  double norm() const { return std::hypot(x, y); }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
};

inline Vec2 rotate(Vec2 p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Symmetric 2x2 matrix [[fxx, fxy], [fxy, fyy]].
struct SymMat2 {
  double fxx = 0.0;
  double fxy = 0.0;
  double fyy = 0.0;

  double det() const { return fxx * fyy - fxy * fxy; }
  double trace() const { return fxx + fyy; }
  // Eigenvalues in ascending order.
  std::pair<double, double> eigenvalues() const;
};

struct MassPoint {
  double x = 0.0;
  double y = 0.0;
  double m = 1.0;

  Vec2 position() const { return {x, y}; }
};

// Ordered set of point masses. Construction validates positive masses and
// pairwise distinct positions; an empty configuration (pure quadratic bowl)
// is only available through quadratic_only().
class Configuration {
 public:
  explicit Configuration(std::vector<MassPoint> points);

  static Configuration quadratic_only();

  std::span<const MassPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const MassPoint& operator[](std::size_t i) const { return points_[i]; }

  double total_mass() const;
  double min_mass() const;
  double max_position_norm() const;
  // Minimum pairwise distance; infinity for fewer than two masses.
  double min_pairwise_distance() const;
  // max(1, max_i |z_i|); all absolute tolerances are relative to this.
  double scale() const;

  Configuration rotated(double theta) const;

 private:
  Configuration() = default;
  std::vector<MassPoint> points_;
};

inline constexpr double kDefaultSingularityCutoff = 1e-14;

// Each evaluator throws SingularEvaluation when p lies within
// cutoff * config.scale() of a mass.
double potential(const Configuration& config, Vec2 p,
                 double cutoff = kDefaultSingularityCutoff);
Vec2 gradient(const Configuration& config, Vec2 p,
              double cutoff = kDefaultSingularityCutoff);
SymMat2 hessian(const Configuration& config, Vec2 p,
                double cutoff = kDefaultSingularityCutoff);

// Distance from p to the nearest mass (infinity when there are none).
double nearest_mass_distance(const Configuration& config, Vec2 p);

struct GradHess {
  Vec2 grad;
  SymMat2 hess;
};

// Unchecked joint evaluation for hot loops; caller guarantees p is regular.
GradHess gradient_and_hessian_unchecked(const Configuration& config, Vec2 p);

// Disc of radius outer_radius with a disc of radius puncture_radius removed
// around every mass.
struct SearchDomain {
  double outer_radius = 1.0;
  double puncture_radius = 0.0;
  std::vector<Vec2> centers;

  bool contains(Vec2 p) const;
};

// R = max(2 max|z_i|, (8 sum m)^(1/3), 1);
// eps = min(d_min/4, sqrt(m_min / (2B))), B = R + sum m_j / (d_min/2)^2,
// with d_min = R when n = 1.
SearchDomain search_domain(const Configuration& config);

}  // namespace eqlab
