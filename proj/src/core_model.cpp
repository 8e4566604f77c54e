#include "eqlab/core_model.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "eqlab/errors.hpp"

namespace eqlab {

std::pair<double, double> SymMat2::eigenvalues() const {
  const double mean = 0.5 * (fxx + fyy);
  const double half_diff = 0.5 * (fxx - fyy);
  const double radius = std::hypot(half_diff, fxy);
  return {mean - radius, mean + radius};
}

Configuration::Configuration(std::vector<MassPoint> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw InvalidParameter("configuration needs at least one mass");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.m)) {
      throw InvalidParameter("mass " + std::to_string(i) + " has a non-finite field");
    }
    if (!(p.m > 0.0)) {
      throw InvalidParameter("mass " + std::to_string(i) + " must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[j].x == p.x && points_[j].y == p.y) {
        std::ostringstream msg;
        msg << "masses " << j << " and " << i << " share position (" << p.x << ", " << p.y << ")";
        throw InvalidParameter(msg.str());
      }
    }
  }
}

Configuration Configuration::quadratic_only() { return Configuration(); }

double Configuration::total_mass() const {
  double sum = 0.0;
  for (const auto& p : points_) sum += p.m;
  return sum;
}

double Configuration::min_mass() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points_) best = std::min(best, p.m);
  return best;
}

double Configuration::max_position_norm() const {
  double best = 0.0;
  for (const auto& p : points_) best = std::max(best, p.position().norm());
  return best;
}

double Configuration::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      best = std::min(best, (points_[i].position() - points_[j].position()).norm());
    }
  }
  return best;
}

double Configuration::scale() const { return std::max(1.0, max_position_norm()); }

Configuration Configuration::rotated(double theta) const {
  Configuration out;
  out.points_.reserve(points_.size());
  for (const auto& p : points_) {
    const Vec2 q = rotate(p.position(), theta);
    out.points_.push_back({q.x, q.y, p.m});
  }
  return out;
}

double nearest_mass_distance(const Configuration& config, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& mp : config.points()) best = std::min(best, (p - mp.position()).norm());
  return best;
}

namespace {

void check_regular(const Configuration& config, Vec2 p, double cutoff) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw InvalidParameter("evaluation point is not finite");
  }
  const double limit = cutoff * config.scale();
  for (std::size_t i = 0; i < config.size(); ++i) {
    if ((p - config[i].position()).norm() <= limit) {
      std::ostringstream msg;
      msg << "evaluation at (" << p.x << ", " << p.y << ") is within " << limit << " of mass " << i;
      throw SingularEvaluation(msg.str());
    }
  }
}

}  // namespace

double potential(const Configuration& config, Vec2 p, double cutoff) {
  check_regular(config, p, cutoff);
  double value = 0.5 * (p.x * p.x + p.y * p.y);
  for (const auto& mp : config.points()) value += mp.m / (p - mp.position()).norm();
  return value;
}

Vec2 gradient(const Configuration& config, Vec2 p, double cutoff) {
  check_regular(config, p, cutoff);
  Vec2 g = p;
  for (const auto& mp : config.points()) {
    const double dx = p.x - mp.x;
    const double dy = p.y - mp.y;
    const double r2 = dx * dx + dy * dy;
    const double w = mp.m / (r2 * std::sqrt(r2));
    g.x -= w * dx;
    g.y -= w * dy;
  }
  return g;
}

GradHess gradient_and_hessian_unchecked(const Configuration& config, Vec2 p) {
  GradHess out{p, {1.0, 0.0, 1.0}};
  for (const auto& mp : config.points()) {
    const double dx = p.x - mp.x;
    const double dy = p.y - mp.y;
    const double r2 = dx * dx + dy * dy;
    const double r = std::sqrt(r2);
    const double w3 = mp.m / (r2 * r);
    const double w5 = w3 / r2;
    out.grad.x -= w3 * dx;
    out.grad.y -= w3 * dy;
    out.hess.fxx += w5 * (2.0 * dx * dx - dy * dy);
    out.hess.fyy += w5 * (2.0 * dy * dy - dx * dx);
    out.hess.fxy += 3.0 * w5 * dx * dy;
  }
  return out;
}

SymMat2 hessian(const Configuration& config, Vec2 p, double cutoff) {
  check_regular(config, p, cutoff);
  return gradient_and_hessian_unchecked(config, p).hess;
}

bool SearchDomain::contains(Vec2 p) const {
  if (!(p.norm() < outer_radius)) return false;
  for (const auto& c : centers) {
    if (!((p - c).norm() > puncture_radius)) return false;
  }
  return true;
}

SearchDomain search_domain(const Configuration& config) {
  SearchDomain domain;
  const double total = config.total_mass();
  domain.outer_radius =
      std::max({2.0 * config.max_position_norm(), std::cbrt(8.0 * total), 1.0});
  if (config.size() == 0) return domain;

  const double d_min =
      config.size() == 1 ? domain.outer_radius : config.min_pairwise_distance();
  const double half = 0.5 * d_min;
  const double bound = domain.outer_radius + total / (half * half);
  domain.puncture_radius = std::min(0.25 * d_min, std::sqrt(config.min_mass() / (2.0 * bound)));
  for (const auto& mp : config.points()) domain.centers.push_back(mp.position());
  return domain;
}

}  // namespace eqlab
