#include "eqlab/ring_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "eqlab/errors.hpp"

namespace eqlab {

namespace {

constexpr double kPi = std::numbers::pi;

double type_b_angle(int n_total, int k) { return (2.0 * k + 1.0) * kPi / (n_total - 1); }

void require_g_domain(int n_total, double x, bool allow_zero) {
  if (n_total < 4) throw InvalidParameter("g is defined for n_total >= 4");
  if (!std::isfinite(x) || x < 0.0 || (!allow_zero && x == 0.0)) {
    throw InvalidParameter("g is defined for x > 0 only");
  }
}

}  // namespace

double RingConfig::period() const { return 2.0 * kPi / peripheral_count(); }

void RingConfig::validate() const {
  if (n_total < 2) throw InvalidParameter("ring needs n_total >= 2");
  if (!(peripheral_mass > 0.0) || !(central_mass > 0.0)) {
    throw InvalidParameter("ring masses must be positive");
  }
  if (!(radius > 0.0)) throw InvalidParameter("ring radius must be positive");
}

Configuration RingConfig::to_configuration() const {
  validate();
  std::vector<MassPoint> points;
  points.push_back({0.0, 0.0, central_mass});
  for (int k = 0; k < peripheral_count(); ++k) {
    const double angle = period() * k;
    points.push_back({radius * std::cos(angle), radius * std::sin(angle), peripheral_mass});
  }
  // Exact zeros for the axis-aligned vertices.
  for (auto& p : points) {
    if (std::abs(p.x) < 1e-15 * radius) p.x = 0.0;
    if (std::abs(p.y) < 1e-15 * radius) p.y = 0.0;
  }
  return Configuration(std::move(points));
}

Configuration make_ring(int n_total, double m, double c, double radius) {
  return RingConfig{n_total, m, c, radius}.to_configuration();
}

RayFamily ray_family(const RingConfig& ring, RayKind kind) {
  ring.validate();
  RayFamily family{kind, {}};
  for (int k = 0; k < ring.peripheral_count(); ++k) {
    family.angles.push_back(kind == RayKind::TypeA ? ring.period() * k
                                                   : type_b_angle(ring.n_total, k));
  }
  return family;
}

double radial_force(const RingConfig& ring, double angle, double x) {
  ring.validate();
  const double cutoff = kDefaultSingularityCutoff * std::max(1.0, ring.radius);
  if (!(x > cutoff)) throw SingularEvaluation("radial force is singular at the central mass");
  double value = x - ring.central_mass / (x * x);
  for (int k = 0; k < ring.peripheral_count(); ++k) {
    const double c = std::cos(ring.period() * k - angle);
    const double d2 = x * x - 2.0 * x * ring.radius * c + ring.radius * ring.radius;
    if (d2 <= cutoff * cutoff) {
      throw SingularEvaluation("radial force is singular at peripheral mass " + std::to_string(k));
    }
    value -= ring.peripheral_mass * (x - ring.radius * c) / (d2 * std::sqrt(d2));
  }
  return value;
}

double radial_force_type_a(const RingConfig& ring, double x) { return radial_force(ring, 0.0, x); }

double g_func(int n_total, double x) {
  require_g_domain(n_total, x, false);
  double sum = 0.0;
  for (int k = 0; k <= n_total - 2; ++k) {
    const double c = std::cos(type_b_angle(n_total, k));
    const double d = x * x - 2.0 * x * c + 1.0;
    sum += (c - x) / (d * std::sqrt(d));
  }
  return sum;
}

double g_prime(int n_total, double x) {
  require_g_domain(n_total, x, true);
  double sum = 0.0;
  for (int k = 0; k <= n_total - 2; ++k) {
    const double c = std::cos(type_b_angle(n_total, k));
    const double d = x * x - 2.0 * x * c + 1.0;
    const double d_half = std::sqrt(d);
    sum += -3.0 * (2.0 * x - 2.0 * c) * (c - x) / (2.0 * d * d * d_half) - 1.0 / (d * d_half);
  }
  return sum;
}

double trig_lemma_sum(int q) {
  if (q <= 2) throw InvalidParameter("trig_lemma_sum needs q > 2");
  double sum = 0.0;
  for (int k = 0; k < q; ++k) sum += std::cos(2.0 * (2.0 * k + 1.0) * kPi / q);
  return sum;
}

std::vector<double> ray_roots(const RingConfig& ring, double angle, const RayScanOptions& opts) {
  const Configuration config = ring.to_configuration();
  const double outer = search_domain(config).outer_radius;
  const double step = opts.step_fraction * ring.radius;
  const double start = opts.cutoff_fraction * ring.radius;

  // Distances along the ray at which a peripheral mass sits.
  std::vector<double> poles;
  for (int k = 0; k < ring.peripheral_count(); ++k) {
    const double offset = std::remainder(ring.period() * k - angle, 2.0 * kPi);
    if (std::abs(offset) < 1e-12) poles.push_back(ring.radius);
  }
  const auto pole_between = [&](double a, double b) {
    for (double p : poles) {
      if (p >= a && p <= b) return true;
    }
    return false;
  };
  const auto eval = [&](double x) -> std::optional<double> {
    try {
      return radial_force(ring, angle, x);
    } catch (const SingularEvaluation&) {
      return std::nullopt;
    }
  };

  std::vector<double> roots;
  const long long steps = static_cast<long long>(std::ceil((outer - start) / step));
  double prev_x = start;
  std::optional<double> prev_f = eval(prev_x);
  for (long long i = 1; i <= steps; ++i) {
    const double x = std::min(outer, start + static_cast<double>(i) * step);
    const std::optional<double> f = eval(x);
    if (prev_f && f && !pole_between(prev_x, x)) {
      if (*f == 0.0) {
        roots.push_back(x);
      } else if ((*prev_f < 0.0) != (*f < 0.0) && *prev_f != 0.0) {
        double lo = prev_x;
        double hi = x;
        const bool lo_negative = *prev_f < 0.0;
        while (hi - lo > opts.bisection_tolerance) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          const double fm = radial_force(ring, angle, mid);
          if (fm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((fm < 0.0) == lo_negative) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

std::vector<double> ray_equilibria(const RingConfig& ring, RayKind kind, const RayScanOptions& opts) {
  ring.validate();
  if (kind == RayKind::TypeB && ring.n_total < 4) {
    throw InvalidParameter("type-B ray analysis needs n_total >= 4");
  }
  const double angle = kind == RayKind::TypeA ? 0.0 : 0.5 * ring.period();
  return ray_roots(ring, angle, opts);
}

RayPlacement classify_ray(const RingConfig& ring, Vec2 p, double angular_tolerance) {
  const double period = ring.period();
  double phase = std::fmod(std::atan2(p.y, p.x), period);
  if (phase < 0.0) phase += period;
  if (std::min(phase, period - phase) <= angular_tolerance) return RayPlacement::TypeA;
  if (std::abs(phase - 0.5 * period) <= angular_tolerance) return RayPlacement::TypeB;
  return RayPlacement::OffRay;
}

RingCount count_ring_equilibria(const RingConfig& ring, const SolveOptions& opts) {
  ring.validate();
  RingCount count;
  count.equilibria = find_equilibria(ring.to_configuration(), opts);
  count.total = static_cast<int>(count.equilibria.size());
  for (const auto& eq : count.equilibria) {
    if (eq.degenerate()) count.degenerate_found = true;
    switch (classify_ray(ring, eq.location)) {
      case RayPlacement::TypeA: ++count.ray_a; break;
      case RayPlacement::TypeB: ++count.ray_b; break;
      case RayPlacement::OffRay: ++count.off_ray; break;
    }
  }
  count.per_ray_a = static_cast<int>(ray_roots(ring, 0.0).size());
  count.per_ray_b = static_cast<int>(ray_roots(ring, 0.5 * ring.period()).size());
  const int rays = ring.peripheral_count();
  count.consistent = count.ray_a == count.per_ray_a * rays && count.ray_b == count.per_ray_b * rays &&
                     count.total == (count.per_ray_a + count.per_ray_b) * rays + count.off_ray;
  return count;
}

SweepResult mass_sweep(int n_total, const std::vector<double>& mass_ratios, const SolveOptions& opts) {
  if (n_total < 4) throw InvalidParameter("mass sweep needs n_total >= 4");
  for (std::size_t i = 0; i < mass_ratios.size(); ++i) {
    if (!(mass_ratios[i] > 0.0)) throw InvalidParameter("mass ratios must be positive");
    if (i > 0 && !(mass_ratios[i] > mass_ratios[i - 1])) {
      throw InvalidParameter("mass ratios must be ascending");
    }
  }
  SweepResult sweep;
  sweep.n_total = n_total;
  const int full = 5 * n_total - 5;
  for (double ratio : mass_ratios) {
    SweepRow row;
    row.ratio = ratio;
    try {
      row.result = count_ring_equilibria(RingConfig{n_total, ratio, 1.0, 1.0}, opts);
      if (!sweep.first_full_ratio && row.result->total >= full) sweep.first_full_ratio = ratio;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    sweep.rows.push_back(std::move(row));
  }
  return sweep;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out.precision(17);
  out << "ratio,count,ray_a_count,ray_b_count,off_ray_count\n";
  for (const auto& row : sweep.rows) {
    out << row.ratio;
    if (row.result) {
      out << ',' << row.result->total << ',' << row.result->ray_a << ',' << row.result->ray_b << ','
          << row.result->off_ray;
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace eqlab
