#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <utility>

namespace oracle {

std::vector<Mass> masses_of(const eqlab::Configuration& config) {
  std::vector<Mass> out;
  for (const auto& p : config.points()) out.push_back({p.x, p.y, p.m});
  return out;
}

void gradient(const std::vector<Mass>& masses, double x, double y, double& gx, double& gy) {
  gx = x;
  gy = y;
  for (const Mass& q : masses) {
    const double dx = x - q.x;
    const double dy = y - q.y;
    const double r2 = dx * dx + dy * dy;
    const double inv = q.m / (r2 * std::sqrt(r2));
    gx -= dx * inv;
    gy -= dy * inv;
  }
}

double outer_radius(const std::vector<Mass>& masses) {
  double far = 0.0;
  double total = 0.0;
  for (const Mass& q : masses) {
    far = std::max(far, std::sqrt(q.x * q.x + q.y * q.y));
    total += q.m;
  }
  return std::max({2.0 * far, std::cbrt(8.0 * total), 1.0});
}

namespace {

struct Signs {
  bool gx_neg = false;
  bool gx_pos = false;
  bool gy_neg = false;
  bool gy_pos = false;

  void add(double gx, double gy) {
    if (!std::isfinite(gx) || !std::isfinite(gy)) {
      gx_neg = gx_pos = gy_neg = gy_pos = true;
      return;
    }
    gx_neg |= gx <= 0.0;
    gx_pos |= gx >= 0.0;
    gy_neg |= gy <= 0.0;
    gy_pos |= gy >= 0.0;
  }
  bool both() const { return gx_neg && gx_pos && gy_neg && gy_pos; }
};

struct Cell {
  double x0;
  double y0;
  double size;
  friend bool operator<(const Cell& a, const Cell& b) {
    return std::tie(a.x0, a.y0) < std::tie(b.x0, b.y0);
  }
};

bool straddles(const std::vector<Mass>& masses, const Cell& c) {
  Signs s;
  for (int j = 0; j <= 1; ++j) {
    for (int i = 0; i <= 1; ++i) {
      double gx = 0.0;
      double gy = 0.0;
      gradient(masses, c.x0 + i * c.size, c.y0 + j * c.size, gx, gy);
      s.add(gx, gy);
    }
  }
  return s.both();
}

// Quad bisection down to a tiny cell; returns the centres of surviving cells.
std::vector<eqlab::Vec2> refine(const std::vector<Mass>& masses, Cell start, double final_size) {
  std::set<Cell> level{start};
  while (!level.empty() && level.begin()->size > final_size) {
    std::set<Cell> next;
    for (const Cell& c : level) {
      const double h = c.size / 2;
      for (int j = 0; j <= 1; ++j) {
        for (int i = 0; i <= 1; ++i) {
          const Cell child{c.x0 + i * h, c.y0 + j * h, h};
          if (straddles(masses, child)) next.insert(child);
        }
      }
    }
    // Degenerate sign patterns can keep many cells alive; keep the walk bounded.
    if (next.size() > 64) break;
    level = std::move(next);
  }
  std::vector<eqlab::Vec2> out;
  for (const Cell& c : level) out.push_back({c.x0 + c.size / 2, c.y0 + c.size / 2});
  return out;
}

}  // namespace

std::vector<eqlab::Vec2> grid_roots(const eqlab::Configuration& config, double spacing,
                                    double merge_radius) {
  const std::vector<Mass> masses = masses_of(config);
  const double r = outer_radius(masses);
  const auto nodes = static_cast<long>(std::ceil(2.0 * r / spacing)) + 1;
  const double origin = -r;

  std::vector<double> gx_prev(nodes), gy_prev(nodes), gx_row(nodes), gy_row(nodes);
  const auto fill = [&](long j, std::vector<double>& gx, std::vector<double>& gy) {
    const double y = origin + j * spacing;
    for (long i = 0; i < nodes; ++i) gradient(masses, origin + i * spacing, y, gx[i], gy[i]);
  };

  std::vector<Cell> candidates;
  fill(0, gx_prev, gy_prev);
  for (long j = 1; j < nodes; ++j) {
    fill(j, gx_row, gy_row);
    for (long i = 0; i + 1 < nodes; ++i) {
      Signs s;
      s.add(gx_prev[i], gy_prev[i]);
      s.add(gx_prev[i + 1], gy_prev[i + 1]);
      s.add(gx_row[i], gy_row[i]);
      s.add(gx_row[i + 1], gy_row[i + 1]);
      if (s.both()) candidates.push_back({origin + i * spacing, origin + (j - 1) * spacing, spacing});
    }
    std::swap(gx_prev, gx_row);
    std::swap(gy_prev, gy_row);
  }

  std::vector<eqlab::Vec2> roots;
  for (const Cell& c : candidates) {
    for (const eqlab::Vec2 p : refine(masses, c, 1e-11)) {
      if (p.norm() >= r) continue;
      double gx = 0.0;
      double gy = 0.0;
      gradient(masses, p.x, p.y, gx, gy);
      if (!(std::hypot(gx, gy) <= 1e-6)) continue;
      const bool seen = std::any_of(roots.begin(), roots.end(),
                                    [&](eqlab::Vec2 q) { return (q - p).norm() <= merge_radius; });
      if (!seen) roots.push_back(p);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](eqlab::Vec2 a, eqlab::Vec2 b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  return roots;
}

std::vector<double> diagonal_roots(const std::vector<double>& positions) {
  std::vector<double> z = positions;
  std::sort(z.begin(), z.end());
  const auto f = [&](double x) {
    double v = x;
    for (double zi : z) {
      const double d = x - zi;
      v -= d / std::pow(2.0 * d * d, 1.5);
    }
    return v;
  };
  // f runs from -inf to +inf on every interval.
  std::vector<std::pair<double, double>> brackets;
  const double gap = 1e-7;
  brackets.emplace_back(z.front() - 1e3, z.front() - gap);
  for (std::size_t k = 0; k + 1 < z.size(); ++k) brackets.emplace_back(z[k] + gap, z[k + 1] - gap);
  brackets.emplace_back(z.back() + gap, z.back() + 1e3);

  std::vector<double> roots;
  for (auto [lo, hi] : brackets) {
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f(mid) < 0.0 ? lo : hi) = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

eqlab::Configuration random_configuration(std::uint64_t seed, int n, double radius, double min_sep,
                                          double m_lo, double m_hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-radius, radius);
  std::uniform_real_distribution<double> weight(m_lo, m_hi);
  std::vector<eqlab::MassPoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    const double x = coord(rng);
    const double y = coord(rng);
    if (std::hypot(x, y) > radius) continue;
    const bool close = std::any_of(pts.begin(), pts.end(), [&](const eqlab::MassPoint& q) {
      return std::hypot(q.x - x, q.y - y) < min_sep;
    });
    if (close) continue;
    pts.push_back({x, y, weight(rng)});
  }
  return eqlab::Configuration(std::move(pts));
}

double match_distance(const std::vector<eqlab::Vec2>& a, const std::vector<eqlab::Vec2>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const eqlab::Vec2 p : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k]) continue;
      const double d = (p - b[k]).norm();
      if (d < best) {
        best = d;
        pick = k;
      }
    }
    if (pick == b.size()) return std::numeric_limits<double>::infinity();
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace oracle
