#include "eqlab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <tuple>

#include "eqlab/errors.hpp"

namespace eqlab {

namespace {

constexpr int kRingSeeds = 32;
constexpr int kMaxHalvings = 20;
// Extra Newton steps after convergence, to push ill-conditioned roots down to
// rounding level before deduplication.
constexpr int kPolishSteps = 3;

unsigned env_thread_cap() {
  const char* raw = std::getenv("EQLAB_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || value < 0) return 0;
  return static_cast<unsigned>(value);
}

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const unsigned cap = env_thread_cap(); cap != 0) n = std::min(n, cap);
  return std::max(1u, n);
}

void append_ring(std::vector<Vec2>& out, Vec2 center, double radius) {
  for (int k = 0; k < kRingSeeds; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / kRingSeeds;
    out.push_back({center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
  }
}

// Solves H s = rhs through the eigen-decomposition of H, dropping directions
// whose eigenvalue is negligible relative to the largest one. This keeps the
// step finite on non-isolated families such as the circle of equilibria.
Vec2 pseudo_solve(const SymMat2& h, Vec2 rhs) {
  const double theta = 0.5 * std::atan2(2.0 * h.fxy, h.fxx - h.fyy);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double lambda_a = h.fxx * c * c + 2.0 * h.fxy * s * c + h.fyy * s * s;
  const double lambda_b = h.fxx * s * s - 2.0 * h.fxy * s * c + h.fyy * c * c;
  const double cutoff = 1e-13 * std::max(std::abs(lambda_a), std::abs(lambda_b));
  const double proj_a = c * rhs.x + s * rhs.y;
  const double proj_b = -s * rhs.x + c * rhs.y;
  const double coef_a = std::abs(lambda_a) > cutoff ? proj_a / lambda_a : 0.0;
  const double coef_b = std::abs(lambda_b) > cutoff ? proj_b / lambda_b : 0.0;
  return {c * coef_a - s * coef_b, s * coef_a + c * coef_b};
}

Equilibrium make_equilibrium(const Configuration& config, Vec2 location, const GradHess& gh,
                             double degeneracy_threshold) {
  Equilibrium eq;
  eq.location = location;
  eq.residual = gh.grad.norm();
  eq.hessian = gh.hess;
  eq.hessian_det = gh.hess.det();
  if (std::abs(eq.hessian_det) > degeneracy_threshold) {
    eq.morse_index = classify(gh.hess, degeneracy_threshold);
  }
  eq.min_mass_distance = nearest_mass_distance(config, location);
  return eq;
}

// Location uncertainty of a converged root, |grad| / sigma_min(H), capped so
// that degenerate families do not swallow their neighbours.
double location_uncertainty(const Equilibrium& eq, double cap) {
  const auto [lo, hi] = eq.hessian.eigenvalues();
  const double sigma = std::min(std::abs(lo), std::abs(hi));
  if (!(sigma > 0.0)) return cap;
  return std::min(cap, eq.residual / sigma);
}

// Greedy merge in (residual, x, y) order: a candidate is dropped when an
// already kept root lies within max(radius, 4 (u_a + u_b)).
std::vector<Equilibrium> deduplicate(std::vector<Equilibrium> candidates, double radius,
                                     double uncertainty_cap) {
  std::sort(candidates.begin(), candidates.end(), [](const Equilibrium& a, const Equilibrium& b) {
    return std::tie(a.residual, a.location.x, a.location.y) <
           std::tie(b.residual, b.location.x, b.location.y);
  });
  std::vector<double> uncertainty(candidates.size());
  double max_u = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    uncertainty[i] = location_uncertainty(candidates[i], uncertainty_cap);
    max_u = std::max(max_u, uncertainty[i]);
  }
  const double cell_size = std::max(radius, 8.0 * max_u);
  const auto cell = [cell_size](double v) {
    return static_cast<long long>(std::floor(v / cell_size));
  };

  std::map<std::pair<long long, long long>, std::vector<std::size_t>> buckets;
  std::vector<Equilibrium> kept;
  std::vector<double> kept_u;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& cand = candidates[i];
    const long long cx = cell(cand.location.x);
    const long long cy = cell(cand.location.y);
    bool duplicate = false;
    for (long long dx = -1; dx <= 1 && !duplicate; ++dx) {
      for (long long dy = -1; dy <= 1 && !duplicate; ++dy) {
        const auto it = buckets.find({cx + dx, cy + dy});
        if (it == buckets.end()) continue;
        for (std::size_t idx : it->second) {
          const double reach = std::max(radius, 4.0 * (kept_u[idx] + uncertainty[i]));
          if ((kept[idx].location - cand.location).norm() <= reach) {
            duplicate = true;
            break;
          }
        }
      }
    }
    if (duplicate) continue;
    buckets[{cx, cy}].push_back(kept.size());
    kept.push_back(std::move(cand));
    kept_u.push_back(uncertainty[i]);
  }
  return kept;
}

// Far from the masses the potential is nearly radial about the center of mass,
// so equilibria there sit in a curved valley. Outside the masses' extent the
// Newton step is applied as polar increments about that center, which keeps
// the iterate on the valley instead of cutting its chord.
struct StepGeometry {
  Vec2 center;
  double polar_threshold = std::numeric_limits<double>::infinity();

  explicit StepGeometry(const Configuration& config) {
    if (config.size() == 0) {
      polar_threshold = 0.0;
      return;
    }
    double mass = 0.0;
    for (const auto& mp : config.points()) {
      center = center + mp.m * mp.position();
      mass += mp.m;
    }
    center = (1.0 / mass) * center;
    double extent = 0.0;
    for (const auto& mp : config.points()) extent = std::max(extent, (mp.position() - center).norm());
    polar_threshold = 1.5 * extent;
  }

  Vec2 advance(Vec2 x, Vec2 step) const {
    const Vec2 rel = x - center;
    const double r = rel.norm();
    if (!(r > polar_threshold) || r == 0.0) return x + step;
    const Vec2 e_r = (1.0 / r) * rel;
    const Vec2 e_t{-e_r.y, e_r.x};
    const double new_r = r + step.dot(e_r);
    if (!(new_r > 0.0)) return x + step;
    return center + rotate(new_r * e_r, step.dot(e_t) / r);
  }
};

}  // namespace

ResolvedOptions resolve_options(const Configuration& config, const SearchDomain& domain,
                                const SolveOptions& opts) {
  const double scale = config.scale();
  ResolvedOptions out{};
  if (opts.grid_spacing) {
    out.grid_spacing = *opts.grid_spacing;
  } else {
    const double radius = domain.outer_radius;
    const double d_min = config.size() >= 2 ? config.min_pairwise_distance() : radius;
    double spacing = std::min(d_min / 8.0, radius / 100.0);
    if (domain.puncture_radius > 0.0) spacing = std::min(spacing, domain.puncture_radius);
    const double budget_spacing =
        radius * std::sqrt(std::numbers::pi / static_cast<double>(kDefaultSeedBudget));
    out.grid_spacing = std::max(spacing, budget_spacing);
  }
  out.newton_tolerance = opts.newton_tolerance.value_or(1e-12 * scale);
  out.residual_tolerance = opts.residual_tolerance.value_or(1e-10 * scale);
  out.dedup_radius = opts.dedup_radius.value_or(1e-6 * scale);
  out.max_newton_iters = opts.max_newton_iters;
  out.degeneracy_threshold = opts.degeneracy_threshold;
  out.seed_limit = opts.seed_limit;
  out.threads = resolve_threads(opts.threads);

  if (!(out.grid_spacing > 0.0) || !(out.newton_tolerance > 0.0) ||
      !(out.residual_tolerance > 0.0) || !(out.dedup_radius > 0.0) ||
      !(out.degeneracy_threshold > 0.0) || out.max_newton_iters < 1 || out.seed_limit == 0) {
    throw InvalidParameter("solve options must be positive");
  }
  return out;
}

std::vector<Vec2> seed_grid(const SearchDomain& domain, double spacing, std::size_t seed_limit) {
  if (!(spacing > 0.0)) throw InvalidParameter("grid spacing must be positive");
  const double radius = domain.outer_radius;
  const long long half = static_cast<long long>(std::floor(radius / spacing));
  const double side = 2.0 * static_cast<double>(half) + 1.0;
  // Coarse upper estimate before allocating anything.
  if (side * side * std::numbers::pi / 4.0 >
      static_cast<double>(seed_limit) + 4.0 * side + 1.0) {
    throw CapacityExceeded("seed grid of spacing " + std::to_string(spacing) +
                           " exceeds the seed limit of " + std::to_string(seed_limit));
  }
  std::vector<Vec2> seeds;
  for (long long i = -half; i <= half; ++i) {
    for (long long j = -half; j <= half; ++j) {
      const Vec2 p{static_cast<double>(i) * spacing, static_cast<double>(j) * spacing};
      if (domain.contains(p)) seeds.push_back(p);
    }
  }
  for (const auto& c : domain.centers) append_ring(seeds, c, 2.0 * domain.puncture_radius);
  if (seeds.size() > seed_limit) {
    throw CapacityExceeded("seed count " + std::to_string(seeds.size()) +
                           " exceeds the seed limit of " + std::to_string(seed_limit));
  }
  return seeds;
}

std::vector<Vec2> capture_rings(const SearchDomain& domain, double max_radius) {
  std::vector<Vec2> seeds;
  if (!(domain.puncture_radius > 0.0)) return seeds;
  for (const auto& c : domain.centers) {
    for (double r = 4.0 * domain.puncture_radius; r < max_radius; r *= 2.0) {
      append_ring(seeds, c, r);
    }
  }
  return seeds;
}

int classify(const SymMat2& h, double threshold) {
  const double det = h.det();
  if (!(std::abs(det) > threshold)) {
    throw DegenerateHessian("Hessian determinant " + std::to_string(det) +
                            " is within the degeneracy threshold");
  }
  if (det < 0.0) return 1;
  return h.trace() > 0.0 ? 0 : 2;
}

std::optional<Equilibrium> newton_refine(const Configuration& config, const SearchDomain& domain,
                                         Vec2 seed, const ResolvedOptions& opts) {
  const double cutoff = kDefaultSingularityCutoff * config.scale();
  const auto admissible = [&](Vec2 p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && p.norm() < domain.outer_radius &&
           nearest_mass_distance(config, p) > cutoff;
  };
  if (!admissible(seed)) return std::nullopt;

  const StepGeometry geometry(config);
  Vec2 x = seed;
  GradHess gh = gradient_and_hessian_unchecked(config, x);
  double residual = gh.grad.norm();

  // One damped step; false when no halving reduces |grad F|.
  const auto damped_step = [&] {
    const Vec2 step = pseudo_solve(gh.hess, -1.0 * gh.grad);
    double t = 1.0;
    for (int halving = 0; halving <= kMaxHalvings; ++halving, t *= 0.5) {
      const Vec2 trial = geometry.advance(x, t * step);
      if (!admissible(trial)) continue;
      const GradHess trial_gh = gradient_and_hessian_unchecked(config, trial);
      const double trial_residual = trial_gh.grad.norm();
      if (trial_residual < residual) {
        x = trial;
        gh = trial_gh;
        residual = trial_residual;
        return true;
      }
    }
    return false;
  };
  const auto finish = [&] {
    for (int polish = 0; polish < kPolishSteps && residual > 0.0; ++polish) {
      if (!damped_step()) break;
    }
    return make_equilibrium(config, x, gh, opts.degeneracy_threshold);
  };

  for (int iter = 0; iter < opts.max_newton_iters; ++iter) {
    if (residual <= opts.newton_tolerance) return finish();
    if (!damped_step()) {
      // No descent left: either rounding-level stagnation at a root or a
      // spurious local minimum of |grad F|.
      if (residual <= opts.residual_tolerance) return finish();
      return std::nullopt;
    }
  }
  if (residual <= opts.newton_tolerance) return finish();
  return std::nullopt;
}

std::vector<Equilibrium> find_equilibria(const Configuration& config, const SolveOptions& opts) {
  const SearchDomain domain = search_domain(config);
  const ResolvedOptions resolved = resolve_options(config, domain, opts);

  std::vector<Vec2> seeds = seed_grid(domain, resolved.grid_spacing, resolved.seed_limit);
  const double d_min =
      config.size() >= 2 ? config.min_pairwise_distance() : domain.outer_radius;
  const auto rings = capture_rings(domain, 0.5 * d_min);
  seeds.insert(seeds.end(), rings.begin(), rings.end());

  std::vector<std::optional<Equilibrium>> results(seeds.size());
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 256;
  const auto worker = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= seeds.size()) return;
      const std::size_t end = std::min(seeds.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        results[i] = newton_refine(config, domain, seeds[i], resolved);
      }
    }
  };
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(resolved.threads, seeds.size() / kChunk + 1));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  std::vector<Equilibrium> candidates;
  for (auto& r : results) {
    if (r) candidates.push_back(std::move(*r));
  }
  std::vector<Equilibrium> survivors = deduplicate(std::move(candidates), resolved.dedup_radius, 100.0 * resolved.dedup_radius);
  std::erase_if(survivors, [&](const Equilibrium& eq) {
    return !(eq.residual <= resolved.residual_tolerance) || !domain.contains(eq.location);
  });

  const double dr = resolved.dedup_radius;
  const auto key = [dr](const Equilibrium& eq) {
    return std::make_tuple(std::llround(eq.location.x / dr), std::llround(eq.location.y / dr),
                           eq.location.x, eq.location.y);
  };
  std::sort(survivors.begin(), survivors.end(),
            [&](const Equilibrium& a, const Equilibrium& b) { return key(a) < key(b); });
  return survivors;
}

MorseReport morse_report(const std::vector<Equilibrium>& equilibria, int n) {
  MorseReport report;
  report.n = n;
  report.betti0 = 1;
  report.betti1 = n;
  for (const auto& eq : equilibria) {
    if (!eq.morse_index) {
      ++report.degenerate_count;
      continue;
    }
    switch (*eq.morse_index) {
      case 0: ++report.n0; break;
      case 1: ++report.n1; break;
      default: ++report.n2; break;
    }
  }
  report.total = report.n0 + report.n1 + report.n2;
  report.degenerate_found = report.degenerate_count > 0;
  report.lower_bound_ok = report.total >= n + 1;
  report.euler_ok = report.euler_characteristic() == 1 - n;
  report.minima_ok = report.n0 >= report.betti0;
  report.saddles_ok = report.n1 >= report.betti1;
  return report;
}

}  // namespace eqlab
