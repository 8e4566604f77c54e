#pragma once

// Multistart damped Newton search for every critical point of the effective
// potential inside its search domain, with Morse classification.

#include <cstddef>
#include <optional>
#include <vector>

#include "eqlab/core_model.hpp"

namespace eqlab {

struct Equilibrium {
  Vec2 location;
  double residual = 0.0;  // |grad F| at location
  SymMat2 hessian;
  double hessian_det = 0.0;
  // Number of negative Hessian eigenvalues; empty when |det| is at or below
  // the degeneracy threshold.
  std::optional<int> morse_index;
  double min_mass_distance = 0.0;

  bool degenerate() const { return !morse_index.has_value(); }
};

// Unset fields resolve against the configuration (see resolve_options).
struct SolveOptions {
  std::optional<double> grid_spacing;
  std::optional<double> newton_tolerance;
  std::optional<double> residual_tolerance;
  std::optional<double> dedup_radius;
  int max_newton_iters = 100;
  double degeneracy_threshold = 1e-8;
  std::size_t seed_limit = 10'000'000;
  // 0 = hardware concurrency, further capped by EQLAB_THREADS when set.
  unsigned threads = 0;
};

struct ResolvedOptions {
  double grid_spacing;
  double newton_tolerance;
  double residual_tolerance;
  double dedup_radius;
  int max_newton_iters;
  double degeneracy_threshold;
  std::size_t seed_limit;
  unsigned threads;
};

// Seed budget used when the default spacing would produce more seeds; the
// graded capture rings keep resolution near the masses.
inline constexpr std::size_t kDefaultSeedBudget = 200'000;

ResolvedOptions resolve_options(const Configuration& config, const SearchDomain& domain,
                                const SolveOptions& opts);

// Square lattice of the given spacing restricted to the domain, plus 32 seeds
// on the circle of radius 2*eps around each center. Throws CapacityExceeded
// when more than seed_limit seeds would be produced.
std::vector<Vec2> seed_grid(const SearchDomain& domain, double spacing,
                            std::size_t seed_limit = 10'000'000);

// 32 seeds on each circle of radius 2^k * 2*eps around every center, for
// k >= 1 while the radius stays below max_radius.
std::vector<Vec2> capture_rings(const SearchDomain& domain, double max_radius);

std::optional<Equilibrium> newton_refine(const Configuration& config, const SearchDomain& domain,
                                         Vec2 seed, const ResolvedOptions& opts);

// Morse index from the signs of det and trace. Throws DegenerateHessian when
// |det| <= threshold.
int classify(const SymMat2& h, double threshold);

std::vector<Equilibrium> find_equilibria(const Configuration& config, const SolveOptions& opts = {});

struct MorseReport {
  int n = 0;
  int n0 = 0;
  int n1 = 0;
  int n2 = 0;
  int total = 0;  // classified equilibria only
  int degenerate_count = 0;
  int betti0 = 1;
  int betti1 = 0;
  bool lower_bound_ok = false;  // total >= n + 1
  bool euler_ok = false;        // n0 - n1 + n2 == 1 - n
  bool minima_ok = false;       // n0 >= 1
  bool saddles_ok = false;      // n1 >= n
  bool degenerate_found = false;

  int euler_characteristic() const { return n0 - n1 + n2; }
};

MorseReport morse_report(const std::vector<Equilibrium>& equilibria, int n);

}  // namespace eqlab
