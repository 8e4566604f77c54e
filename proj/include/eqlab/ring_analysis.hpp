#pragma once

// Ring configurations: n-1 equal peripheral masses on a regular polygon plus
// one central mass. Equilibria sit on two families of symmetry rays, through a
// peripheral mass (type A) and bisecting two neighbours (type B), and the
// radial force along each ray is a one-dimensional function.

#include <optional>
#include <string>
#include <vector>

#include "eqlab/core_model.hpp"
#include "eqlab/solver.hpp"

namespace eqlab {

struct RingConfig {
  int n_total = 4;  // total number of masses, central one included
  double peripheral_mass = 1.0;
  double central_mass = 1.0;
  double radius = 1.0;

  int peripheral_count() const { return n_total - 1; }
  // Angular period 2*pi/(n-1) of the configuration.
  double period() const;
  Configuration to_configuration() const;
  void validate() const;
};

Configuration make_ring(int n_total, double m, double c, double radius = 1.0);

enum class RayKind { TypeA, TypeB };

struct RayFamily {
  RayKind kind;
  std::vector<double> angles;
};

// Type A: 2k pi/(n-1); type B: (2k+1) pi/(n-1), k = 0..n-2.
RayFamily ray_family(const RingConfig& ring, RayKind kind);

// Component of grad F along the unit vector at `angle`, evaluated at distance
// x > 0 from the origin. Throws SingularEvaluation at a mass.
double radial_force(const RingConfig& ring, double angle, double x);

// F_x(x, 0) with a type-A ray along the positive x axis.
double radial_force_type_a(const RingConfig& ring, double x);

// Sum over k = 0..n-2 of (cos a_k - x) / (x^2 - 2x cos a_k + 1)^(3/2) with
// a_k = (2k+1) pi/(n-1). Requires n_total >= 4 and x > 0.
double g_func(int n_total, double x);

// Derivative of g_func; x = 0 is admitted, where it equals (n-1)/2.
double g_prime(int n_total, double x);

// Sum over k = 0..q-1 of cos(2(2k+1) pi / q), which vanishes for q > 2.
double trig_lemma_sum(int q);

struct RayScanOptions {
  double step_fraction = 1e-4;    // scan step relative to the ring radius
  double cutoff_fraction = 1e-6;  // scan start relative to the ring radius
  double bisection_tolerance = 1e-12;
};

// Roots of radial_force along the ray at `angle`, from a sign-change scan over
// (cutoff, R] refined by bisection. Sign changes across a mass are skipped.
std::vector<double> ray_roots(const RingConfig& ring, double angle, const RayScanOptions& opts = {});

// Roots along the representative ray of the family (angle 0 for type A,
// pi/(n-1) for type B). Type B requires n_total >= 4.
std::vector<double> ray_equilibria(const RingConfig& ring, RayKind kind,
                                   const RayScanOptions& opts = {});

enum class RayPlacement { TypeA, TypeB, OffRay };

RayPlacement classify_ray(const RingConfig& ring, Vec2 p, double angular_tolerance = 1e-8);

struct RingCount {
  int total = 0;
  int ray_a = 0;    // solver equilibria on type-A rays
  int ray_b = 0;    // solver equilibria on type-B rays
  int off_ray = 0;
  int per_ray_a = 0;  // 1D roots on one type-A ray
  int per_ray_b = 0;  // 1D roots on one type-B ray
  // total == (per_ray_a + per_ray_b) (n-1) + off_ray, and the solver's ray
  // tallies match the 1D counts.
  bool consistent = false;
  bool degenerate_found = false;
  std::vector<Equilibrium> equilibria;
};

RingCount count_ring_equilibria(const RingConfig& ring, const SolveOptions& opts = {});

struct SweepRow {
  double ratio = 0.0;
  std::optional<RingCount> result;  // empty when the solver failed
  std::string error;
};

struct SweepResult {
  int n_total = 0;
  std::vector<SweepRow> rows;
  // Smallest swept ratio m/c whose count reached 5n - 5.
  std::optional<double> first_full_ratio;
};

// Rings with c = 1 and m = ratio for each ratio, in input order.
SweepResult mass_sweep(int n_total, const std::vector<double>& mass_ratios,
                       const SolveOptions& opts = {});

// CSV with header "ratio,count,ray_a_count,ray_b_count,off_ray_count"; rows
// whose solve failed leave the count fields empty.
std::string sweep_csv(const SweepResult& sweep);

}  // namespace eqlab
