#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// solver; gradients and domains are recomputed from their formulas.

#include <cstdint>
#include <vector>

#include "eqlab/core_model.hpp"

namespace oracle {

struct Mass {
  double x;
  double y;
  double m;
};

std::vector<Mass> masses_of(const eqlab::Configuration& config);

// p - sum m (p - z) / |p - z|^3, written out directly.
void gradient(const std::vector<Mass>& masses, double x, double y, double& gx, double& gy);

// max(2 max|z|, (8 M)^(1/3), 1)
double outer_radius(const std::vector<Mass>& masses);

// Scans a node lattice of the given spacing over the bounding square of the
// outer disc, keeps cells where both gradient components take both signs,
// refines them by quad bisection and returns the confirmed roots merged at
// merge_radius, sorted by (x, y).
std::vector<eqlab::Vec2> grid_roots(const eqlab::Configuration& config, double spacing = 1e-3,
                                    double merge_radius = 1e-6);

// Roots of x - sum (x - z)/(2 (x - z)^2)^(3/2) for unit masses at (z, z),
// one per interval between and outside the sorted positions.
std::vector<double> diagonal_roots(const std::vector<double>& positions);

// Random configuration with n masses, weights in [m_lo, m_hi], positions in a
// disc of the given radius and pairwise separation at least min_sep.
eqlab::Configuration random_configuration(std::uint64_t seed, int n, double radius = 1.5,
                                          double min_sep = 0.3, double m_lo = 0.1,
                                          double m_hi = 2.0);

// Greedy one-to-one matching; returns the largest distance between matched
// points, or infinity when the sizes differ.
double match_distance(const std::vector<eqlab::Vec2>& a, const std::vector<eqlab::Vec2>& b);

}  // namespace oracle
