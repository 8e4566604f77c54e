#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "eqlab/bounds_examples.hpp"
#include "eqlab/errors.hpp"
#include "eqlab/ring_analysis.hpp"
#include "eqlab/solver.hpp"
#include "oracle.hpp"

using namespace eqlab;

namespace {

SearchDomain fixture(double r, double eps, std::vector<Vec2> centers) { return {r, eps, std::move(centers)}; }

std::vector<Vec2> locations(const std::vector<Equilibrium>& eqs) {
  std::vector<Vec2> out;
  for (const auto& e : eqs) out.push_back(e.location);
  return out;
}

}  // namespace

TEST(SeedGrid, LatticeWithoutPunctures) {
  const auto seeds = seed_grid(fixture(2, 0, {}), 1.0);
  EXPECT_EQ(seeds.size(), 9u);
}

TEST(SeedGrid, PunctureAddsRing) {
  const auto seeds = seed_grid(fixture(2, 0.5, {{0, 0}}), 1.0);
  EXPECT_EQ(seeds.size(), 8u + 32u);
  EXPECT_EQ(std::count(seeds.begin(), seeds.end(), Vec2{0, 0}), 0);
  const auto on_ring = std::count_if(seeds.begin(), seeds.end(), [](Vec2 p) { return std::abs(p.norm() - 1.0) < 1e-12; });
  EXPECT_EQ(on_ring, 32 + 4);  // the lattice points (+-1, 0), (0, +-1) also have norm 1
}

TEST(SeedGrid, CapacityAndSpacing) {
  EXPECT_THROW(seed_grid(fixture(100, 0, {}), 0.01, 1000), CapacityExceeded);
  EXPECT_THROW(seed_grid(fixture(2, 0, {}), 0.0), InvalidParameter);
}

TEST(NewtonRefine, SingleMassConvergesToCircle) {
  const Configuration c({{0, 0, 1}});
  const SearchDomain d = search_domain(c);
  const ResolvedOptions o = resolve_options(c, d, {});
  const auto eq = newton_refine(c, d, {1.1, 0}, o);
  ASSERT_TRUE(eq.has_value());
  EXPECT_NEAR(eq->location.x, 1.0, 1e-10);
  EXPECT_NEAR(eq->location.y, 0.0, 1e-10);
}

TEST(NewtonRefine, CollinearLeftRoot) {
  const Configuration c({{1, 1, 1}, {2, 2, 1}});
  const SearchDomain d = search_domain(c);
  const auto eq = newton_refine(c, d, {0, 0}, resolve_options(c, d, {}));
  ASSERT_TRUE(eq.has_value());
  const double expect = oracle::diagonal_roots({1, 2}).front();
  EXPECT_LT(eq->location.x, 1.0);
  EXPECT_NEAR(eq->location.x, expect, 1e-9);
  EXPECT_NEAR(eq->location.y, expect, 1e-9);
}

TEST(NewtonRefine, SeedAtMassRejected) {
  const Configuration c({{1, 1, 1}, {2, 2, 1}});
  const SearchDomain d = search_domain(c);
  EXPECT_FALSE(newton_refine(c, d, {1, 1 + 1e-16}, resolve_options(c, d, {})).has_value());
}

TEST(Classify, SignPatterns) {
  EXPECT_EQ(classify({2, 0, 2}, 1e-8), 0);
  EXPECT_EQ(classify({2, 0, -2}, 1e-8), 1);
  EXPECT_EQ(classify({-1, 0, -3}, 1e-8), 2);
  EXPECT_THROW(classify({1, 0, 1e-12}, 1e-8), DegenerateHessian);
}

TEST(FindEquilibria, CollinearTwo) {
  const auto eqs = find_equilibria(Configuration({{1, 1, 1}, {2, 2, 1}}));
  ASSERT_EQ(eqs.size(), 3u);
  for (const auto& e : eqs) EXPECT_NEAR(e.location.x, e.location.y, 1e-10);
  const MorseReport r = morse_report(eqs, 2);
  EXPECT_TRUE(r.lower_bound_ok);
  EXPECT_EQ(r.euler_characteristic(), -1);
  EXPECT_TRUE(r.euler_ok);
}

TEST(FindEquilibria, RingFour) {
  const auto eqs = find_equilibria(make_ring(4, 1, 0.01));
  EXPECT_EQ(eqs.size(), 15u);
  const MorseReport r = morse_report(eqs, 4);
  EXPECT_TRUE(r.lower_bound_ok);
  EXPECT_EQ(r.euler_characteristic(), -3);
}

TEST(FindEquilibria, SingleMassDegenerate) {
  const auto eqs = find_equilibria(Configuration({{0, 0, 1}}));
  ASSERT_FALSE(eqs.empty());
  for (const auto& e : eqs) {
    EXPECT_TRUE(e.degenerate());
    EXPECT_NEAR(e.location.norm(), 1.0, 1e-8);
  }
  EXPECT_TRUE(morse_report(eqs, 1).degenerate_found);
}

TEST(FindEquilibria, QuadraticOnly) {
  const auto eqs = find_equilibria(Configuration::quadratic_only());
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_NEAR(eqs[0].location.norm(), 0.0, 1e-12);
  const MorseReport r = morse_report(eqs, 0);
  EXPECT_EQ(r.n0, 1);
  EXPECT_EQ(r.n1, 0);
  EXPECT_EQ(r.n2, 0);
}

TEST(FindEquilibria, DeterministicAcrossThreadCounts) {
  const Configuration c = oracle::random_configuration(77, 4);
  SolveOptions one;
  one.threads = 1;
  SolveOptions many;
  many.threads = 4;
  const auto a = find_equilibria(c, one);
  const auto b = find_equilibria(c, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].location, b[k].location);
    EXPECT_EQ(a[k].morse_index, b[k].morse_index);
  }
}

TEST(FindEquilibria, SortedCanonically) {
  const auto eqs = find_equilibria(triangle_config(1));
  for (std::size_t k = 1; k < eqs.size(); ++k) {
    EXPECT_LE(std::llround(eqs[k - 1].location.x / 1e-6), std::llround(eqs[k].location.x / 1e-6));
  }
}

TEST(FindEquilibria, RotationEquivariantCount) {
  const Configuration c = oracle::random_configuration(31, 3);
  const auto a = find_equilibria(c);
  const auto b = find_equilibria(c.rotated(1.1));
  ASSERT_EQ(a.size(), b.size());
  std::vector<Vec2> rotated;
  for (const auto& e : a) rotated.push_back(rotate(e.location, 1.1));
  EXPECT_LE(oracle::match_distance(rotated, locations(b)), 1e-8);
}

TEST(FindEquilibria, MatchesGridOracle) {
  for (std::uint64_t seed : {101u, 202u, 303u}) {
    const Configuration c = oracle::random_configuration(seed, 2);
    const auto eqs = find_equilibria(c);
    const auto grid = oracle::grid_roots(c, 4e-3);
    EXPECT_LE(oracle::match_distance(locations(eqs), grid), 1e-6) << "seed " << seed;
  }
}

TEST(FindEquilibria, InvalidOptions) {
  SolveOptions o;
  o.grid_spacing = -1.0;
  EXPECT_THROW(find_equilibria(make_ring(4, 1, 1), o), InvalidParameter);
}

TEST(FindEquilibria, ThreadEnvironmentCap) {
  ::setenv("EQLAB_THREADS", "1", 1);
  const Configuration c = make_ring(4, 1, 0.01);
  const auto eqs = find_equilibria(c);
  ::unsetenv("EQLAB_THREADS");
  EXPECT_EQ(eqs.size(), 15u);
}

TEST(MorseReport, CountsIndices) {
  std::vector<Equilibrium> eqs(3);
  eqs[0].morse_index = 0;
  eqs[1].morse_index = 1;
  eqs[2].morse_index = 0;
  const MorseReport r = morse_report(eqs, 2);
  EXPECT_EQ(r.n0, 2);
  EXPECT_EQ(r.n1, 1);
  EXPECT_EQ(r.total, 3);
  EXPECT_TRUE(r.lower_bound_ok);
  EXPECT_FALSE(r.euler_ok);
  EXPECT_FALSE(r.saddles_ok);
}

TEST(FindEquilibria, RandomSolutionsInsideDomain) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Configuration c = oracle::random_configuration(seed * 7919, 1 + seed % 4);
    const SearchDomain d = search_domain(c);
    for (const auto& e : find_equilibria(c)) {
      EXPECT_TRUE(d.contains(e.location)) << "seed " << seed;
      EXPECT_LT(e.location.norm(), d.outer_radius);
      for (const Vec2 z : d.centers) EXPECT_GT((e.location - z).norm(), d.puncture_radius);
    }
  }
}
