#include <cmath>

#include <gtest/gtest.h>

#include "eqlab/bounds_examples.hpp"
#include "eqlab/errors.hpp"
#include "eqlab/solver.hpp"
#include "oracle.hpp"

using namespace eqlab;

TEST(CollinearConfig, Validation) {
  EXPECT_THROW(CollinearConfig({}), InvalidParameter);
  EXPECT_THROW(CollinearConfig({2, 1}), InvalidParameter);
  EXPECT_THROW(CollinearConfig({-1, 1}), InvalidParameter);
  const Configuration c = CollinearConfig({1, 2}).to_configuration();
  EXPECT_EQ(c[1].x, 2.0);
  EXPECT_EQ(c[1].y, 2.0);
  EXPECT_EQ(c[1].m, 1.0);
}

TEST(CollinearF, IsDiagonalGradient) {
  const CollinearConfig cc({1, 2.5, 4});
  const Configuration c = cc.to_configuration();
  for (double x : {-3.0, 0.5, 1.7, 3.1, 6.0}) {
    EXPECT_NEAR(collinear_f(cc, x), gradient(c, {x, x}).x, 1e-12);
  }
  EXPECT_THROW(collinear_f(cc, 1.0), SingularEvaluation);
}

TEST(CollinearF, StrictlyIncreasing) {
  const CollinearConfig cc({1, 2, 3});
  for (int k = 0; k < 100; ++k) {
    const double x = -2.0 + 7.0 * (k + 0.5) / 100;
    if (std::abs(x - std::round(x)) < 0.05 && x > 0.5 && x < 3.5) continue;
    const double h = 1e-6;
    const double fd = (collinear_f(cc, x + h) - collinear_f(cc, x - h)) / (2 * h);
    EXPECT_GT(fd, 0.0) << x;
    EXPECT_NEAR(collinear_f_prime(cc, x), fd, 1e-5 * fd) << x;
  }
}

TEST(CollinearF, OneSignChangePerInterval) {
  const CollinearConfig cc({1, 2});
  const auto changes = [&](double a, double b) {
    int n = 0;
    double prev = collinear_f(cc, a);
    for (int k = 1; k <= 2000; ++k) {
      const double v = collinear_f(cc, a + (b - a) * k / 2000);
      n += (prev < 0) != (v < 0);
      prev = v;
    }
    return n;
  };
  EXPECT_EQ(changes(-50, 1 - 1e-6), 1);
  EXPECT_EQ(changes(1 + 1e-6, 2 - 1e-6), 1);
  EXPECT_EQ(changes(2 + 1e-6, 50), 1);
}

TEST(CollinearEquilibria, MatchesOracleAndSolver) {
  for (const std::vector<double>& pos : {std::vector<double>{1}, std::vector<double>{1, 2},
                                         std::vector<double>{1, 2, 3, 4}}) {
    const auto roots = collinear_equilibria(CollinearConfig(pos));
    const auto expect = oracle::diagonal_roots(pos);
    ASSERT_EQ(roots.size(), pos.size() + 1);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      EXPECT_EQ(roots[k].x, roots[k].y);
      EXPECT_NEAR(roots[k].x, expect[k], 1e-12);
    }
    std::vector<Vec2> solver;
    for (const auto& e : find_equilibria(CollinearConfig(pos).to_configuration())) solver.push_back(e.location);
    EXPECT_LE(oracle::match_distance(roots, solver), 1e-8);
  }
}

TEST(Lagrange, Configuration) {
  const Configuration c = lagrange_config(1, 1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0].x, -std::cbrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(c[1].x, std::cbrt(2.0) / 2, 1e-15);
  EXPECT_EQ(c[0].y, 0.0);
  EXPECT_THROW(lagrange_config(1, 0), InvalidParameter);
}

TEST(Lagrange, FivePoints) {
  for (auto [m1, m2] : {std::pair{1.0, 1.0}, std::pair{1.0, 0.01}, std::pair{1.0, 0.5}}) {
    const auto eqs = find_equilibria(lagrange_config(m1, m2));
    ASSERT_EQ(eqs.size(), 5u);
    int collinear = 0;
    for (const auto& e : eqs) collinear += std::abs(e.location.y) < 1e-9;
    EXPECT_EQ(collinear, 3);
    const MorseReport r = morse_report(eqs, 2);
    EXPECT_EQ(r.n1, 3);
    EXPECT_TRUE(r.euler_ok);
  }
}

TEST(Lagrange, TriangularPointsEquidistant) {
  const Configuration c = lagrange_config(1, 0.3);
  for (const auto& e : find_equilibria(c)) {
    if (std::abs(e.location.y) < 1e-9) continue;
    const double d0 = (e.location - c[0].position()).norm();
    const double d1 = (e.location - c[1].position()).norm();
    const double sep = (c[0].position() - c[1].position()).norm();
    EXPECT_NEAR(d0, sep, 1e-9);
    EXPECT_NEAR(d1, sep, 1e-9);
  }
}

TEST(Triangle, TenEquilibria) {
  const Configuration c = triangle_config(1);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR((c[0].position() - c[1].position()).norm(), std::cbrt(3.0), 1e-14);
  EXPECT_EQ(c[0].y, 0.0);
  EXPECT_EQ(find_equilibria(c).size(), 10u);
}
