#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "phrecon/geometry.hpp"

namespace phrecon {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Height, DotProductWithDirection) {
  EXPECT_EQ(height({0.25, 0.0}, {1.0, 0.0}), 0.25);
  EXPECT_EQ(height({1.0, 1.0}, {0.0, 1.0}), 1.0);
  EXPECT_NEAR(height({-1.0, 2.0}, {0.6, 0.8}), 1.0, 1e-15);
}

TEST(Height, LinearInDirection) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const Point2 p{u(rng), u(rng)};
    const Direction s{u(rng), u(rng)};
    const double a = u(rng);
    EXPECT_NEAR(height(p, {a * s.dx, a * s.dy}), a * height(p, s), 1e-12);
  }
}

TEST(FiltrationLine, AxisCases) {
  const Line x2 = filtration_line({1.0, 0.0}, 2.0);
  EXPECT_EQ(x2, (Line{{1.0, 0.0}, 2.0}));
  EXPECT_EQ(x2.residual({2.0, 17.0}), 0.0);

  const Line ym1 = filtration_line({0.0, 1.0}, -1.0);
  EXPECT_EQ(ym1.residual({-5.0, -1.0}), 0.0);
}

TEST(FiltrationLine, ThroughScaledDirection) {
  const Line l = filtration_line({0.6, 0.8}, 5.0);
  EXPECT_NEAR(l.residual({3.0, 4.0}), 0.0, 1e-12);
  // (3,4) + t(-4,3) stays on the line.
  EXPECT_NEAR(l.residual({3.0 - 4.0 * 2.5, 4.0 + 3.0 * 2.5}), 0.0, 1e-12);
  EXPECT_NEAR(cross(l.along(), {-4.0, 3.0}), 0.0, 1e-12);
}

TEST(FiltrationLine, RejectsZeroDirection) {
  EXPECT_THROW(filtration_line({0.0, 0.0}, 1.0), ZeroDirection);
}

TEST(FiltrationLine, SampledPointsHaveTheRequestedHeight) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Direction s = Direction::unit(u(rng), u(rng));
    const double h = u(rng);
    const Line l = filtration_line(s, h);
    for (double t : {-3.0, -0.5, 0.0, 0.7, 4.0}) {
      const Point2 q = l.anchor() + l.along() * t;
      EXPECT_NEAR(height(q, s), h, 1e-9);
    }
  }
}

TEST(IntersectLines, AxisGrid) {
  const Point2 p = intersect_lines({{1.0, 0.0}, 3.0}, {{0.0, 1.0}, 7.0});
  EXPECT_EQ(p, (Point2{3.0, 7.0}));
}

TEST(IntersectLines, Parallel) {
  EXPECT_THROW(intersect_lines({{1.0, 0.0}, 3.0}, {{1.0, 0.0}, 4.0}), ParallelLines);
  EXPECT_THROW(intersect_lines({{1.0, 0.0}, 3.0}, {{-2.0, 0.0}, 4.0}), ParallelLines);
}

TEST(IntersectLines, Oblique) {
  // x = 3 and 0.6x + 0.8y = 7.4 meet at (3, 7).
  const Point2 p = intersect_lines({{1.0, 0.0}, 3.0}, {{0.6, 0.8}, 0.6 * 3.0 + 0.8 * 7.0});
  EXPECT_NEAR(p.x, 3.0, 1e-12);
  EXPECT_NEAR(p.y, 7.0, 1e-12);
}

TEST(IntersectLines, SymmetricAndOnBothLines) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Line a{Direction::unit(u(rng), u(rng)), u(rng)};
    const Line b{Direction::unit(u(rng), u(rng)), u(rng)};
    if (std::abs(cross(a.normal.as_point(), b.normal.as_point())) < 1e-3) continue;
    const Point2 ab = intersect_lines(a, b);
    const Point2 ba = intersect_lines(b, a);
    EXPECT_EQ(ab, ba);
    EXPECT_LE(std::abs(a.residual(ab)), 1e-9);
    EXPECT_LE(std::abs(b.residual(ab)), 1e-9);
  }
}

TEST(Line, CanonicalFormIdentifiesEqualPointSets) {
  EXPECT_EQ((Line{{2.0, 0.0}, 4.0}), (Line{{-1.0, 0.0}, -2.0}));
  EXPECT_EQ((Line{{0.0, -3.0}, 3.0}), (Line{{0.0, 1.0}, -1.0}));
  EXPECT_FALSE((Line{{1.0, 0.0}, 1.0}) == (Line{{1.0, 0.0}, -1.0}));
}

TEST(Rotate, Examples) {
  const Direction q = rotate({1.0, 0.0}, kPi / 2);
  EXPECT_NEAR(q.dx, 0.0, 1e-15);
  EXPECT_NEAR(q.dy, 1.0, 1e-15);
  EXPECT_EQ(rotate({1.0, 0.0}, 0.0), (Direction{1.0, 0.0}));
  const Direction r = rotate({0.6, 0.8}, kPi);
  EXPECT_NEAR(r.dx, -0.6, 1e-15);
  EXPECT_NEAR(r.dy, -0.8, 1e-15);
}

TEST(Rotate, InverseAndUnitPreserving) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 1000; ++i) {
    const Direction s = Direction::unit(u(rng), u(rng));
    const double t = ang(rng);
    const Direction r = rotate(s, t);
    EXPECT_TRUE(r.is_unit(1e-12));
    const Direction back = rotate(r, -t);
    EXPECT_NEAR(back.dx, s.dx, 1e-12);
    EXPECT_NEAR(back.dy, s.dy, 1e-12);
  }
}

TEST(LineAngle, Examples) {
  EXPECT_EQ(line_angle_mod_pi({0, 0}, {1, 0}), 0.0);
  EXPECT_NEAR(line_angle_mod_pi({0, 0}, {-1, -1}), kPi / 4, 1e-15);
  EXPECT_NEAR(line_angle_mod_pi({0, 0}, {0, 5}), kPi / 2, 1e-15);
  EXPECT_EQ(line_angle_mod_pi({0, 0}, {-3, 0}), 0.0);
  EXPECT_THROW(line_angle_mod_pi({1, 2}, {1, 2}), CoincidentPoints);
}

TEST(LineAngle, SymmetricAndInRange) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const Point2 a{u(rng), u(rng)};
    const Point2 b{u(rng), u(rng)};
    const double ab = line_angle_mod_pi(a, b);
    EXPECT_EQ(ab, line_angle_mod_pi(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LT(ab, kPi);
  }
}

TEST(Direction, Normalization) {
  const Direction s = Direction::unit(2.0, 0.0);
  EXPECT_EQ(s, (Direction{1.0, 0.0}));
  EXPECT_THROW(Direction::unit(0.0, 0.0), ZeroDirection);
  EXPECT_TRUE(Direction::unit(3.0, 4.0).is_unit());
}

TEST(Tolerance, DefaultAndOverride) {
  EXPECT_EQ(tolerance(), kDefaultTolerance);
  set_tolerance(1e-7);
  EXPECT_EQ(tolerance(), 1e-7);
  set_tolerance(kDefaultTolerance);
  EXPECT_THROW(set_tolerance(0.0), Error);
}

}  // namespace
}  // namespace phrecon
