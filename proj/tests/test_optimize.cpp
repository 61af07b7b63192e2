#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "symbisect/symbisect.hpp"

using namespace symbisect;

namespace {

const double kPi = std::numbers::pi;

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

std::vector<ConvexBody> corpus() {
  return {gen::square(1),
          gen::rectangle(2, 1),
          gen::rhombus_equilateral(1),
          gen::regular_2mgon(3, 1),
          gen::circle(1, 512),
          gen::ellipse(2, 1, 256),
          gen::cap_body(1, 2.5, 256),
          gen::cut_corner_hexagon(8, 2.34),
          gen::lens_capped_square(4, 256),
          gen::truncated_ellipse(2, 1, 1.5, 256)};
}

}  // namespace

TEST(GoldenSection, FindsParabolaMinimum) {
  auto f = [](double x) { return (x - 0.3) * (x - 0.3); };
  const ThetaValue m = golden_section_minimize(f, -1.0, 2.0, 1e-10, {-1.0, f(-1.0)});
  EXPECT_NEAR(m.theta, 0.3, 1e-7);
}

TEST(GoldenSection, FindsKinkMinimum) {
  auto f = [](double x) { return std::abs(x - 0.123456789); };
  const ThetaValue m = golden_section_minimize(f, 0.0, 1.0, 1e-12, {0.0, f(0.0)});
  EXPECT_NEAR(m.theta, 0.123456789, 1e-11);
}

TEST(GoldenSection, KeepsBetterSeed) {
  auto f = [](double x) { return x; };
  const ThetaValue m = golden_section_minimize(f, 0.5, 1.0, 1e-6, {0.0, -5.0});
  EXPECT_EQ(m.value, -5.0);
}

TEST(Sweep, RejectsBadParameters) {
  const ConvexBody sq = gen::square(1);
  EXPECT_THROW(sweep_minimize(sq, 63), Error);
  EXPECT_THROW(sweep_minimize(sq, 64, 0.0), Error);
  EXPECT_NO_THROW(sweep_minimize(sq, 64));
}

TEST(Sweep, CircleIsFlat) {
  const ConvexBody c = gen::circle(1, 512);
  const SweepResult r = sweep_minimize(c);
  EXPECT_NEAR(r.best_value, 2.0, 1e-3);
  for (int k = 0; k < 4096; k += 7) {
    EXPECT_LE(chord_objective(c, k * kPi / 4096) - r.best_value, 1e-3);
  }
}

TEST(Sweep, SquareAtStandardAngles) {
  const ConvexBody sq = gen::square(1);
  const SweepResult r = sweep_minimize(sq);
  EXPECT_NEAR(r.best_value, std::sqrt(5.0) / 2, 1e-6);
  EXPECT_NEAR(r.best_theta, 0.0, 1e-9);
  bool at_zero = false, at_half = false;
  for (const ThetaValue& m : r.local_minima) {
    if (std::abs(m.value - r.best_value) > 1e-9) continue;
    at_zero |= angle_gap(m.theta, 0.0) < 1e-9;
    at_half |= angle_gap(m.theta, kPi / 2) < 1e-9;
  }
  EXPECT_TRUE(at_zero);
  EXPECT_TRUE(at_half);
}

TEST(Sweep, HexagonMidpointChord) {
  const ConvexBody hex = gen::cut_corner_hexagon(8, 2.34);
  const SweepResult r = sweep_minimize(hex);
  EXPECT_NEAR(r.best_value, 8.17, 0.02);
  EXPECT_LT(angle_gap(r.best_theta, kPi / 4), 1e-3);
}

TEST(Sweep, BestIsMinimumOfLocalMinimaAndSamples) {
  for (const ConvexBody& body : corpus()) {
    const SweepResult r = sweep_minimize(body, 512);
    double lowest = 1e300;
    for (const ThetaValue& m : r.local_minima) lowest = std::min(lowest, m.value);
    EXPECT_EQ(r.best_value, lowest) << body.name();
    for (int k = 0; k < 512; ++k) EXPECT_LE(r.best_value, chord_objective(body, k * kPi / 512)) << body.name();
    for (std::size_t i = 1; i < r.local_minima.size(); ++i) {
      EXPECT_LE(r.local_minima[i - 1].theta, r.local_minima[i].theta);
    }
    EXPECT_GE(r.best_theta, 0.0);
    EXPECT_LT(r.best_theta, kPi);
  }
}

TEST(Sweep, Deterministic) {
  const ConvexBody cap = gen::cap_body(1, 2.5, 256);
  const SweepResult a = sweep_minimize(cap), b = sweep_minimize(cap);
  EXPECT_EQ(a.best_theta, b.best_theta);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.local_minima.size(), b.local_minima.size());
}

TEST(Oracle, RequiresDenseGrid) { EXPECT_THROW(brute_force_oracle(gen::square(1), 999), Error); }

TEST(Oracle, RhombusMinimumIsSide) {
  EXPECT_NEAR(brute_force_oracle(gen::rhombus_equilateral(1), 1000), 1.0, 1e-12);
}

TEST(Oracle, RectangleMinimum) { EXPECT_NEAR(brute_force_oracle(gen::rectangle(2, 1), 1000), std::sqrt(2.0), 1e-3); }

TEST(Oracle, SweepNeverWorseThanDenseOracle) {
  for (const ConvexBody& body : corpus()) {
    const int N = 1024;
    const SweepResult r = sweep_minimize(body, N);
    const double o = brute_force_oracle(body, 10 * N);
    EXPECT_LE(r.best_value, o + 1e-9 * body.diameter()) << body.name();
    // And the grid oracle is within its resolution of the sweep.
    EXPECT_LE(o - r.best_value, 1e-2 * body.diameter()) << body.name();
  }
}

TEST(Sweep, DoublingStepsNeverIncreasesBest) {
  // A tiny refinement width makes every bracketed minimum converge fully, so
  // the finer sweep cannot lose to the coarser one beyond rounding.
  for (const ConvexBody& body : corpus()) {
    double prev = 1e300;
    for (int steps : {64, 128, 256, 512, 1024}) {
      const SweepResult r = sweep_minimize(body, steps, 1e-14);
      EXPECT_LE(r.best_value, prev + 1e-12) << body.name() << " steps " << steps;
      prev = r.best_value;
    }
  }
}

TEST(Sweep, RotationShiftsBestAngle) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  // Bodies whose minimizer is isolated (the circle is flat, the square has two).
  const std::vector<ConvexBody> bodies{gen::rectangle(2, 1), gen::rhombus_equilateral(1),
                                       gen::cut_corner_hexagon(8, 2.34), gen::cap_body(1, 2.5, 256),
                                       gen::lens_capped_square(4, 256), gen::ellipse(2, 1, 256)};
  for (const ConvexBody& body : bodies) {
    const SweepResult base = sweep_minimize(body);
    for (int k = 0; k < 3; ++k) {
      const double a = ang(rng);
      const ConvexBody rot = rotated(body, a);
      const SweepResult r = sweep_minimize(rot);
      EXPECT_NEAR(r.best_value, base.best_value, 1e-9 * body.diameter()) << body.name();
      EXPECT_LT(angle_gap(r.best_theta, base.best_theta + a), 1e-6) << body.name() << " rotation " << a;
    }
  }
}
