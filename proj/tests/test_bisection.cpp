#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symbisect/symbisect.hpp"

using namespace symbisect;

namespace {

const double kPi = std::numbers::pi;

std::vector<ConvexBody> corpus() {
  return {gen::square(1),
          gen::rectangle(2, 1),
          gen::rhombus_equilateral(1),
          gen::regular_2mgon(4, 1),
          gen::circle(1, 512),
          gen::ellipse(2, 1, 256),
          gen::cap_body(1, 2.5, 256),
          gen::cut_corner_hexagon(8, 2.34),
          gen::lens_capped_square(4, 256),
          gen::truncated_ellipse(2, 1, 1.5, 128)};
}

// Diameter of a piece by sampling its boundary densely; independent of the
// calipers code.
double sampled_diameter(const SubsetPolygon& piece) {
  return oracle::all_pairs_diameter(oracle::sample_boundary(piece.vertices, 600));
}

PolylineBisection vertical_cut(const ConvexBody& body, double x) {
  const BoundaryPos top = ray_exit(body, {x, 0}, {0, 1}, body.tolerances().eps_geom);
  const BoundaryPos bottom = ray_exit(body, {x, 0}, {0, -1}, body.tolerances().eps_geom);
  return PolylineBisection(body, {top.point, bottom.point});
}

}  // namespace

TEST(ChordAtAngle, SquareHorizontal) {
  const ConvexBody sq = gen::square(2);
  const ChordBisection b = chord_at_angle(sq, 0.0);
  EXPECT_EQ(b.v1(), (Point{1, 0}));
  EXPECT_EQ(b.v2(), (Point{-1, 0}));
}

TEST(ChordAtAngle, RhombusShortDiagonalUsesVertices) {
  const ConvexBody rh = gen::rhombus_equilateral(1);
  const ChordBisection b = chord_at_angle(rh, kPi / 2);
  EXPECT_TRUE(b.pos1().at_vertex);
  EXPECT_TRUE(b.pos2().at_vertex);
  EXPECT_EQ(b.v1(), (Point{0, 0.5}));
  EXPECT_EQ(b.v2(), (Point{0, -0.5}));
  EXPECT_EQ(b.c1().vertices.size(), 3u);
  EXPECT_EQ(b.c2().vertices.size(), 3u);
}

TEST(ChordAtAngle, HexagonShortEdgeMidpoints) {
  const ConvexBody hex = gen::cut_corner_hexagon(8, 2.34);
  const ChordBisection b = chord_at_angle(hex, kPi / 4);
  EXPECT_NEAR(b.v1().x, 2.83, 1e-12);
  EXPECT_NEAR(b.v1().y, 2.83, 1e-12);
  EXPECT_NEAR(b.chord_length(), 8.0, 5e-3);
  EXPECT_NEAR(b.chord_length(), 2 * norm(Point{2.83, 2.83}), 1e-12);
}

TEST(ChordAtAngle, InvariantsOnCorpus) {
  for (const ConvexBody& body : corpus()) {
    const double D = body.diameter();
    for (int k = 0; k < 97; ++k) {
      const double theta = k * kPi / 97;
      const ChordBisection b = chord_at_angle(body, theta);
      EXPECT_LE(dist(b.v2(), reflect(b.v1(), body.center())), body.tolerances().eps_sym) << body.name();
      const Point dir = b.v1() - body.center();
      EXPECT_NEAR(std::atan2(dir.y, dir.x), std::atan2(std::sin(theta), std::cos(theta)), 1e-9);
      EXPECT_LE(point_segment_distance(b.v1(), body.edge(b.pos1().edge).first, body.edge(b.pos1().edge).second),
                body.tolerances().eps_geom);
      const double a1 = b.c1().area(), a2 = b.c2().area();
      EXPECT_NEAR(a1 + a2, body.area(), 1e-9 * body.area()) << body.name();
      EXPECT_NEAR(a1, a2, 1e-9 * body.area()) << body.name();
      EXPECT_NEAR(b.c1().diameter(), b.c2().diameter(), 1e-9 * D) << body.name();
      EXPECT_EQ(b.c1().cut_edges.size(), 1u);
    }
  }
}

TEST(ChordAtAngle, ThetaPlusPiSwapsHalves) {
  for (const ConvexBody& body : corpus()) {
    for (double theta : {0.1, 0.7, 1.3, 2.9}) {
      const ChordBisection a = chord_at_angle(body, theta);
      const ChordBisection b = chord_at_angle(body, theta + kPi);
      EXPECT_LE(dist(a.v1(), b.v2()), 1e-12 * body.diameter());
      EXPECT_NEAR(a.c1().area(), b.c2().area(), 1e-9 * body.area());
      EXPECT_NEAR(dM_chord_eq2(a), dM_chord_eq2(b), 1e-9 * body.diameter()) << body.name();
      EXPECT_NEAR(b.canonical_theta(), theta, 1e-12);
    }
  }
}

TEST(DmChord, CircleIsConstant) {
  const ConvexBody c = gen::circle(1, 512);
  for (double theta : {0.0, 0.123, 1.0, 2.5, 3.1}) {
    const ChordBisection b = chord_at_angle(c, theta);
    EXPECT_NEAR(dM_chord_eq1(b), 2.0, 1e-4);
    EXPECT_NEAR(dM_chord_eq2(b), dM_chord_eq1(b), 1e-9 * c.diameter());
  }
}

TEST(DmChord, SquareStandardChord) {
  const ConvexBody sq = gen::square(1);
  const ChordBisection b = chord_at_angle(sq, 0.0);
  EXPECT_NEAR(dM_chord_eq1(b), std::sqrt(5.0) / 2, 1e-15);
  EXPECT_NEAR(dM_chord_eq2(b), std::sqrt(5.0) / 2, 1e-15);
}

TEST(DmChord, HexagonMidpointChord) {
  const ConvexBody hex = gen::cut_corner_hexagon(8, 2.34);
  const ChordBisection b = chord_at_angle(hex, kPi / 4);
  EXPECT_NEAR(dM_chord_eq1(b), 8.17, 0.02);
  EXPECT_NEAR(dM_chord_eq2(b), dM_chord_eq1(b), 1e-9 * hex.diameter());
}

TEST(DmChord, RhombusEdgeChordIsSide) {
  const ConvexBody rh = gen::rhombus_equilateral(1);
  EXPECT_NEAR(dM_chord_eq2(chord_at_angle(rh, kPi / 2)), 1.0, 1e-15);
}

TEST(DmChord, RectangleStandardChord) {
  const ConvexBody r = gen::rectangle(2, 1);
  EXPECT_NEAR(dM_chord_eq2(chord_at_angle(r, kPi / 2)), std::sqrt(2.0), 1e-15);
}

TEST(DmChord, EquationsAgreeOnRandomChords) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ang(0, kPi);
  const auto bodies = corpus();
  int worst_case = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ConvexBody body = i % 2 ? bodies[i / 2 % bodies.size()] : oracle::random_body(rng);
    const ChordBisection b = chord_at_angle(body, ang(rng));
    const double diff = std::abs(dM_chord_eq1(b) - dM_chord_eq2(b)) / body.diameter();
    if (diff > worst) {
      worst = diff;
      worst_case = i;
    }
  }
  EXPECT_LE(worst, 1e-9) << "case " << worst_case;
}

TEST(DmGeneral, CenterChordHalvesMatchEq1) {
  for (const ConvexBody& body : corpus()) {
    for (double theta : {0.2, 1.1, 2.2}) {
      const ChordBisection b = chord_at_angle(body, theta);
      EXPECT_NEAR(dM_general(b), dM_chord_eq1(b), 1e-9 * body.diameter()) << body.name();
      EXPECT_NEAR(dm_general(b), dM_general(b), 1e-9 * body.diameter()) << body.name();
    }
  }
}

TEST(DmGeneral, EllipseOffCenterVerticalCut) {
  const ConvexBody e = gen::ellipse(2, 1, 256);
  const PolylineBisection p = vertical_cut(e, 1.0);
  const auto& h = p.halves();
  const double big = std::max(sampled_diameter(h[0]), sampled_diameter(h[1]));
  const double small = std::min(sampled_diameter(h[0]), sampled_diameter(h[1]));
  EXPECT_NEAR(dM_general(p), big, 1e-9);
  EXPECT_NEAR(dm_general(p), small, 1e-9);
  // The larger piece reaches (-2, 0) but not (2, 0), so it stays below D(C) = 4.
  EXPECT_LT(dM_general(p), 4.0);
  EXPECT_GT(dM_general(p), 3.0);
}

TEST(DmGeneral, RandomPolylinesMatchSamplingOracle) {
  std::mt19937_64 rng(31);
  const auto bodies = corpus();
  int done = 0;
  for (int attempt = 0; attempt < 5000 && done < 200; ++attempt) {
    const ConvexBody& body = bodies[attempt % bodies.size()];
    auto p = oracle::random_polyline(body, rng);
    if (!p) continue;
    const auto& h = p->halves();
    EXPECT_NEAR(dM_general(*p), std::max(sampled_diameter(h[0]), sampled_diameter(h[1])), 1e-9 * body.diameter());
    EXPECT_NEAR(dm_general(*p), std::min(sampled_diameter(h[0]), sampled_diameter(h[1])), 1e-9 * body.diameter());
    EXPECT_NEAR(h[0].area() + h[1].area(), body.area(), 1e-9 * body.area());
    EXPECT_LE(dM_general(*p), body.diameter() * (1 + 1e-12));
    ++done;
  }
  EXPECT_EQ(done, 200);
}

TEST(DmGeneral, TinyCornerCutShrinksMinimum) {
  const ConvexBody sq = gen::square(2);
  double prev = 1e9;
  for (double eps : {0.5, 0.1, 0.01, 0.001}) {
    const PolylineBisection p(sq, {{1 - eps, -1}, {1, -1 + eps}});
    const double v = dm_general(p);
    EXPECT_NEAR(v, eps * std::sqrt(2.0), 1e-12);
    EXPECT_LT(v, prev);
    prev = v;
    EXPECT_NEAR(dM_general(p), sq.diameter(), 1e-12);
  }
}

TEST(DmGeneral, EllipseDiameterChord) {
  const ConvexBody e = gen::ellipse(2, 1, 256);
  const ChordBisection b = chord_at_angle(e, 0.0);
  EXPECT_NEAR(dm_general(b), sampled_diameter(b.c1()), 1e-9);
  EXPECT_EQ(dM_chord_eq2(b), e.diameter());
}

TEST(Bound, DiameterChordAttainsDiameter) {
  for (const ConvexBody& body : corpus()) {
    const auto [p, q] = body.diameter_pair();
    const BoundaryPos pos = locate_on_boundary(body, p, body.tolerances().eps_geom);
    const ChordBisection b = chord_through(body, pos);
    if (dist(b.v1(), p) == 0.0 && dist(b.v2(), q) == 0.0) {
      EXPECT_EQ(dM_chord_eq1(b), body.diameter()) << body.name();
    }
    EXPECT_NEAR(dM_chord_eq1(b), body.diameter(), 1e-12 * body.diameter()) << body.name();
    for (int k = 0; k < 50; ++k) {
      EXPECT_LE(dM_chord_eq2(chord_at_angle(body, k * kPi / 50)), body.diameter() * (1 + 1e-15));
    }
  }
}

TEST(Polyline, RejectsInvalidCurves) {
  const ConvexBody sq = gen::square(2);
  EXPECT_THROW(PolylineBisection(sq, {{-1, 0}, {0, 0}, {-1, 0}}), Error);            // closed
  EXPECT_THROW(PolylineBisection(sq, {{-1, 0}, {0.5, 0}}), Error);                  // end not on boundary
  EXPECT_THROW(PolylineBisection(sq, {{-1, 0}, {0, 3}, {1, 0}}), Error);            // leaves the body
  EXPECT_THROW(PolylineBisection(sq, {{-1, 0}, {0.5, 0.5}, {0.5, -0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {1, 0.2}}),
               Error);  // self-intersecting
  EXPECT_THROW(PolylineBisection(sq, {{-1, 0}, {0, 0}, {0, 0}, {1, 0}}), Error);    // repeated vertex
  EXPECT_NO_THROW(PolylineBisection(sq, {{-1, 0}, {0, 0.3}, {1, 0}}));
}

TEST(Polyline, HalvesKeepCutEdges) {
  const ConvexBody sq = gen::square(2);
  const PolylineBisection p(sq, {{-1, 0}, {-0.2, 0.3}, {0.3, -0.2}, {1, 0}});
  for (const auto& h : p.halves()) EXPECT_EQ(h.cut_edges.size(), 3u);
  EXPECT_NEAR(p.halves()[0].area() + p.halves()[1].area(), 4.0, 1e-12);
}

TEST(ReduceToChord, IdentityOnCenterChord) {
  const ConvexBody hex = gen::cut_corner_hexagon(8, 2.34);
  const ChordBisection b = chord_at_angle(hex, 0.4);
  const ChordBisection r = reduce_to_chord(b);
  EXPECT_EQ(r.v1(), b.v1());
  EXPECT_EQ(dM_chord_eq2(r), dM_chord_eq2(b));
}

TEST(ReduceToChord, EllipseVerticalCut) {
  const ConvexBody e = gen::ellipse(2, 1, 256);
  const PolylineBisection p = vertical_cut(e, 1.0);
  const ChordBisection r = reduce_to_chord(p);
  EXPECT_LE(dM_chord_eq2(r), dM_general(p) + 1e-9 * e.diameter());
  EXPECT_LE(dM_chord_eq2(r), 4.0);
}

TEST(ReduceToChord, NeverIncreasesOnRandomPolylines) {
  std::mt19937_64 rng(37);
  const auto bodies = corpus();
  int done = 0;
  for (int attempt = 0; attempt < 20000 && done < 500; ++attempt) {
    const ConvexBody& body = bodies[attempt % bodies.size()];
    auto p = oracle::random_polyline(body, rng);
    if (!p) continue;
    const ChordBisection r = reduce_to_chord(*p);
    ASSERT_LE(dM_chord_eq2(r), dM_general(*p) + 1e-9 * body.diameter()) << body.name();
    ++done;
  }
  EXPECT_EQ(done, 500);
}
