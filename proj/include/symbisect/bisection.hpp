#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "symbisect/body.hpp"
#include "symbisect/error.hpp"
#include "symbisect/geometry.hpp"

namespace symbisect {

/// Location of a point on the boundary of a body: on edge `edge`
/// (vertex edge -> edge+1) at parameter `param - edge`, or exactly at vertex
/// `edge` when `at_vertex`.
struct BoundaryPos {
  std::size_t edge = 0;
  bool at_vertex = false;
  double param = 0.0;  // edge + t, t in [0, 1)
  Point point;
};

/// One half of a bisected body.
struct SubsetPolygon {
  std::vector<Point> vertices;          // counterclockwise cycle
  std::vector<std::size_t> cut_edges;   // edges on the dividing curve; others lie on the body boundary

  bool is_cut_edge(std::size_t i) const {
    return std::find(cut_edges.begin(), cut_edges.end(), i) != cut_edges.end();
  }
  std::pair<Point, Point> edge(std::size_t i) const {
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
  }
  double area() const { return symbisect::area(vertices); }
  /// Diameter of the piece (of its convex hull when the piece is not convex).
  double diameter() const {
    if (vertices.size() < 3) return symbisect::diameter(vertices).value;
    return symbisect::diameter(convex_hull(vertices)).value;
  }
};

namespace detail {

inline double cyclic_offset(double s, double from, std::size_t n) {
  double d = std::fmod(s - from, static_cast<double>(n));
  if (d < 0.0) d += static_cast<double>(n);
  return d;
}

// Boundary points from a to b walking counterclockwise, both ends included.
inline std::vector<Point> boundary_chain(const ConvexBody& body, const BoundaryPos& a,
                                         const BoundaryPos& b) {
  const std::size_t n = body.size();
  std::vector<Point> out{a.point};
  double span_ab = cyclic_offset(b.param, a.param, n);
  if (span_ab == 0.0) span_ab = static_cast<double>(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t j = (a.edge + k) % n;
    const double off = cyclic_offset(static_cast<double>(j), a.param, n);
    if (off > 0.0 && off < span_ab) out.push_back(body.vertex(j));
  }
  out.push_back(b.point);
  return out;
}

inline BoundaryPos vertex_pos(const ConvexBody& body, std::size_t i) {
  return {i, true, static_cast<double>(i), body.vertex(i)};
}

}  // namespace detail

/// First boundary point hit by the ray origin + t dir (t > 0) from an interior
/// origin. Vertices within eps of the ray are snapped to.
inline BoundaryPos ray_exit(const ConvexBody& body, Point origin, Point dir, double eps) {
  const double len = norm(dir);
  if (!(len > 0.0)) throw Error(ErrorKind::DegenerateInput, "zero ray direction");
  const Point u = (1.0 / len) * dir;
  const std::size_t n = body.size();

  std::size_t best_vertex = n;
  double best_off = eps;
  for (std::size_t i = 0; i < n; ++i) {
    const Point w = body.vertex(i) - origin;
    const double off = std::fabs(cross(u, w));
    if (dot(u, w) > 0.0 && off <= best_off) {
      best_off = off;
      best_vertex = i;
    }
  }
  if (best_vertex < n) return detail::vertex_pos(body, best_vertex);

  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = body.edge(i);
    const double sa = cross(u, a - origin);
    const double sb = cross(u, b - origin);
    if (sa < 0.0 && sb > 0.0) {
      const double t = sa / (sa - sb);
      return {i, false, static_cast<double>(i) + t, a + t * (b - a)};
    }
  }
  throw Error(ErrorKind::Inconsistency, "ray does not leave the body (origin not interior?)");
}

/// Locates a point known to lie on the boundary (within eps).
inline BoundaryPos locate_on_boundary(const ConvexBody& body, Point p, double eps) {
  const std::size_t n = body.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist(p, body.vertex(i)) <= eps) return {i, true, static_cast<double>(i), body.vertex(i)};
  }
  std::size_t best = n;
  double best_d = eps;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = body.edge(i);
    const double d = point_segment_distance(p, a, b);
    if (d <= best_d) {
      best_d = d;
      best = i;
    }
  }
  if (best == n) throw Error(ErrorKind::InvalidParams, "point is not on the body boundary");
  const auto [a, b] = body.edge(best);
  const Point d = b - a;
  const double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
  return {best, false, static_cast<double>(best) + t, p};
}

/// Bisection by the straight chord through the center at angle theta. v1 is
/// the endpoint in direction theta and v2 its exact reflection; halves[0] (C1)
/// is the half on the clockwise side of the directed chord, bounded by the
/// boundary walk v2 -> v1 and the chord.
///
/// Holds a reference to the body, which must outlive it.
class ChordBisection {
 public:
  const ConvexBody& body() const { return *body_; }
  double theta() const { return theta_; }
  /// theta reduced to [0, pi).
  double canonical_theta() const {
    double t = std::fmod(theta_, std::numbers::pi);
    if (t < 0.0) t += std::numbers::pi;
    return t;
  }
  Point v1() const { return pos1_.point; }
  Point v2() const { return pos2_.point; }
  const BoundaryPos& pos1() const { return pos1_; }
  const BoundaryPos& pos2() const { return pos2_; }
  std::array<Point, 2> endpoints() const { return {v1(), v2()}; }
  const std::array<SubsetPolygon, 2>& halves() const { return halves_; }
  const SubsetPolygon& c1() const { return halves_[0]; }
  const SubsetPolygon& c2() const { return halves_[1]; }
  double chord_length() const { return dist(v1(), v2()); }

 private:
  friend ChordBisection chord_at_angle(const ConvexBody&, double);

  const ConvexBody* body_ = nullptr;
  double theta_ = 0.0;
  BoundaryPos pos1_;
  BoundaryPos pos2_;
  std::array<SubsetPolygon, 2> halves_;
};

namespace detail {

inline std::array<SubsetPolygon, 2> split_halves(const ConvexBody& body, const BoundaryPos& p1,
                                                 const BoundaryPos& p2,
                                                 std::span<const Point> interior) {
  // p1 -> interior -> p2 is the dividing curve.
  std::array<SubsetPolygon, 2> h;
  {
    auto& c1 = h[0];
    c1.vertices = boundary_chain(body, p2, p1);
    const std::size_t outer = c1.vertices.size() - 1;
    for (const Point& q : interior) c1.vertices.push_back(q);
    for (std::size_t i = outer; i < c1.vertices.size(); ++i) c1.cut_edges.push_back(i);
  }
  {
    auto& c2 = h[1];
    c2.vertices = boundary_chain(body, p1, p2);
    const std::size_t outer = c2.vertices.size() - 1;
    for (std::size_t k = interior.size(); k-- > 0;) c2.vertices.push_back(interior[k]);
    for (std::size_t i = outer; i < c2.vertices.size(); ++i) c2.cut_edges.push_back(i);
  }
  return h;
}

}  // namespace detail

inline ChordBisection chord_at_angle(const ConvexBody& body, double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::InvalidParams, "theta must be finite");
  const Tolerances& tol = body.tolerances();
  const Point c = body.center();
  const Point u = unit_direction(theta);

  ChordBisection b;
  b.body_ = &body;
  b.theta_ = theta;
  b.pos1_ = ray_exit(body, c, u, tol.eps_geom);
  BoundaryPos p2 = ray_exit(body, c, -u, tol.eps_geom);
  if (!p2.at_vertex) {
    p2.point = reflect(b.pos1_.point, c);
    const auto [a, e] = body.edge(p2.edge);
    const Point d = e - a;
    p2.param = static_cast<double>(p2.edge) + std::clamp(dot(p2.point - a, d) / dot(d, d), 0.0, 1.0);
  }
  b.pos2_ = p2;
  b.halves_ = detail::split_halves(body, b.pos1_, b.pos2_, {});
  return b;
}

/// The center chord with one endpoint at the given boundary position.
inline ChordBisection chord_through(const ConvexBody& body, const BoundaryPos& pos) {
  const Point d = pos.point - body.center();
  return chord_at_angle(body, std::atan2(d.y, d.x));
}

/// Bisection by a simple polyline whose endpoints lie on the boundary and
/// whose interior vertices lie strictly inside the body.
class PolylineBisection {
 public:
  PolylineBisection(const ConvexBody& body, std::vector<Point> polyline) : body_(&body), line_(std::move(polyline)) {
    const Tolerances& tol = body.tolerances();
    if (line_.size() < 2) throw Error(ErrorKind::InvalidParams, "polyline needs at least 2 points");
    for (const Point& p : line_) {
      if (!is_finite(p)) throw Error(ErrorKind::InvalidParams, "non-finite polyline vertex");
    }
    start_ = locate_on_boundary(body, line_.front(), tol.eps_geom);
    end_ = locate_on_boundary(body, line_.back(), tol.eps_geom);
    if (dist(start_.point, end_.point) <= tol.eps_geom) {
      throw Error(ErrorKind::InvalidParams, "closed dividing curves are not bisections");
    }
    line_.front() = start_.point;
    line_.back() = end_.point;

    for (std::size_t k = 1; k + 1 < line_.size(); ++k) {
      for (std::size_t i = 0; i < body.size(); ++i) {
        const auto [a, e] = body.edge(i);
        const Point d = e - a;
        if (cross(d, line_[k] - a) / norm(d) <= tol.eps_geom) {
          throw Error(ErrorKind::InvalidParams, "polyline interior vertex not strictly inside the body");
        }
      }
    }
    const std::size_t segs = line_.size() - 1;
    for (std::size_t i = 0; i < segs; ++i) {
      if (line_[i] == line_[i + 1]) throw Error(ErrorKind::InvalidParams, "repeated polyline vertex");
      for (std::size_t j = i + 1; j < segs; ++j) {
        if (j == i + 1) {
          if (orient(line_[i], line_[i + 1], line_[j + 1]) == 0 &&
              dot(line_[i + 1] - line_[i], line_[j + 1] - line_[j]) < 0.0) {
            throw Error(ErrorKind::InvalidParams, "polyline folds back on itself");
          }
          continue;
        }
        if (segments_intersect(line_[i], line_[i + 1], line_[j], line_[j + 1])) {
          throw Error(ErrorKind::InvalidParams, "polyline is not simple");
        }
      }
    }

    const std::span<const Point> interior(line_.data() + 1, line_.size() - 2);
    halves_ = detail::split_halves(body, start_, end_, interior);
    const double slack = 1e-12 * body.area();
    if (halves_[0].area() <= slack || halves_[1].area() <= slack) {
      throw Error(ErrorKind::InvalidParams, "polyline does not divide the body into two pieces");
    }
  }

  const ConvexBody& body() const { return *body_; }
  const std::vector<Point>& polyline() const { return line_; }
  std::array<Point, 2> endpoints() const { return {start_.point, end_.point}; }
  const BoundaryPos& start() const { return start_; }
  const BoundaryPos& end() const { return end_; }
  const std::array<SubsetPolygon, 2>& halves() const { return halves_; }

 private:
  const ConvexBody* body_;
  std::vector<Point> line_;
  BoundaryPos start_;
  BoundaryPos end_;
  std::array<SubsetPolygon, 2> halves_;
};

template <typename B>
concept Bisection = requires(const B& b) {
  { b.body() } -> std::convertible_to<const ConvexBody&>;
  { b.endpoints() } -> std::convertible_to<std::array<Point, 2>>;
  { b.halves() } -> std::convertible_to<const std::array<SubsetPolygon, 2>&>;
};

/// d_M of a center chord as the farthest boundary distance from v1 over the
/// whole body.
inline double dM_chord_eq1(const ChordBisection& b) {
  double best = 0.0;
  for (const Point& v : b.body().vertices()) best = std::max(best, dist(b.v1(), v));
  return best;
}

/// d_M of a center chord from one half only: the larger of the farthest
/// distances from v1 and from v2 within C1.
inline double dM_chord_eq2(const ChordBisection& b) {
  const auto& c1 = b.c1().vertices;
  const double eps = b.body().tolerances().eps_tie;
  const FarthestSet f1 = farthest_from(b.v1(), c1, eps);
  const FarthestSet f2 = farthest_from(b.v2(), c1, eps);
  return std::max(f1.max_distance, f2.max_distance);
}

/// Maximum relative diameter of an arbitrary two-piece division.
inline double dM_general(const SubsetPolygon& c1, const SubsetPolygon& c2) {
  return std::max(c1.diameter(), c2.diameter());
}

/// Minimum relative diameter of an arbitrary two-piece division.
inline double dm_general(const SubsetPolygon& c1, const SubsetPolygon& c2) {
  return std::min(c1.diameter(), c2.diameter());
}

template <Bisection B>
double dM_general(const B& b) {
  return dM_general(b.halves()[0], b.halves()[1]);
}

template <Bisection B>
double dm_general(const B& b) {
  return dm_general(b.halves()[0], b.halves()[1]);
}

inline ChordBisection reduce_to_chord(const ChordBisection& b) { return b; }

/// Center chord through an endpoint of `b` that is no worse than `b`: both
/// endpoints qualify, the better of the two chords is returned.
template <Bisection B>
ChordBisection reduce_to_chord(const B& b) {
  const ConvexBody& body = b.body();
  const auto ends = b.endpoints();
  const auto locate = [&](Point p) { return locate_on_boundary(body, p, body.tolerances().eps_geom); };
  ChordBisection first = chord_through(body, locate(ends[0]));
  ChordBisection second = chord_through(body, locate(ends[1]));
  return dM_chord_eq2(second) < dM_chord_eq2(first) ? second : first;
}

}  // namespace symbisect
