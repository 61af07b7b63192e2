#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symbisect/error.hpp"
#include "symbisect/predicates.hpp"

namespace symbisect {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist2(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}
inline double dist(Point a, Point b) { return std::sqrt(dist2(a, b)); }
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Point reflection of `p` through `center`.
inline Point reflect(Point p, Point center) { return 2.0 * center - p; }

inline Point unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline int orient(Point a, Point b, Point c) { return orient2d(a.x, a.y, b.x, b.y, c.x, c.y); }

/// Numerical tolerances, all absolute (already scaled by the body diameter).
struct Tolerances {
  double eps_geom = 1e-12;  // orientation / incidence slack
  double eps_tie = 1e-9;    // farthest-distance tie width
  double eps_cert = 1e-9;   // strict-interior margin of certificate disks
  double eps_sym = 1e-9;    // central-symmetry validation slack

  /// Defaults for a body of diameter `diameter`; `scale` multiplies every entry.
  static Tolerances for_diameter(double diameter, double scale = 1.0) {
    Tolerances t;
    t.eps_geom = scale * 1e-11 * diameter;
    t.eps_tie = scale * (1e-9 + 1e-7 * diameter);
    t.eps_cert = scale * 1e-9 * diameter;
    t.eps_sym = scale * 1e-8 * diameter;
    t.validate();
    return t;
  }

  void validate() const {
    const bool positive = eps_geom > 0 && eps_tie > 0 && eps_cert > 0 && eps_sym > 0;
    if (!positive || !(eps_tie >= eps_geom)) {
      throw Error(ErrorKind::InvalidParams, "tolerances must be positive with eps_tie >= eps_geom");
    }
  }
};

/// Twice the signed area (positive for counterclockwise cycles).
inline double signed_area2(std::span<const Point> poly) {
  double acc = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) acc += cross(poly[i], poly[(i + 1) % n]);
  return acc;
}

inline double area(std::span<const Point> poly) { return 0.5 * std::fabs(signed_area2(poly)); }

inline Point closest_point_on_segment(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return a + t * d;
}

inline double point_segment_distance(Point p, Point a, Point b) {
  return dist(p, closest_point_on_segment(p, a, b));
}

/// True when closed segments [a,b] and [c,d] share at least one point (exact).
inline bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  auto on_segment = [](Point p, Point q, Point r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
  };
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

/// Extreme points in counterclockwise order, starting from the lexicographically
/// smallest, with collinear points dropped (monotone chain).
inline std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  for (const Point& p : pts) {
    if (!is_finite(p)) throw Error(ErrorKind::DegenerateInput, "non-finite coordinate");
  }
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorKind::DegenerateInput, "fewer than 3 distinct points");

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw Error(ErrorKind::DegenerateInput, "all points are collinear");
  return hull;
}

struct Diameter {
  double value = 0.0;
  std::pair<Point, Point> pair;
};

/// Diameter of a convex CCW polygon by rotating calipers, O(n).
inline Diameter diameter(std::span<const Point> poly) {
  const std::size_t n = poly.size();
  if (n < 2) throw Error(ErrorKind::DegenerateInput, "diameter needs at least 2 vertices");
  if (n == 2) return {dist(poly[0], poly[1]), {poly[0], poly[1]}};

  double best2 = -1.0;
  std::pair<Point, Point> best{poly[0], poly[1]};
  auto consider = [&](std::size_t i, std::size_t j) {
    const double d2 = dist2(poly[i % n], poly[j % n]);
    if (d2 > best2) {
      best2 = d2;
      best = {poly[i % n], poly[j % n]};
    }
  };
  auto edge = [&](std::size_t i) { return poly[(i + 1) % n] - poly[i % n]; };

  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point ei = edge(i);
    // Advance j while the next edge still moves away from the line of edge i.
    std::size_t guard = 0;
    while (cross(ei, edge(j)) > 0.0 && guard++ < n) ++j;
    consider(i, j);
    consider(i + 1, j);
    consider(i, j + 1);
    consider(i + 1, j + 1);
  }
  return {std::sqrt(best2), best};
}

/// Set of farthest boundary points from a base point.
struct FarthestSet {
  Point base;
  double max_distance = 0.0;
  std::vector<Point> witnesses;         // in boundary order
  std::vector<std::size_t> indices;     // vertex index of each witness
  double tolerance_used = 0.0;
};

/// Farthest vertices of `boundary` from `base`. Distance to a fixed point is
/// convex along every edge, so the maximum over the polygon boundary is
/// attained at vertices; scanning them is exact.
inline FarthestSet farthest_from(Point base, std::span<const Point> boundary, double eps_tie) {
  if (boundary.empty()) throw Error(ErrorKind::DegenerateInput, "empty boundary");
  FarthestSet out;
  out.base = base;
  out.tolerance_used = eps_tie;
  double best = -1.0;
  for (const Point& v : boundary) best = std::max(best, dist(base, v));
  out.max_distance = best;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (best - dist(base, boundary[i]) <= eps_tie) {
      out.witnesses.push_back(boundary[i]);
      out.indices.push_back(i);
    }
  }
  return out;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

/// Open parameter interval of t in [0,1] where seg.first + t (seg.second -
/// seg.first) lies strictly inside the disk shrunk by eps_cert.
inline std::optional<Interval> segment_disk_interval(std::pair<Point, Point> seg, Point center,
                                                     double radius, double eps_cert) {
  const double r = radius - eps_cert;
  if (!(r > 0.0)) return std::nullopt;
  const Point d = seg.second - seg.first;
  const Point f = seg.first - center;
  const double a = dot(d, d);
  const double c = dot(f, f) - r * r;
  if (a == 0.0) {
    if (c < 0.0) return Interval{0.0, 1.0};
    return std::nullopt;
  }
  const double b = dot(f, d);
  const double disc = b * b - a * c;
  if (!(disc > 0.0)) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double q = -(b + std::copysign(sq, b));
  double t1 = q / a;
  double t2 = (q != 0.0) ? c / q : -t1;
  if (t1 > t2) std::swap(t1, t2);
  const double lo = std::max(t1, 0.0);
  const double hi = std::min(t2, 1.0);
  if (!(lo < hi)) return std::nullopt;
  return Interval{lo, hi};
}

struct Disk {
  Point center;
  double radius = 0.0;
};

struct LensWitness {
  double t = 0.0;
  Point point;
};

/// Whether the segment meets the open lens disk1 ∩ disk2 (each shrunk by
/// eps_cert); the witness is the midpoint of the common parameter interval.
inline std::optional<LensWitness> segment_in_lens(std::pair<Point, Point> seg, const Disk& disk1,
                                                  const Disk& disk2, double eps_cert) {
  const auto i1 = segment_disk_interval(seg, disk1.center, disk1.radius, eps_cert);
  if (!i1) return std::nullopt;
  const auto i2 = segment_disk_interval(seg, disk2.center, disk2.radius, eps_cert);
  if (!i2) return std::nullopt;
  const double lo = std::max(i1->lo, i2->lo);
  const double hi = std::min(i1->hi, i2->hi);
  if (!(lo < hi)) return std::nullopt;
  const double t = 0.5 * (lo + hi);
  return LensWitness{t, seg.first + t * (seg.second - seg.first)};
}

}  // namespace symbisect
