#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symbisect/error.hpp"
#include "symbisect/geometry.hpp"

namespace symbisect {

/// Provenance and sampling metadata attached to a body.
struct BodyMeta {
  std::string name;
  std::optional<int> discretization;
  // arc_edges[i] marks edge i -> i+1 of the input polygon as a chord of a
  // sampled smooth arc (its endpoints lie on the true curve). Empty = none.
  std::vector<bool> arc_edges;
};

/// A centrally symmetric convex polygon in canonical form: strictly convex,
/// counterclockwise, starting at the lexicographically smallest vertex, with
/// vertex i + m the reflection of vertex i through the center (2m vertices).
class ConvexBody {
 public:
  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t half_size() const { return vertices_.size() / 2; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::pair<Point, Point> edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }
  bool is_arc_edge(std::size_t i) const { return arc_edges_[i % arc_edges_.size()]; }
  const std::vector<bool>& arc_edges() const { return arc_edges_; }
  bool has_arcs() const {
    for (bool b : arc_edges_) {
      if (b) return true;
    }
    return false;
  }

  Point center() const { return center_; }
  const std::string& name() const { return name_; }
  std::optional<int> discretization() const { return discretization_; }
  double diameter() const { return diameter_.value; }
  std::pair<Point, Point> diameter_pair() const { return diameter_.pair; }
  double area() const { return area_; }
  const Tolerances& tolerances() const { return tol_; }
  double tolerance_scale() const { return tol_scale_; }

  BodyMeta meta() const { return {name_, discretization_, arc_edges_}; }

 private:
  friend ConvexBody make_body(std::span<const Point>, BodyMeta, double);

  std::vector<Point> vertices_;
  std::vector<bool> arc_edges_;
  Point center_;
  std::string name_;
  std::optional<int> discretization_;
  Diameter diameter_;
  double area_ = 0.0;
  Tolerances tol_;
  double tol_scale_ = 1.0;
};

namespace detail {

struct RawVertex {
  Point p;
  bool arc_out = false;  // edge from this vertex to the next is a sampled arc
};

inline double turning_sum(const std::vector<RawVertex>& v) {
  double total = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = v[i].p - v[(i + n - 1) % n].p;
    const Point e1 = v[(i + 1) % n].p - v[i].p;
    total += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  return total;
}

}  // namespace detail

/// Canonicalizes and validates an ordered convex polygon. Throws
/// NotConvex / NotCentrallySymmetric / DegenerateInput.
inline ConvexBody make_body(std::span<const Point> points, BodyMeta meta = {},
                            double tol_scale = 1.0) {
  if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) {
    throw Error(ErrorKind::InvalidParams, "tolerance scale must be positive");
  }
  if (!meta.arc_edges.empty() && meta.arc_edges.size() != points.size()) {
    throw Error(ErrorKind::InvalidParams, "arc edge mask size does not match vertex count");
  }
  std::vector<detail::RawVertex> v;
  v.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_finite(points[i])) throw Error(ErrorKind::DegenerateInput, "non-finite coordinate");
    v.push_back({points[i], !meta.arc_edges.empty() && meta.arc_edges[i]});
  }

  // Drop repeated consecutive vertices (the zero-length edge disappears).
  {
    std::vector<detail::RawVertex> out;
    for (const auto& rv : v) {
      if (!out.empty() && out.back().p == rv.p) {
        out.back().arc_out = rv.arc_out;
        continue;
      }
      out.push_back(rv);
    }
    while (out.size() > 1 && out.front().p == out.back().p) out.pop_back();
    v = std::move(out);
  }
  if (v.size() < 3) throw Error(ErrorKind::DegenerateInput, "fewer than 3 distinct vertices");

  {
    std::vector<Point> pts;
    for (const auto& rv : v) pts.push_back(rv.p);
    if (signed_area2(pts) < 0.0) {
      // Reverse; edge i -> i+1 of the reversed list is old edge n-2-i.
      const std::size_t n = v.size();
      std::vector<detail::RawVertex> r(n);
      for (std::size_t k = 0; k < n; ++k) {
        r[k].p = v[n - 1 - k].p;
        r[k].arc_out = v[(2 * n - 2 - k) % n].arc_out;
      }
      v = std::move(r);
    }
  }

  // Merge exactly collinear runs; a reflex turn is a convexity violation.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& prev = v[(i + n - 1) % n];
      const auto& cur = v[i];
      const auto& next = v[(i + 1) % n];
      const int o = orient(prev.p, cur.p, next.p);
      if (o < 0) {
        std::ostringstream msg;
        msg << "reflex turn at vertex (" << cur.p.x << ", " << cur.p.y << ")";
        throw Error(ErrorKind::NotConvex, msg.str());
      }
      if (o == 0) {
        if (dot(cur.p - prev.p, next.p - cur.p) < 0.0) {
          throw Error(ErrorKind::NotConvex, "polygon folds back on itself");
        }
        v[(i + n - 1) % n].arc_out = prev.arc_out && cur.arc_out;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3) throw Error(ErrorKind::DegenerateInput, "all vertices are collinear");
  if (std::fabs(detail::turning_sum(v) - 2.0 * std::numbers::pi) > 1e-6) {
    throw Error(ErrorKind::NotConvex, "boundary winds more than once");
  }

  // Start at the lexicographically smallest vertex.
  std::size_t start = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Point a = v[i].p;
    const Point b = v[start].p;
    if (a.x < b.x || (a.x == b.x && a.y < b.y)) start = i;
  }
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(start), v.end());

  ConvexBody body;
  for (const auto& rv : v) {
    body.vertices_.push_back(rv.p);
    body.arc_edges_.push_back(rv.arc_out);
  }
  body.diameter_ = diameter(body.vertices_);
  body.area_ = area(body.vertices_);
  body.tol_ = Tolerances::for_diameter(body.diameter_.value, tol_scale);
  body.tol_scale_ = tol_scale;

  const std::size_t n = body.vertices_.size();
  if (n % 2 != 0) {
    throw Error(ErrorKind::NotCentrallySymmetric,
                "odd vertex count " + std::to_string(n) + " after canonicalization");
  }
  const std::size_t m = n / 2;
  Point sum{0.0, 0.0};
  for (std::size_t i = 0; i < m; ++i) sum = sum + 0.5 * (body.vertices_[i] + body.vertices_[i + m]);
  body.center_ = (1.0 / static_cast<double>(m)) * sum;

  double worst = 0.0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dev = dist(body.vertices_[i + m], reflect(body.vertices_[i], body.center_));
    if (dev > worst) {
      worst = dev;
      worst_i = i;
    }
  }
  if (worst > body.tol_.eps_sym) {
    std::ostringstream msg;
    msg << "vertex pair (" << worst_i << ", " << worst_i + m << ") has deviation " << worst
        << " from point reflection (limit " << body.tol_.eps_sym << ")";
    throw Error(ErrorKind::NotCentrallySymmetric, msg.str());
  }

  body.name_ = std::move(meta.name);
  body.discretization_ = meta.discretization;
  return body;
}

inline ConvexBody make_body(const std::vector<Point>& points, BodyMeta meta = {},
                            double tol_scale = 1.0) {
  return make_body(std::span<const Point>(points), std::move(meta), tol_scale);
}

/// Applies an affine point map to every vertex and re-canonicalizes.
template <typename Map>
ConvexBody transformed(const ConvexBody& body, Map&& map, std::string name_suffix = {}) {
  std::vector<Point> pts;
  pts.reserve(body.size());
  for (const Point& p : body.vertices()) pts.push_back(map(p));
  BodyMeta meta = body.meta();
  meta.name += name_suffix;
  return make_body(pts, std::move(meta), body.tolerance_scale());
}

inline ConvexBody scaled(const ConvexBody& body, double factor) {
  return transformed(body, [factor](Point p) { return factor * p; });
}

inline ConvexBody translated(const ConvexBody& body, Point offset) {
  return transformed(body, [offset](Point p) { return p + offset; });
}

/// Rotation by `angle` about the origin.
inline ConvexBody rotated(const ConvexBody& body, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return transformed(body, [c, s](Point p) { return Point{c * p.x - s * p.y, s * p.x + c * p.y}; });
}

inline ConvexBody with_tolerance_scale(const ConvexBody& body, double scale) {
  return make_body(body.vertices(), body.meta(), scale);
}

}  // namespace symbisect
