#pragma once

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symbisect/body.hpp"
#include "symbisect/error.hpp"

namespace symbisect {

using Params = std::map<std::string, double>;

/// Shortest round-trip decimal form of a double.
inline std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace gen {

inline constexpr int kDefaultSamples = 256;

namespace detail {

inline void require_positive(std::string_view what, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidParams, std::string(what) + " must be positive and finite");
  }
}

inline void require_samples(int n) {
  if (n < 8 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidParams, "sample count must be even and at least 8");
  }
}

// Even number of steps for an arc of the given parameter extent, so its
// midpoint is always a sample; density matches a full turn of n samples.
inline int arc_steps(double extent, int n) {
  int k = static_cast<int>(std::ceil(extent * n / (2.0 * std::numbers::pi) - 1e-9));
  if (k < 2) k = 2;
  if (k % 2 != 0) ++k;
  return k;
}

// A polygon whose second half is the exact negation of the first half
// (center at the origin); `arc` flags the outgoing edge of each vertex.
struct HalfBuilder {
  std::vector<Point> pts;
  std::vector<bool> arc;

  void add(Point p, bool arc_out) {
    pts.push_back(p);
    arc.push_back(arc_out);
  }

  ConvexBody finish(std::string name, std::optional<int> discretization) const {
    std::vector<Point> all = pts;
    std::vector<bool> flags = arc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      all.push_back(-pts[i]);
      flags.push_back(arc[i]);
    }
    return make_body(all, BodyMeta{std::move(name), discretization, std::move(flags)});
  }
};

}  // namespace detail

inline ConvexBody rectangle(double a, double b) {
  detail::require_positive("rectangle width a", a);
  detail::require_positive("rectangle height b", b);
  detail::HalfBuilder h;
  h.add({-a / 2, -b / 2}, false);
  h.add({a / 2, -b / 2}, false);
  return h.finish("rectangle(a=" + format_number(a) + ",b=" + format_number(b) + ")", std::nullopt);
}

inline ConvexBody square(double s) {
  detail::require_positive("square side s", s);
  detail::HalfBuilder h;
  h.add({-s / 2, -s / 2}, false);
  h.add({s / 2, -s / 2}, false);
  return h.finish("square(s=" + format_number(s) + ")", std::nullopt);
}

/// Two equilateral triangles of side s glued along a vertical common edge.
inline ConvexBody rhombus_equilateral(double s) {
  detail::require_positive("rhombus side s", s);
  const double w = std::sqrt(3.0) / 2.0 * s;
  detail::HalfBuilder h;
  h.add({w, 0.0}, false);
  h.add({0.0, s / 2}, false);
  return h.finish("rhombus_equilateral(s=" + format_number(s) + ")", std::nullopt);
}

inline ConvexBody regular_2mgon(int m, double r) {
  if (m < 2) throw Error(ErrorKind::InvalidParams, "regular_2mgon needs m >= 2");
  detail::require_positive("circumradius r", r);
  detail::HalfBuilder h;
  for (int k = 0; k < m; ++k) {
    const double a = std::numbers::pi * k / m;
    h.add({r * std::cos(a), r * std::sin(a)}, false);
  }
  return h.finish("regular_2mgon(m=" + std::to_string(m) + ",r=" + format_number(r) + ")",
                  std::nullopt);
}

inline ConvexBody ellipse(double a, double b, int n = kDefaultSamples) {
  detail::require_positive("semi-axis a", a);
  detail::require_positive("semi-axis b", b);
  detail::require_samples(n);
  detail::HalfBuilder h;
  for (int k = 0; k < n / 2; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    Point p{a * std::cos(t), b * std::sin(t)};
    if (4 * k == n) p = {0.0, b};
    h.add(p, true);
  }
  return h.finish("ellipse(a=" + format_number(a) + ",b=" + format_number(b) + ")", n);
}

inline ConvexBody circle(double r, int n = kDefaultSamples) {
  detail::require_positive("radius r", r);
  ConvexBody e = ellipse(r, r, n);
  BodyMeta meta = e.meta();
  meta.name = "circle(r=" + format_number(r) + ")";
  return make_body(e.vertices(), std::move(meta));
}

/// Convex hull of the circle of radius r and the points (±h, 0), h > r.
inline ConvexBody cap_body(double r, double h, int n = kDefaultSamples) {
  detail::require_positive("radius r", r);
  detail::require_samples(n);
  if (!(h > r) || !std::isfinite(h)) throw Error(ErrorKind::InvalidParams, "cap_body needs h > r");
  const double alpha = std::acos(r / h);
  const double extent = std::numbers::pi - 2.0 * alpha;
  const int k = detail::arc_steps(extent, n);
  detail::HalfBuilder b;
  b.add({h, 0.0}, false);
  for (int i = 0; i <= k; ++i) {
    Point p;
    if (i == 0) {
      p = {r * r / h, r * std::sqrt(1.0 - (r / h) * (r / h))};
    } else if (i == k) {
      p = {-r * r / h, r * std::sqrt(1.0 - (r / h) * (r / h))};
    } else if (2 * i == k) {
      p = {0.0, r};
    } else {
      const double beta = alpha + extent * i / k;
      p = {r * std::cos(beta), r * std::sin(beta)};
    }
    b.add(p, i < k);
  }
  return b.finish("cap_body(r=" + format_number(r) + ",h=" + format_number(h) + ")", n);
}

/// Square of the given side with two opposite corners (upper right, lower
/// left) cut by isosceles right triangles of leg `leg`.
inline ConvexBody cut_corner_hexagon(double side, double leg) {
  detail::require_positive("side", side);
  detail::require_positive("leg", leg);
  if (!(leg < side)) throw Error(ErrorKind::InvalidParams, "leg must be shorter than side");
  const double h = side / 2.0;
  detail::HalfBuilder b;
  b.add({-h, -h + leg}, false);
  b.add({-h + leg, -h}, false);
  b.add({h, -h}, false);
  return b.finish(
      "cut_corner_hexagon(side=" + format_number(side) + ",leg=" + format_number(leg) + ")",
      std::nullopt);
}

/// S ∩ B(v1, s) ∩ B(v2, s) for the square S of side s, v1/v2 the midpoints of
/// its top and bottom edges.
inline ConvexBody lens_capped_square(double s, int n = kDefaultSamples) {
  detail::require_positive("side s", s);
  detail::require_samples(n);
  // Arc of B(v1, s) below the square's center, from x = -s/2 to x = s/2.
  const double extent = std::numbers::pi / 3.0;
  const double start = -std::numbers::pi / 2.0 - std::numbers::pi / 6.0;
  const int k = detail::arc_steps(extent, n);
  const double y_end = s / 2.0 - s * std::sqrt(3.0) / 2.0;
  detail::HalfBuilder b;
  for (int i = 0; i <= k; ++i) {
    Point p;
    if (i == 0) {
      p = {-s / 2.0, y_end};
    } else if (i == k) {
      p = {s / 2.0, y_end};
    } else if (2 * i == k) {
      p = {0.0, -s / 2.0};
    } else {
      const double a = start + extent * i / k;
      p = {s * std::cos(a), s / 2.0 + s * std::sin(a)};
    }
    b.add(p, i < k);
  }
  return b.finish("lens_capped_square(s=" + format_number(s) + ")", n);
}

/// Ellipse with semi-axes a, b cut by the vertical lines x = ±cut.
inline ConvexBody truncated_ellipse(double a, double b, double cut, int n = kDefaultSamples) {
  detail::require_positive("semi-axis a", a);
  detail::require_positive("semi-axis b", b);
  detail::require_positive("cut", cut);
  detail::require_samples(n);
  if (!(cut < a)) throw Error(ErrorKind::InvalidParams, "cut must be smaller than a");
  const double t0 = std::acos(cut / a);
  const double extent = std::numbers::pi - 2.0 * t0;
  const int k = detail::arc_steps(extent, n);
  const double y_end = b * std::sqrt(1.0 - (cut / a) * (cut / a));
  detail::HalfBuilder h;
  for (int i = 0; i <= k; ++i) {
    Point p;
    if (i == 0) {
      p = {cut, y_end};
    } else if (i == k) {
      p = {-cut, y_end};
    } else if (2 * i == k) {
      p = {0.0, b};
    } else {
      const double t = t0 + extent * i / k;
      p = {a * std::cos(t), b * std::sin(t)};
    }
    h.add(p, i < k);
  }
  return h.finish("truncated_ellipse(a=" + format_number(a) + ",b=" + format_number(b) +
                      ",cut=" + format_number(cut) + ")",
                  n);
}

struct GeneratorInfo {
  std::string name;
  std::vector<std::string> params;
  bool sampled;  // accepts a discretization count
};

inline const std::vector<GeneratorInfo>& generators() {
  static const std::vector<GeneratorInfo> list = {
      {"square", {"s"}, false},
      {"rectangle", {"a", "b"}, false},
      {"rhombus_equilateral", {"s"}, false},
      {"regular_2mgon", {"m", "r"}, false},
      {"circle", {"r"}, true},
      {"ellipse", {"a", "b"}, true},
      {"cap_body", {"r", "h"}, true},
      {"cut_corner_hexagon", {"side", "leg"}, false},
      {"lens_capped_square", {"s"}, true},
      {"truncated_ellipse", {"a", "b", "cut"}, true},
  };
  return list;
}

/// Builds a named generator from a parameter map. Throws InvalidParams for an
/// unknown name, a missing or unknown parameter, or out-of-range values.
inline ConvexBody generate(std::string_view name, const Params& params,
                           std::optional<int> n = std::nullopt) {
  const GeneratorInfo* info = nullptr;
  for (const auto& g : generators()) {
    if (g.name == name) info = &g;
  }
  if (info == nullptr) throw Error(ErrorKind::InvalidParams, "unknown generator '" + std::string(name) + "'");
  const std::set<std::string> expected(info->params.begin(), info->params.end());
  for (const auto& [key, value] : params) {
    if (!expected.count(key)) {
      throw Error(ErrorKind::InvalidParams, "generator " + info->name + " has no parameter '" + key + "'");
    }
    if (!std::isfinite(value)) throw Error(ErrorKind::InvalidParams, "parameter '" + key + "' is not finite");
  }
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw Error(ErrorKind::InvalidParams, "generator " + info->name + " requires parameter '" + key + "'");
    }
    return it->second;
  };
  const int samples = n.value_or(kDefaultSamples);

  if (name == "square") return square(get("s"));
  if (name == "rectangle") return rectangle(get("a"), get("b"));
  if (name == "rhombus_equilateral") return rhombus_equilateral(get("s"));
  if (name == "regular_2mgon") {
    const double m = get("m");
    if (m != std::floor(m) || m > 1e6) throw Error(ErrorKind::InvalidParams, "m must be an integer");
    return regular_2mgon(static_cast<int>(m), get("r"));
  }
  if (name == "circle") return circle(get("r"), samples);
  if (name == "ellipse") return ellipse(get("a"), get("b"), samples);
  if (name == "cap_body") return cap_body(get("r"), get("h"), samples);
  if (name == "cut_corner_hexagon") return cut_corner_hexagon(get("side"), get("leg"));
  if (name == "lens_capped_square") return lens_capped_square(get("s"), samples);
  return truncated_ellipse(get("a"), get("b"), get("cut"), samples);
}

}  // namespace gen
}  // namespace symbisect
