#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symbisect/bisection.hpp"
#include "symbisect/body.hpp"
#include "symbisect/error.hpp"
#include "symbisect/geometry.hpp"

namespace symbisect {

struct NecessaryResult {
  bool holds = false;
  double d1 = 0.0;  // farthest distance from v1 within C1
  double d2 = 0.0;  // farthest distance from v2 within C1
};

/// For a minimizing center chord, both endpoints reach their farthest point of
/// the same half C1 at equal distance.
inline NecessaryResult necessary_condition(const ChordBisection& b, double eps_tie) {
  const auto& c1 = b.c1().vertices;
  NecessaryResult r;
  r.d1 = farthest_from(b.v1(), c1, eps_tie).max_distance;
  r.d2 = farthest_from(b.v2(), c1, eps_tie).max_distance;
  r.holds = std::fabs(r.d1 - r.d2) <= eps_tie;
  return r;
}

inline NecessaryResult necessary_condition(const ChordBisection& b) {
  return necessary_condition(b, b.body().tolerances().eps_tie);
}

enum class Verdict { Certified, HypothesisViolated, Inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::HypothesisViolated: return "HypothesisViolated";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "?";
}

/// A point of the outer boundary of C2 strictly inside both disks.
struct LensViolation {
  std::size_t edge = 0;  // edge index within C2
  double t = 0.0;
  Point point;
};

struct Certificate {
  Verdict verdict = Verdict::Inapplicable;
  std::optional<Point> phi1, phi2;
  std::optional<double> radius1, radius2;
  std::optional<LensViolation> witness;
  std::vector<LensViolation> violations;  // every offending edge for the reported pair
  int tried_pairs = 0;
  bool common_farthest = false;  // certified by a point farthest from both endpoints
  std::string diagnostic;
};

inline constexpr std::size_t kMaxFarthestPairs = 1024;

namespace detail {

inline std::vector<LensViolation> lens_violations(const SubsetPolygon& c2, const Disk& b1,
                                                  const Disk& b2, double eps_cert, bool stop_at_first) {
  std::vector<LensViolation> out;
  const std::size_t n = c2.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c2.is_cut_edge(i)) continue;
    if (auto w = segment_in_lens(c2.edge(i), b1, b2, eps_cert)) {
      out.push_back({i, w->t, w->point});
      if (stop_at_first) break;
    }
  }
  return out;
}

}  // namespace detail

/// Sufficient condition for a center chord to be minimizing: farthest points
/// phi1 of v1 and phi2 of v2 in C1 at equal distance r, such that the boundary
/// of C2 on the body avoids the open lens B(phi1, r) ∩ B(phi2, r). All pairs
/// of farthest points are searched, points farthest from both endpoints first.
inline Certificate certify_theorem(const ChordBisection& b, const Tolerances& tol) {
  Certificate cert;
  const auto& c1 = b.c1().vertices;
  const FarthestSet f1 = farthest_from(b.v1(), c1, tol.eps_tie);
  const FarthestSet f2 = farthest_from(b.v2(), c1, tol.eps_tie);
  cert.radius1 = f1.max_distance;
  cert.radius2 = f2.max_distance;

  if (std::fabs(f1.max_distance - f2.max_distance) > tol.eps_tie) {
    cert.verdict = Verdict::Inapplicable;
    cert.diagnostic = "farthest distances from the endpoints differ; equal-distance hypothesis cannot hold";
    return cert;
  }
  const std::size_t total = f1.witnesses.size() * f2.witnesses.size();
  if (total > kMaxFarthestPairs) {
    cert.verdict = Verdict::Inapplicable;
    cert.diagnostic = "farthest-point pair enumeration capped: " + std::to_string(total) + " pairs exceed " +
                      std::to_string(kMaxFarthestPairs);
    return cert;
  }

  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < f1.indices.size(); ++i) {
    for (std::size_t j = 0; j < f2.indices.size(); ++j) {
      if (f1.indices[i] == f2.indices[j]) order.emplace_back(i, j);
    }
  }
  const std::size_t common = order.size();
  for (std::size_t i = 0; i < f1.indices.size(); ++i) {
    for (std::size_t j = 0; j < f2.indices.size(); ++j) {
      if (f1.indices[i] != f2.indices[j]) order.emplace_back(i, j);
    }
  }

  const SubsetPolygon& c2 = b.c2();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Point p1 = f1.witnesses[order[k].first];
    const Point p2 = f2.witnesses[order[k].second];
    const Disk b1{p1, dist(b.v1(), p1)};
    const Disk b2{p2, dist(b.v2(), p2)};
    ++cert.tried_pairs;
    const bool last = k + 1 == order.size();
    auto hits = detail::lens_violations(c2, b1, b2, tol.eps_cert, !last);
    if (hits.empty()) {
      cert.verdict = Verdict::Certified;
      cert.phi1 = p1;
      cert.phi2 = p2;
      cert.radius1 = b1.radius;
      cert.radius2 = b2.radius;
      cert.common_farthest = k < common;
      if (cert.common_farthest) cert.diagnostic = "farthest point shared by both endpoints";
      return cert;
    }
    if (last) {
      cert.verdict = Verdict::HypothesisViolated;
      cert.phi1 = p1;
      cert.phi2 = p2;
      cert.radius1 = b1.radius;
      cert.radius2 = b2.radius;
      cert.witness = hits.front();
      cert.violations = std::move(hits);
      cert.diagnostic = "boundary of C2 meets the open lens for every farthest-point pair";
    }
  }
  return cert;
}

inline Certificate certify_theorem(const ChordBisection& b) {
  return certify_theorem(b, b.body().tolerances());
}

struct Inradius {
  double radius = 0.0;
  std::vector<BoundaryPos> touch_points;  // boundary order, antipodally closed
};

/// Distance from the center of symmetry to the boundary. If B(q, r) lies in a
/// centrally symmetric body so does its reflection B(-q, r), and by convexity
/// B(center, r); the inball can therefore be centered at the center.
/// Sampled arc edges are measured at their samples, which lie on the curve.
inline Inradius inradius(const ConvexBody& body) {
  const Point c = body.center();
  const Tolerances& tol = body.tolerances();
  struct Candidate {
    double d;
    BoundaryPos pos;
  };
  std::vector<Candidate> cand;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto [a, e] = body.edge(i);
    if (body.is_arc_edge(i)) {
      cand.push_back({dist(c, a), {i, true, static_cast<double>(i), a}});
      cand.push_back({dist(c, e), {(i + 1) % body.size(), true, static_cast<double>((i + 1) % body.size()), e}});
      continue;
    }
    const Point d = e - a;
    const double t = std::clamp(dot(c - a, d) / dot(d, d), 0.0, 1.0);
    BoundaryPos pos;
    if (t == 0.0) {
      pos = {i, true, static_cast<double>(i), a};
    } else if (t == 1.0) {
      pos = {(i + 1) % body.size(), true, static_cast<double>((i + 1) % body.size()), e};
    } else {
      pos = {i, false, static_cast<double>(i) + t, a + t * d};
    }
    cand.push_back({dist(c, pos.point), pos});
  }

  Inradius out;
  out.radius = std::numeric_limits<double>::infinity();
  for (const auto& k : cand) out.radius = std::min(out.radius, k.d);

  auto already = [&](Point p) {
    for (const auto& t : out.touch_points) {
      if (dist(t.point, p) <= tol.eps_tie) return true;
    }
    return false;
  };
  for (const auto& k : cand) {
    if (k.d - out.radius <= tol.eps_tie && !already(k.pos.point)) out.touch_points.push_back(k.pos);
  }
  const std::size_t found = out.touch_points.size();
  for (std::size_t i = 0; i < found; ++i) {
    const Point q = reflect(out.touch_points[i].point, c);
    if (!already(q)) out.touch_points.push_back(locate_on_boundary(body, q, std::max(tol.eps_sym, tol.eps_geom)));
  }
  std::sort(out.touch_points.begin(), out.touch_points.end(),
            [](const BoundaryPos& a, const BoundaryPos& b) { return a.param < b.param; });
  return out;
}

struct StandardBisectionSet {
  double inradius = 0.0;
  std::vector<Point> touch_points;  // one per antipodal pair: the v1 of its chord
  std::vector<ChordBisection> chords;
  std::vector<double> values;

  /// Number of distinct d_M values (values within `eps` merged).
  std::size_t value_classes(double eps) const {
    std::vector<double> v = values;
    std::sort(v.begin(), v.end());
    std::size_t classes = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i == 0 || v[i] - v[i - 1] > eps) ++classes;
    }
    return classes;
  }
};

/// One center chord per antipodal pair of inball touch points.
inline StandardBisectionSet standard_bisections(const ConvexBody& body) {
  const Inradius in = inradius(body);
  const Point c = body.center();
  const double eps = body.tolerances().eps_tie;
  StandardBisectionSet out;
  out.inradius = in.radius;
  std::vector<bool> used(in.touch_points.size(), false);
  for (std::size_t i = 0; i < in.touch_points.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Point t = in.touch_points[i].point;
    const Point anti = reflect(t, c);
    for (std::size_t j = i + 1; j < in.touch_points.size(); ++j) {
      if (!used[j] && dist(in.touch_points[j].point, anti) <= eps) used[j] = true;
    }
    // Orient the chord so theta lies in [0, pi).
    Point d = t - c;
    if (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)) d = -d;
    double theta = std::atan2(d.y, d.x);
    if (theta >= std::numbers::pi) theta = 0.0;
    ChordBisection chord = chord_at_angle(body, theta);
    out.touch_points.push_back(chord.v1());
    out.values.push_back(dM_chord_eq2(chord));
    out.chords.push_back(std::move(chord));
  }
  return out;
}

/// True when two chords of the same body coincide as bisections.
inline bool same_chord(const ChordBisection& a, const ChordBisection& b, double eps) {
  return (dist(a.v1(), b.v1()) <= eps && dist(a.v2(), b.v2()) <= eps) ||
         (dist(a.v1(), b.v2()) <= eps && dist(a.v2(), b.v1()) <= eps);
}

/// A standard chord whose d_M equals its own length is minimizing: every other
/// center chord is at least as long as a standard one.
inline bool standard_chord_rule(const ChordBisection& b, const StandardBisectionSet& std_set) {
  const double eps_match = std::max(b.body().tolerances().eps_tie, b.body().tolerances().eps_geom);
  const bool member = std::any_of(std_set.chords.begin(), std_set.chords.end(),
                                  [&](const ChordBisection& s) { return same_chord(s, b, eps_match); });
  if (!member) throw Error(ErrorKind::NotStandard, "chord is not a standard bisection of the body");
  return std::fabs(dM_chord_eq2(b) - b.chord_length()) <= b.body().tolerances().eps_tie;
}

/// The standard bisection is unique iff the inball touches the boundary at
/// exactly two points.
inline bool standard_uniqueness(const ConvexBody& body) { return inradius(body).touch_points.size() == 2; }

}  // namespace symbisect
