#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "symbisect/bisection.hpp"
#include "symbisect/body.hpp"
#include "symbisect/error.hpp"

namespace symbisect {

struct ThetaValue {
  double theta = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of f on [lo, hi] until the bracket is narrower
/// than `width`. Returns the best point evaluated (seed included).
template <typename F>
ThetaValue golden_section_minimize(F&& f, double lo, double hi, double width, ThetaValue seed) {
  constexpr double inv_phi = 0.6180339887498948482;  // 1/phi
  ThetaValue best = seed;
  auto track = [&](double x, double fx) {
    if (fx < best.value || (fx == best.value && x < best.theta)) best = {x, fx};
  };
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  track(c, fc);
  track(d, fd);
  for (int it = 0; it < 200 && (b - a) > width; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      track(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      track(d, fd);
    }
  }
  return best;
}

struct SweepResult {
  double best_theta = 0.0;
  double best_value = 0.0;
  std::vector<ThetaValue> local_minima;  // ascending theta
  int steps = 0;
  double refinement_tolerance = 0.0;
  std::size_t evaluations = 0;
};

inline constexpr int kDefaultSweepSteps = 4096;
inline constexpr double kDefaultRefineTol = 1e-10;

/// The chord objective minimized by the sweep: d_M of the center chord at theta.
inline double chord_objective(const ConvexBody& body, double theta) {
  return dM_chord_eq2(chord_at_angle(body, theta));
}

/// Angles in [0, pi) at which the center chord passes through a vertex.
inline std::vector<double> vertex_event_angles(const ConvexBody& body) {
  std::vector<double> out;
  const Point c = body.center();
  for (const Point& v : body.vertices()) {
    const Point d = v - c;
    double a = std::atan2(d.y, d.x);
    if (a < 0.0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    out.push_back(a);
  }
  return out;
}

/// Minimizes d_M over center chords: uniform grid of `steps` angles in [0, pi)
/// plus every vertex event angle, then golden-section refinement inside each
/// bracketed local minimum. Ties resolve toward the smaller angle.
inline SweepResult sweep_minimize(const ConvexBody& body, int steps = kDefaultSweepSteps,
                                  double refine_tol = kDefaultRefineTol) {
  if (steps < 64) throw Error(ErrorKind::InvalidParams, "sweep needs at least 64 steps");
  if (!(refine_tol > 0.0)) throw Error(ErrorKind::InvalidParams, "refinement tolerance must be positive");

  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(steps) + body.size());
  for (int k = 0; k < steps; ++k) angles.push_back(k * std::numbers::pi / steps);
  for (double a : vertex_event_angles(body)) angles.push_back(a);
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

  SweepResult res;
  res.steps = steps;
  res.refinement_tolerance = refine_tol;

  const std::size_t n = angles.size();
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = chord_objective(body, angles[i]);
  res.evaluations = n;

  // The objective has period pi in theta; neighbours wrap around.
  auto objective = [&](double t) {
    ++res.evaluations;
    return chord_objective(body, t);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ip = (i + n - 1) % n;
    const std::size_t in = (i + 1) % n;
    if (!(values[i] < values[ip] && values[i] <= values[in])) continue;
    const double lo = (i == 0) ? angles[ip] - std::numbers::pi : angles[ip];
    const double hi = (i + 1 == n) ? angles[in] + std::numbers::pi : angles[in];
    ThetaValue m = golden_section_minimize(objective, lo, hi, refine_tol, {angles[i], values[i]});
    if (m.theta < 0.0) m.theta += std::numbers::pi;
    if (m.theta >= std::numbers::pi) m.theta -= std::numbers::pi;
    res.local_minima.push_back(m);
  }
  if (res.local_minima.empty()) {
    // Constant profile: every sample ties.
    const auto it = std::min_element(values.begin(), values.end());
    res.local_minima.push_back({angles[static_cast<std::size_t>(it - values.begin())], *it});
  }
  std::sort(res.local_minima.begin(), res.local_minima.end(),
            [](const ThetaValue& a, const ThetaValue& b) { return a.theta < b.theta; });

  ThetaValue best = res.local_minima.front();
  for (const ThetaValue& m : res.local_minima) {
    if (m.value < best.value) best = m;
  }
  res.best_theta = best.theta;
  res.best_value = best.value;
  return res;
}

/// Plain minimum of the whole-boundary d_M over a uniform angle grid.
inline double brute_force_oracle(const ConvexBody& body, int steps) {
  if (steps < 1000) throw Error(ErrorKind::InvalidParams, "oracle needs at least 1000 steps");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < steps; ++k) {
    best = std::min(best, dM_chord_eq1(chord_at_angle(body, k * std::numbers::pi / steps)));
  }
  return best;
}

}  // namespace symbisect
