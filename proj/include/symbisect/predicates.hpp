#pragma once

// Exact-sign planar orientation. A floating-point filter answers almost every
// query; near-degenerate triples fall back to an exact expansion sum of the
// six products of the expanded determinant (products split exactly by fma).

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace symbisect::detail {

inline void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double bv = sum - a;
  const double av = sum - bv;
  err = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& prod, double& err) {
  prod = a * b;
  err = std::fma(a, b, -prod);
}

// Sign of the exact sum of `terms`. Builds a nonoverlapping expansion with
// Shewchuk's grow-expansion; its most significant nonzero component carries the
// sign of the whole sum.
template <std::size_t N>
int exact_sum_sign(const std::array<double, N>& terms) {
  std::array<double, N> expansion{};
  std::size_t len = 0;
  for (double b : terms) {
    double q = b;
    for (std::size_t i = 0; i < len; ++i) {
      double s = 0.0, e = 0.0;
      two_sum(q, expansion[i], s, e);
      expansion[i] = e;
      q = s;
    }
    expansion[len++] = q;
  }
  for (std::size_t i = len; i-- > 0;) {
    if (expansion[i] > 0.0) return 1;
    if (expansion[i] < 0.0) return -1;
  }
  return 0;
}

}  // namespace symbisect::detail

namespace symbisect {

/// Sign of the doubled signed area of triangle (a, b, c): +1 for a
/// counterclockwise turn, -1 for clockwise, 0 for exactly collinear.
inline int orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2.0;
  constexpr double errbound = (3.0 + 16.0 * eps) * eps;

  const double detleft = (ax - cx) * (by - cy);
  const double detright = (ay - cy) * (bx - cx);
  const double det = detleft - detright;
  const double bound = errbound * (std::fabs(detleft) + std::fabs(detright));
  if (det > bound) return 1;
  if (-det > bound) return -1;

  // det = ax*by - ax*cy - cx*by - ay*bx + ay*cx + cy*bx
  std::array<double, 12> t{};
  detail::two_product(ax, by, t[0], t[1]);
  detail::two_product(-ax, cy, t[2], t[3]);
  detail::two_product(-cx, by, t[4], t[5]);
  detail::two_product(-ay, bx, t[6], t[7]);
  detail::two_product(ay, cx, t[8], t[9]);
  detail::two_product(cy, bx, t[10], t[11]);
  return detail::exact_sum_sign(t);
}

}  // namespace symbisect
