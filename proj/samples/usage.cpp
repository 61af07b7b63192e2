// Minimal library use: build the corner-cut hexagon, find its best center
// chord and ask the certificate about it.
#include <cstdio>

#include "symbisect/symbisect.hpp"

int main() {
  using namespace symbisect;
  const ConvexBody hex = gen::cut_corner_hexagon(8.0, 2.34);
  const SweepResult sweep = sweep_minimize(hex);
  const ChordBisection best = chord_at_angle(hex, sweep.best_theta);
  const Certificate cert = certify_theorem(best);
  std::printf("theta=%.9f d_M=%.6f verdict=%s\n", sweep.best_theta, sweep.best_value, to_string(cert.verdict));

  const ConvexBody sq = gen::square(1.0);
  for (const ChordBisection& c : standard_bisections(sq).chords) {
    std::printf("square standard chord theta=%.6f d_M=%.6f %s\n", c.theta(), dM_chord_eq2(c),
                to_string(certify_theorem(c).verdict));
  }
  return 0;
}
