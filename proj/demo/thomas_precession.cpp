// Thomas precession of two equal-speed velocities at right angles, and its
// accumulation around polygonal orbits that approach a circle.

#include <cstdio>
#include <numbers>

#include "gyro/gyro.hpp"

int main() {
  const gyro::Ball ball;
  const auto u = ball.vec(0.6, 0.0, 0.0);
  const auto v = ball.vec(0.0, 0.6, 0.0);
  const auto p = gyro::precession_angles(u, v);
  std::printf("u = (0.6, 0, 0), v = (0, 0.6, 0)\n");
  std::printf("  theta = %.12f  k = %.12f\n", p.theta, p.k);
  std::printf("  cos eps = %.15f (40/41 = %.15f)\n", p.cos_eps, 40.0 / 41.0);
  std::printf("  sin eps = %.15f (-9/41 = %.15f)\n", p.sin_eps, -9.0 / 41.0);

  std::printf("\norbit speed 0.6c\n%10s %22s %22s\n", "sides", "n eps_n", "gap to limit");
  for (long n : {3L, 10L, 100L, 1000L, 100000L}) {
    const auto r = gyro::total_precession({0.6, n, 1.0});
    std::printf("%10ld %22.15f %22.3e\n", n, r.total, r.gap());
  }
  std::printf("limit -2 pi (g-1)/g = %.15f\n", gyro::circular_orbit_precession(0.6));

  std::printf("\nThomas prefactor g/(1+g)\n");
  for (double s : {1e-4, 0.1, 0.5, 0.9, 0.99})
    std::printf("  v = %-6g %.12f\n", s, gyro::thomas_frequency(s, 1.0).prefactor);
  return 0;
}
