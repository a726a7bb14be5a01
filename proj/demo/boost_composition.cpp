// Two successive boosts are a boost followed by a rotation: B(u)B(v) equals
// B(u + v) Gyr[u,v], and the composite velocity depends on the order.

#include <cstdio>

#include "gyro/gyro.hpp"

namespace {

void print(const char* label, const gyro::Mat4& m) {
  std::printf("%s\n", label);
  for (std::size_t r = 0; r < 4; ++r)
    std::printf("  %12.8f %12.8f %12.8f %12.8f\n", m(r, 0), m(r, 1), m(r, 2), m(r, 3));
}

}  // namespace

int main() {
  const gyro::Ball ball;
  const auto u = ball.vec(0.7, 0.2, 0.0);
  const auto v = ball.vec(0.1, 0.6, 0.3);
  const auto uv = gyro::einstein_add(u, v);
  const auto vu = gyro::einstein_add(v, u);

  std::printf("u     = (%.6f, %.6f, %.6f)\n", u.x(), u.y(), u.z());
  std::printf("v     = (%.6f, %.6f, %.6f)\n", v.x(), v.y(), v.z());
  std::printf("u + v = (%.6f, %.6f, %.6f)\n", uv.x(), uv.y(), uv.z());
  std::printf("v + u = (%.6f, %.6f, %.6f)\n", vu.x(), vu.y(), vu.z());
  std::printf("rotation angle of gyr[u,v] = %.12f\n\n", gyro::gyration_angle(u, v));

  print("B(u) B(v)", gyro::Boost4(u).matrix() * gyro::Boost4(v).matrix());
  print("B(u + v)", gyro::Boost4(uv).matrix());

  const auto res = gyro::boost_composition_check(u, v);
  std::printf("\n|B(u)B(v) - B(u+v) Gyr[u,v]| = %.3e\n", res.left);
  std::printf("|B(u)B(v) - Gyr[u,v] B(v+u)| = %.3e\n", res.right);
  std::printf("distance from a pure boost    = %.6f\n", gyro::boost_non_closure(u, v));
  return 0;
}
