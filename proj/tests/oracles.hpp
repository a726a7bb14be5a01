#pragma once

// Reference computations written independently of the library: plain
// std::array arithmetic, textbook forms, no calls into gyro:: formulas.

#include <array>
#include <cmath>
#include <numbers>

namespace oracle {

using V3 = std::array<double, 3>;
using M3 = std::array<std::array<double, 3>, 3>;

inline double dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const V3& a) { return std::sqrt(dot(a, a)); }
inline V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double gamma(const V3& v, double c = 1.0) { return 1.0 / std::sqrt(1.0 - dot(v, v) / (c * c)); }

/// Relativistic sum of collinear speeds.
inline double collinear_add(double a, double b, double c = 1.0) { return (a + b) / (1.0 + a * b / (c * c)); }

/// Velocity composition written out component by component from the
/// standard formula u+v = [u + v/g + (g/(1+g)) (u.v/c^2) u] / (1 + u.v/c^2).
inline V3 add(const V3& u, const V3& v, double c = 1.0) {
  const double g = gamma(u, c);
  const double uv = dot(u, v) / (c * c);
  V3 r{};
  for (int i = 0; i < 3; ++i) r[i] = (u[i] + v[i] / g + g / (1.0 + g) * uv * u[i]) / (1.0 + uv);
  return r;
}

inline V3 neg(const V3& a) { return {-a[0], -a[1], -a[2]}; }

/// r (x) v through the rapidity: |r (x) v| = c tanh(r artanh(|v|/c)).
inline V3 scale(double r, const V3& v, double c = 1.0) {
  const double n = norm(v);
  if (n == 0.0) return {0.0, 0.0, 0.0};
  const double s = c * std::tanh(r * std::atanh(n / c)) / n;
  return {s * v[0], s * v[1], s * v[2]};
}

/// The commutative coaddition as a gamma-weighted mean doubled:
/// u [+] v = 2 (x) (g_u u + g_v v)/(g_u + g_v).
inline V3 coadd(const V3& u, const V3& v, double c = 1.0) {
  const double gu = gamma(u, c);
  const double gv = gamma(v, c);
  const V3 m{(gu * u[0] + gv * v[0]) / (gu + gv), (gu * u[1] + gv * v[1]) / (gu + gv), (gu * u[2] + gv * v[2]) / (gu + gv)};
  return scale(2.0, m, c);
}

/// Rotation by `angle` about unit `axis` (Rodrigues).
inline M3 rodrigues(V3 axis, double angle) {
  const double n = norm(axis);
  for (double& a : axis) a /= n;
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  const double x = axis[0], y = axis[1], z = axis[2];
  return {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
           {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
           {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

/// Thomas angle of two equal-speed velocities at right angles, exactly:
/// for gamma = 5/4 the rotation has cos = 40/41 and sin = -9/41.
inline constexpr double kCos40_41 = 40.0 / 41.0;
inline constexpr double kSin9_41 = -9.0 / 41.0;

/// Beltrami-Klein disc metric at (x1, x2), written as g_ij = c^2 [(c^2 - r^2) d_ij + x_i x_j] / (c^2 - r^2)^2.
inline std::array<double, 3> klein_metric(double x1, double x2, double c = 1.0) {
  const double c2 = c * c;
  const double q = c2 - x1 * x1 - x2 * x2;
  const double d = q * q;
  return {c2 * (q + x1 * x1) / d, c2 * x1 * x2 / d, c2 * (q + x2 * x2) / d};
}

/// Boost along x by speed s in the (t, x) block: [[g, g s/c^2], [g s, g]].
inline std::array<double, 4> boost_x_first_row(double s, double c = 1.0) {
  const double g = 1.0 / std::sqrt(1.0 - s * s / (c * c));
  return {g, g * s / (c * c), 0.0, 0.0};
}

}  // namespace oracle
