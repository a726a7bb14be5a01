#pragma once

// Thomas precession along a regular n-gon orbit of uniform speed, its
// circular limit, and the Thomas precession angular velocity.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "gyro/ball_core.hpp"
#include "gyro/errors.hpp"
#include "gyro/gyration.hpp"

namespace gyro {

struct OrbitConfig {
  double speed{0.5};
  std::int64_t sides{3};
  double c{1.0};

  double turn_angle() const { return 2.0 * std::numbers::pi / static_cast<double>(sides); }

  void validate() const {
    if (!(std::isfinite(c) && c > 0.0)) throw BadOrbit("ball radius must be positive");
    if (sides < 3) throw BadOrbit("a polygonal orbit needs at least 3 sides");
    if (!(speed > 0.0 && speed < c * (1.0 - kBoundaryMargin))) throw BadOrbit("orbital speed must lie in (0, c)");
  }
};

namespace detail {

inline void require_orbital_speed(double speed, double c) { OrbitConfig{speed, 3, c}.validate(); }

/// gamma - 1 and gamma for a scalar speed.
inline std::pair<double, double> speed_gammas(double speed, double c) {
  const BallVec v = Ball(c).vec(speed, 0.0, 0.0);
  return {gamma_minus_one(v), gamma(v).value};
}

}  // namespace detail

/// Precession angle per corner for turn angle 2 pi / n at uniform speed.
inline double corner_precession(double speed, std::int64_t n, double c = 1.0) {
  const OrbitConfig cfg{speed, n, c};
  cfg.validate();
  const auto [gm1, g] = detail::speed_gammas(speed, c);
  const double th = cfg.turn_angle();
  return precession_equal_speed(gm1, std::cos(th), std::sin(th)).angle();
}

/// f(phi) with e^{i eps_n} = 1 + f(2 pi / n):
///   f = -[(g-1)^2 sin p + i((g^2-1) + (g-1)^2 cos p)] sin p / (2 + (g^2-1)(1 + cos p)).
inline std::complex<double> precession_increment(double speed, double phi, double c = 1.0) {
  detail::require_orbital_speed(speed, c);
  const auto [gm1, g] = detail::speed_gammas(speed, c);
  const double g2m1 = gm1 * (g + 1.0);
  const double s = std::sin(phi);
  const double co = std::cos(phi);
  const std::complex<double> num(gm1 * gm1 * s, g2m1 + gm1 * gm1 * co);
  return -num * s / (2.0 + g2m1 * (1.0 + co));
}

/// f'(0) = -i (g-1)/g.
inline std::complex<double> precession_increment_slope(double speed, double c = 1.0) {
  detail::require_orbital_speed(speed, c);
  const auto [gm1, g] = detail::speed_gammas(speed, c);
  return {0.0, -gm1 / g};
}

/// eps_t = -2 pi (g-1)/g: total precession over one circular orbit.
inline double circular_orbit_precession(double speed, double c = 1.0) {
  detail::require_orbital_speed(speed, c);
  const auto [gm1, g] = detail::speed_gammas(speed, c);
  return -2.0 * std::numbers::pi * gm1 / g;
}

struct PrecessionResult {
  double eps_per_corner{0.0};
  double total{0.0};        ///< n eps_n, unwrapped
  double limit{0.0};        ///< eps_t
  double omega_ratio{0.0};  ///< omega_t / omega = -(g-1)/g
  std::complex<double> phase{1.0, 0.0};  ///< (1 + f(2 pi/n))^n, accumulated corner by corner
  std::int64_t sides{0};

  double gap() const { return std::abs(total - limit); }
};

/// Walks the n corners of the polygon, multiplying the unit phase of each
/// corner into the running product and summing the per-corner arguments.
inline PrecessionResult total_precession(const OrbitConfig& cfg) {
  cfg.validate();
  const auto [gm1, g] = detail::speed_gammas(cfg.speed, cfg.c);
  const std::complex<double> corner = 1.0 + precession_increment(cfg.speed, cfg.turn_angle(), cfg.c);
  const double step = std::arg(corner);

  PrecessionResult r;
  r.sides = cfg.sides;
  r.eps_per_corner = corner_precession(cfg.speed, cfg.sides, cfg.c);
  double total = 0.0;
  std::complex<double> phase{1.0, 0.0};
  for (std::int64_t i = 0; i < cfg.sides; ++i) {
    phase *= corner;
    total += step;
  }
  r.total = total;
  r.phase = phase;
  r.limit = -2.0 * std::numbers::pi * gm1 / g;
  r.omega_ratio = -gm1 / g;
  return r;
}

/// Thomas precession angular velocity for uniform circular motion with
/// speed v and centripetal acceleration a (omega = a / v).
struct ThomasFrequency {
  double speed{0.0};
  double accel{0.0};
  double c{1.0};
  double omega{0.0};      ///< a / v
  double omega_t{0.0};    ///< -((g-1)/g) a / v
  double prefactor{0.5};  ///< g / (1 + g), the Thomas half at low speed

  /// omega_t = (g/(1+g)) (a x v)/c^2 for the given directions of velocity and
  /// acceleration (normalized internally, expected perpendicular).
  Vec3 vector(const Vec3& velocity_direction, const Vec3& accel_direction) const {
    if (accel == 0.0) return {};
    const Vec3 v = speed * normalized(velocity_direction);
    const Vec3 a = accel * normalized(accel_direction);
    return prefactor * cross(a, v) / (c * c);
  }
};

inline ThomasFrequency thomas_frequency(double speed, double accel, double c = 1.0) {
  detail::require_orbital_speed(speed, c);
  if (!(std::isfinite(accel) && accel >= 0.0)) throw BadOrbit("acceleration magnitude must be nonnegative");
  const auto [gm1, g] = detail::speed_gammas(speed, c);
  ThomasFrequency f;
  f.speed = speed;
  f.accel = accel;
  f.c = c;
  f.omega = accel / speed;
  f.omega_t = -(gm1 / g) * f.omega;
  f.prefactor = g / (1.0 + g);
  return f;
}

}  // namespace gyro
