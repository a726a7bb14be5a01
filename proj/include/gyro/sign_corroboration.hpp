#pragma once

// Planar corroboration that the Thomas precession angle and its generating
// angle have opposite signs: rotate u through theta to get v, then compare
// gyr[u, v] w against a planar rotation of w through epsilon.

#include <cmath>
#include <optional>

#include "gyro/ball_core.hpp"
#include "gyro/errors.hpp"
#include "gyro/gyration.hpp"

namespace gyro {

/// |sin theta| at or below this is treated as theta in {0, pi}.
inline constexpr double kDegenerateSine = 1e-14;

/// v = ratio |u| R(theta) u/|u|, with R the counterclockwise rotation of the z = 0 plane.
inline BallVec rotate_in_plane(const BallVec& u, double theta, double speed_ratio) {
  if (u.z() != 0.0) throw OutOfPlane("planar rotation needs u in the z = 0 plane");
  if (u.is_zero()) throw ZeroVector("cannot rotate the zero velocity to a prescribed angle");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vec3 dir = normalized(u.vec());
  const Vec3 rotated{c * dir.x - s * dir.y, s * dir.x + c * dir.y, 0.0};
  return Ball(u.radius()).vec(speed_ratio * u.norm() * rotated);
}

/// Planar rotation by angle about +z; z components pass through.
inline Vec3 planar_rotation(double angle, const Vec3& w) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * w.x - s * w.y, s * w.x + c * w.y, w.z};
}

struct SignCheckReport {
  double theta{0.0};
  double epsilon{0.0};
  double cos_eps{1.0};
  double sin_eps{0.0};
  double residual{0.0};                ///< max |gyr[u,v] w - R(eps) w|
  std::optional<bool> opposite_signs;  ///< empty when sin theta = 0
  bool degenerate{false};
  BallVec v = Ball{}.zero();           ///< the rotated partner of u
};

/// Left side from the gyration matrix of (u, rotate_in_plane(u, theta, ratio));
/// right side from epsilon given by the gamma-factor formula in theta.
inline SignCheckReport sign_check(const BallVec& u, double theta, double speed_ratio, const BallVec& w) {
  require_same_radius(u, w);
  SignCheckReport r;
  r.theta = theta;
  r.v = rotate_in_plane(u, theta, speed_ratio);

  const double sin_t = std::sin(theta);
  r.degenerate = std::abs(sin_t) <= kDegenerateSine;
  if (!r.degenerate) {
    const CosSin e = precession_from_gammas(gamma_minus_one(u), gamma_minus_one(r.v), velocity_parameter(u, r.v),
                                            std::cos(theta), sin_t);
    r.cos_eps = e.cos;
    r.sin_eps = e.sin;
    r.epsilon = e.angle();
    r.opposite_signs = (r.epsilon > 0.0 && sin_t < 0.0) || (r.epsilon < 0.0 && sin_t > 0.0);
  }

  const Vec3 lhs = gyr_closed_form(u, r.v) * w.vec();
  const Vec3 rhs = planar_rotation(r.epsilon, w.vec());
  r.residual = max_abs_diff(lhs, rhs);
  return r;
}

}  // namespace gyro
