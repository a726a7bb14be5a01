#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gyro/ball_core.hpp"

namespace gyro {

/// Deterministic sampler of ball velocities: uniform direction on the sphere,
/// speed uniform in [0, max_fraction * c].
class BallSampler {
 public:
  BallSampler(const Ball& ball, double max_fraction, std::uint64_t seed)
      : ball_(ball), max_fraction_(max_fraction), rng_(seed) {}

  Vec3 direction() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  BallVec velocity() { return ball_.vec(uniform(0.0, max_fraction_ * ball_.radius()) * direction()); }

  /// Velocity in the z = 0 plane.
  BallVec planar_velocity() {
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double s = uniform(0.0, max_fraction_ * ball_.radius());
    return ball_.vec(s * std::cos(phi), s * std::sin(phi), 0.0);
  }

  /// Unrestricted vector of norm up to `scale`, for maps that act on all of R^3.
  Vec3 free_vector(double scale) { return uniform(0.0, scale) * direction(); }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  const Ball& ball() const { return ball_; }

 private:
  Ball ball_;
  double max_fraction_;
  std::mt19937_64 rng_;
};

}  // namespace gyro
