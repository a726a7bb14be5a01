#pragma once

// Einstein velocity addition on the open c-ball: the algebraic substrate of
// every other header. Values are immutable; all functions are pure.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gyro/errors.hpp"
#include "gyro/linalg.hpp"

namespace gyro {

/// Relative margin kept between a constructed velocity and the ball boundary.
inline constexpr double kBoundaryMargin = 1e-15;

/// u and v are treated as parallel when |u x v| <= kParallelThreshold |u||v|.
inline constexpr double kParallelThreshold = 1e-14;

class Ball;

/// A relativistically admissible velocity: a 3-vector of norm < c.
///
/// The radius travels with the value so that mixing balls is detected at the
/// call site instead of silently producing nonsense.
class BallVec {
 public:
  /// Wraps a vector without validation. Results of library operations are
  /// built this way; gamma() re-checks the ball condition before any
  /// division by sqrt(1 - v^2/c^2).
  static BallVec trusted(const Vec3& v, double c) { return BallVec(v, c); }

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  double radius() const { return c_; }
  double norm() const { return gyro::norm(v_); }
  bool is_zero() const { return v_.x == 0.0 && v_.y == 0.0 && v_.z == 0.0; }

  /// Einstein negation: the inverse of v is -v.
  BallVec operator-() const { return BallVec(-v_, c_); }

  friend bool operator==(const BallVec&, const BallVec&) = default;

 private:
  friend class Ball;
  BallVec(const Vec3& v, double c) : v_(v), c_(c) {}

  Vec3 v_;
  double c_;
};

/// The c-ball itself. This is the context object that owns the radius and
/// validates every velocity entering the library.
class Ball {
 public:
  explicit Ball(double c = 1.0) : c_(c) {
    if (!(std::isfinite(c) && c > 0.0)) throw std::invalid_argument("ball radius must be positive and finite");
  }

  double radius() const { return c_; }

  bool contains(const Vec3& v) const {
    return is_finite(v) && gyro::norm(v) < c_ * (1.0 - kBoundaryMargin);
  }

  BallVec vec(const Vec3& v) const {
    if (!contains(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "velocity " << v << " is not inside the ball of radius " << c_;
      throw OutOfBall(msg.str());
    }
    return BallVec(v, c_);
  }
  BallVec vec(double x, double y, double z) const { return vec(Vec3{x, y, z}); }
  BallVec zero() const { return BallVec(Vec3{}, c_); }

 private:
  double c_;
};

inline void require_same_radius(const BallVec& u, const BallVec& v) {
  if (u.radius() != v.radius()) throw MixedRadius("operands belong to balls of different radius");
}

/// Lorentz factor, always >= 1.
struct Gamma {
  double value{1.0};
  friend auto operator<=>(const Gamma&, const Gamma&) = default;
};

inline Gamma gamma(const BallVec& v) {
  const double c = v.radius();
  const double s = v.norm();
  if (!(std::isfinite(s) && s < c)) throw OutOfBall("gamma factor requested for a velocity outside the ball");
  const double beta = s / c;
  return Gamma{1.0 / std::sqrt((1.0 - beta) * (1.0 + beta))};
}

/// gamma - 1 without the cancellation of the naive subtraction at small speed.
inline double gamma_minus_one(const BallVec& v) {
  const double g = gamma(v).value;
  const double beta2 = norm_squared(v.vec()) / (v.radius() * v.radius());
  return g * g * beta2 / (g + 1.0);
}

/// sqrt(gamma^2 - 1) = gamma |v| / c.
inline double gamma_beta(const BallVec& v) { return gamma(v).value * v.norm() / v.radius(); }

/// u + v, relativistic: the Einstein sum.
inline BallVec einstein_add(const BallVec& u, const BallVec& v) {
  require_same_radius(u, v);
  const double c2 = u.radius() * u.radius();
  const double gu = gamma(u).value;
  (void)gamma(v);
  const double uv = dot(u.vec(), v.vec()) / c2;
  const Vec3 num = u.vec() + v.vec() / gu + (gu / (1.0 + gu)) * uv * u.vec();
  return BallVec::trusted(num / (1.0 + uv), u.radius());
}

/// u - v := u + (-v).
inline BallVec einstein_sub(const BallVec& u, const BallVec& v) { return einstein_add(u, -v); }

/// gamma_u gamma_v (1 + u.v/c^2), which equals gamma(u + v).
inline Gamma gamma_identity(const BallVec& u, const BallVec& v) {
  require_same_radius(u, v);
  const double c2 = u.radius() * u.radius();
  return Gamma{gamma(u).value * gamma(v).value * (1.0 + dot(u.vec(), v.vec()) / c2)};
}

/// r (x) v = c tanh(r atanh(|v|/c)) v/|v|, with r (x) 0 = 0.
inline BallVec scalar_mul(double r, const BallVec& v) {
  if (v.is_zero()) return v;
  const double c = v.radius();
  const double n = v.norm();
  // tanh saturates to 1 for large |r|; keep the result strictly inside.
  const double lim = 1.0 - kBoundaryMargin;
  const double t = std::clamp(std::tanh(r * std::atanh(n / c)), -lim, lim);
  return BallVec::trusted((c * t / n) * v.vec(), c);
}

/// Einstein sum of two collinear speeds (signed magnitudes along a line).
inline double einstein_add_speeds(double a, double b, double c) { return (a + b) / (1.0 + a * b / (c * c)); }

namespace detail {

/// Coefficients of the explicit gyration formula
///   gyr[u,v]w = w + (A u + B v) / D,
///   A = au (u.w) + av (v.w),  B = bu (u.w) + bv (v.w),  D = gamma(u+v) + 1.
struct GyrationTerms {
  double au{0.0};
  double av{0.0};
  double bu{0.0};
  double bv{0.0};
  double d{2.0};
  bool trivial{true};
};

inline bool parallel_or_zero(const Vec3& u, const Vec3& v) {
  return norm(cross(u, v)) <= kParallelThreshold * norm(u) * norm(v);
}

inline GyrationTerms gyration_terms(const BallVec& u, const BallVec& v) {
  require_same_radius(u, v);
  const double c2 = u.radius() * u.radius();
  const double gu = gamma(u).value;
  const double gv = gamma(v).value;
  GyrationTerms t;
  if (parallel_or_zero(u.vec(), v.vec())) return t;
  const double uv = dot(u.vec(), v.vec());
  t.trivial = false;
  t.au = -(gu * gu / (gu + 1.0)) * gamma_minus_one(v) / c2;
  t.av = gu * gv / c2 + 2.0 * gu * gu * gv * gv / ((gu + 1.0) * (gv + 1.0)) * uv / (c2 * c2);
  t.bu = -gu * gv / c2;
  t.bv = -(gv / (gv + 1.0)) * gamma_minus_one(u) * gv / c2;
  t.d = gu * gv * (1.0 + uv / c2) + 1.0;
  return t;
}

inline Vec3 apply_gyration_terms(const GyrationTerms& t, const Vec3& u, const Vec3& v, const Vec3& w) {
  if (t.trivial) return w;
  const double uw = dot(u, w);
  const double vw = dot(v, w);
  const double a = t.au * uw + t.av * vw;
  const double b = t.bu * uw + t.bv * vw;
  return w + (a * u + b * v) / t.d;
}

}  // namespace detail

/// u [+] v := u + gyr[u, -v] v. Commutative.
inline BallVec coadd(const BallVec& u, const BallVec& v) {
  require_same_radius(u, v);
  const BallVec mv = -v;
  const auto terms = detail::gyration_terms(u, mv);
  const Vec3 rotated = detail::apply_gyration_terms(terms, u.vec(), mv.vec(), v.vec());
  return einstein_add(u, BallVec::trusted(rotated, u.radius()));
}

/// u [-] v := u [+] (-v).
inline BallVec cosub(const BallVec& u, const BallVec& v) { return coadd(u, -v); }

}  // namespace gyro
