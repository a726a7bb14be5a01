#pragma once

// Gyrations gyr[u,v] of the Einstein gyrogroup, computed three independent
// ways (definitional, explicit closed form, Omega-matrix form), and the
// Thomas precession angle they rotate by.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "gyro/ball_core.hpp"
#include "gyro/errors.hpp"
#include "gyro/linalg.hpp"

namespace gyro {

/// A proper rotation of R^3. Library code only ever produces gyrations, so
/// the invariants are reported (residual functions) rather than enforced.
class Rotation3 {
 public:
  Rotation3() : m_(Mat3::identity()) {}
  explicit Rotation3(const Mat3& m) : m_(m) {}

  static Rotation3 identity() { return Rotation3(); }

  const Mat3& matrix() const { return m_; }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  Vec3 apply(const Vec3& w) const { return m_ * w; }
  Vec3 operator*(const Vec3& w) const { return m_ * w; }
  Rotation3 operator*(const Rotation3& o) const { return Rotation3(m_ * o.m_); }

  Rotation3 inverse() const { return Rotation3(m_.transposed()); }

  double determinant() const { return gyro::determinant(m_); }

  /// max |M^T M - I|
  double orthogonality_residual() const { return max_abs_diff(m_.transposed() * m_, Mat3::identity()); }

  /// max |M^3 - tr(M) M^2 + tr(M) M - I|
  double trace_identity_residual() const {
    const double tr = m_.trace();
    const Mat3 m2 = m_ * m_;
    const Mat3 m3 = m2 * m_;
    return max_abs(m3 - tr * m2 + tr * m_ - Mat3::identity());
  }

 private:
  Mat3 m_;
};

/// Omega(a,b): the antisymmetric matrix with Omega x = (a x b) x x.
class OmegaMatrix {
 public:
  OmegaMatrix(const Vec3& a, const Vec3& b) : a_(a), b_(b), omega_(cross(a, b)), m_(cross_matrix(omega_)) {}

  const Mat3& matrix() const { return m_; }
  const Vec3& a() const { return a_; }
  const Vec3& b() const { return b_; }
  /// omega = a x b
  const Vec3& generator() const { return omega_; }

  Vec3 operator*(const Vec3& x) const { return m_ * x; }

 private:
  Vec3 a_;
  Vec3 b_;
  Vec3 omega_;
  Mat3 m_;
};

/// gyr[u,v]w = -(u+v) + (u + (v + w)), using Einstein addition only.
inline BallVec gyr_definitional(const BallVec& u, const BallVec& v, const BallVec& w) {
  require_same_radius(u, v);
  require_same_radius(u, w);
  return einstein_add(-einstein_add(u, v), einstein_add(u, einstein_add(v, w)));
}

/// The explicit vector-algebra form w -> w + (A u + B v)/D as a matrix.
/// Acts on all of R^3, not just the ball.
inline Rotation3 gyr_closed_form(const BallVec& u, const BallVec& v) {
  const auto t = detail::gyration_terms(u, v);
  if (t.trivial) return Rotation3::identity();
  const Vec3& a = u.vec();
  const Vec3& b = v.vec();
  Mat3 m = outer(a, t.au * a + t.av * b) + outer(b, t.bu * a + t.bv * b);
  m *= 1.0 / t.d;
  return Rotation3(Mat3::identity() + m);
}

/// Same map as gyr_closed_form, applied directly to a vector.
inline Vec3 gyr_apply(const BallVec& u, const BallVec& v, const Vec3& w) {
  return detail::apply_gyration_terms(detail::gyration_terms(u, v), u.vec(), v.vec(), w);
}

struct AlphaBeta {
  double alpha{0.0};
  double beta{0.0};
};

/// Coefficients of gyr[u,v] = I + alpha Omega + beta Omega^2; alpha < 0 < beta.
inline AlphaBeta alpha_beta(const BallVec& u, const BallVec& v) {
  require_same_radius(u, v);
  const double c2 = u.radius() * u.radius();
  const double gu = gamma(u).value;
  const double gv = gamma(v).value;
  const double guv = gamma_identity(u, v).value;
  const double den = (1.0 + gu) * (1.0 + gv) * (1.0 + guv);
  return {-gu * gv * (1.0 + gu + gv + guv) / (den * c2), gu * gu * gv * gv / (den * c2 * c2)};
}

/// alpha^2 + [u^2 v^2 - (u.v)^2] beta^2 - 2 beta, which vanishes identically.
/// Returned relative to 2 beta so the residual is scale free.
inline double alpha_beta_constraint_residual(const BallVec& u, const BallVec& v) {
  const auto [alpha, beta] = alpha_beta(u, v);
  const double w2 = norm_squared(cross(u.vec(), v.vec()));
  return std::abs(alpha * alpha + w2 * beta * beta - 2.0 * beta) / (2.0 * beta);
}

inline Rotation3 gyr_matrix_form(const BallVec& u, const BallVec& v) {
  if (detail::parallel_or_zero(u.vec(), v.vec())) {
    require_same_radius(u, v);
    return Rotation3::identity();
  }
  const auto [alpha, beta] = alpha_beta(u, v);
  const OmegaMatrix omega(u.vec(), v.vec());
  const Mat3& o = omega.matrix();
  return Rotation3(Mat3::identity() + alpha * o + beta * (o * o));
}

/// Rotation through `angle` about the unit vector `axis` (right-hand rule):
/// I + sin(angle) K + (1 - cos(angle)) K^2 with K the cross matrix of axis.
inline Rotation3 rotation_about_axis(const Vec3& axis, double angle) {
  const Mat3 k = cross_matrix(normalized(axis));
  return Rotation3(Mat3::identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k));
}

/// Signed angle in (-pi, pi] by which R turns the plane orthogonal to `axis`.
inline double rotation_angle_about_axis(const Rotation3& r, const Vec3& axis, double tol = 1e-10) {
  const double n = norm(axis);
  if (!(n > 0.0)) throw ZeroVector("rotation axis must be nonzero");
  const Vec3 a = axis / n;
  if (max_abs_diff(r * a, a) > tol) throw AxisNotFixed("rotation does not fix the given axis");

  // Pick the basis vector least aligned with the axis to build p perpendicular to it.
  Vec3 e{1.0, 0.0, 0.0};
  if (std::abs(a.y) <= std::abs(a.x) && std::abs(a.y) <= std::abs(a.z)) e = {0.0, 1.0, 0.0};
  else if (std::abs(a.z) <= std::abs(a.x) && std::abs(a.z) <= std::abs(a.y)) e = {0.0, 0.0, 1.0};
  const Vec3 p = normalized(cross(a, e));
  const Vec3 q = cross(a, p);
  const Vec3 rp = r * p;
  return std::atan2(dot(rp, q), dot(rp, p));
}

struct CosSin {
  double cos{1.0};
  double sin{0.0};

  double angle() const { return std::atan2(sin, cos); }
};

/// Thomas precession angle epsilon from its generating angle theta and the
/// velocity parameter k > 1:
///   cos e = ((k + cos t)^2 - sin^2 t) / ((k + cos t)^2 + sin^2 t)
///   sin e = -2 (k + cos t) sin t / ((k + cos t)^2 + sin^2 t)
inline CosSin precession_from_k(double k, double cos_theta, double sin_theta) {
  const double p = k + cos_theta;
  const double den = p * p + sin_theta * sin_theta;
  return {(p * p - sin_theta * sin_theta) / den, -2.0 * p * sin_theta / den};
}

/// Half angle of epsilon with cos(e/2) > 0 and sin(e/2) opposite in sign to sin(theta).
inline CosSin half_precession_from_k(double k, double cos_theta, double sin_theta) {
  const double p = k + cos_theta;
  const double r = std::sqrt(p * p + sin_theta * sin_theta);
  return {p / r, -sin_theta / r};
}

/// k^2 = ((g_u + 1)/(g_u - 1)) ((g_v + 1)/(g_v - 1)), written as
/// (g_u + 1)(g_v + 1)/(g_u g_v b_u b_v) which stays accurate at low speed.
inline double velocity_parameter(const BallVec& u, const BallVec& v) {
  require_same_radius(u, v);
  const double gu = gamma(u).value;
  const double gv = gamma(v).value;
  return (gu + 1.0) * (gv + 1.0) / (gamma_beta(u) * gamma_beta(v));
}

/// Same angle from the gamma factors directly:
///   cos e = 1 - (g_u-1)(g_v-1) sin^2 t / (1 + g_u g_v + s_u s_v cos t)
///   sin e = -(g_u-1)(g_v-1)(k + cos t) sin t / (1 + g_u g_v + s_u s_v cos t)
/// with s = sqrt(g^2 - 1). `gm1_*` are gamma - 1.
inline CosSin precession_from_gammas(double gm1_u, double gm1_v, double k, double cos_theta, double sin_theta) {
  const double gu = 1.0 + gm1_u;
  const double gv = 1.0 + gm1_v;
  const double su = std::sqrt(gm1_u * (gu + 1.0));
  const double sv = std::sqrt(gm1_v * (gv + 1.0));
  const double den = 1.0 + gu * gv + su * sv * cos_theta;
  const double prod = gm1_u * gm1_v;
  return {1.0 - prod * sin_theta * sin_theta / den, -prod * (k + cos_theta) * sin_theta / den};
}

/// Equal-speed specialisation (g_u = g_v = g).
inline CosSin precession_equal_speed(double gm1, double cos_theta, double sin_theta) {
  const double g = 1.0 + gm1;
  const double g2m1 = gm1 * (g + 1.0);
  const double den = (g * g + 1.0) + g2m1 * cos_theta;
  return {1.0 - gm1 * gm1 * sin_theta * sin_theta / den, -(g2m1 + gm1 * gm1 * cos_theta) / den * sin_theta};
}

/// 1 + cos e expressed through the three gamma factors; always > 0.
inline double mcfarlane_one_plus_cos(double gu, double gv, double guv) {
  const double s = 1.0 + gu + gv + guv;
  return s * s / ((1.0 + gu) * (1.0 + gv) * (1.0 + guv));
}

/// tan^2(angle(gyr[u,v])/2) from the three gamma factors.
inline double tan2_half_from_gammas(double gu, double gv, double guv) {
  const double s = 1.0 + gu + gv + guv;
  return (1.0 + 2.0 * gu * gv * guv - gu * gu - gv * gv - guv * guv) / (s * s);
}

struct PrecessionAngles {
  double theta{0.0};        ///< generating angle, signed, (-pi, pi]
  double epsilon{0.0};      ///< Thomas precession angle, signed, (-pi, pi)
  double k{0.0};            ///< velocity parameter, > 1
  double omega_theta{0.0};  ///< |u||v| sin(theta), same sign as sin(theta)
  double cos_eps{1.0};
  double sin_eps{0.0};
  double cos_half{1.0};
  double sin_half{0.0};
  Vec3 normal{0.0, 0.0, 1.0};  ///< orientation the signs refer to
  bool degenerate{false};      ///< sin(theta) = 0, epsilon reported as 0
};

namespace detail {

struct OrientedTheta {
  double cos_theta{1.0};
  double sin_theta{0.0};
  Vec3 normal{0.0, 0.0, 1.0};
};

inline OrientedTheta oriented_theta(const BallVec& u, const BallVec& v, const std::optional<Vec3>& reference) {
  require_same_radius(u, v);
  if (u.is_zero() || v.is_zero()) throw ZeroVector("generating angle is undefined for a zero velocity");
  const Vec3 uh = normalized(u.vec());
  const Vec3 vh = normalized(v.vec());
  const Vec3 w = cross(uh, vh);
  const double wn = norm(w);
  OrientedTheta o;
  o.cos_theta = dot(uh, vh);
  if (wn <= kParallelThreshold) {
    o.sin_theta = 0.0;
    o.cos_theta = o.cos_theta >= 0.0 ? 1.0 : -1.0;
    if (reference) o.normal = normalized(*reference);
    return o;
  }
  if (!reference) {
    o.sin_theta = wn;
    o.normal = w / wn;
    return o;
  }
  o.normal = normalized(*reference);
  const double side = dot(w, o.normal);
  if (side == 0.0) throw std::invalid_argument("reference normal lies in the plane of u and v");
  o.sin_theta = side > 0.0 ? wn : -wn;
  return o;
}

}  // namespace detail

/// Generating angle theta, velocity parameter k and Thomas precession angle
/// epsilon for gyr[u,v]. Signs refer to `reference_normal` when given
/// (counterclockwise positive seen from its tip); otherwise to unit(u x v),
/// in which case theta is in [0, pi] and epsilon <= 0.
inline PrecessionAngles precession_angles(const BallVec& u, const BallVec& v,
                                          const std::optional<Vec3>& reference_normal = std::nullopt) {
  const auto o = detail::oriented_theta(u, v, reference_normal);
  PrecessionAngles p;
  p.normal = o.normal;
  p.theta = std::atan2(o.sin_theta, o.cos_theta);
  p.k = velocity_parameter(u, v);
  p.omega_theta = u.norm() * v.norm() * o.sin_theta;
  p.degenerate = o.sin_theta == 0.0;
  const CosSin e = precession_from_k(p.k, o.cos_theta, o.sin_theta);
  const CosSin h = half_precession_from_k(p.k, o.cos_theta, o.sin_theta);
  p.cos_eps = e.cos;
  p.sin_eps = e.sin;
  p.cos_half = h.cos;
  p.sin_half = h.sin;
  p.epsilon = p.degenerate ? 0.0 : e.angle();
  return p;
}

/// Thomas angle from the gamma factors,
///   cos e = 1 - (g_u-1)(g_v-1) sin^2 t / (g_{u+v} + 1)
///   sin e = -(s_u s_v + (g_u-1)(g_v-1) cos t) sin t / (g_{u+v} + 1),
/// with g_{u+v} = g_u g_v + s_u s_v cos t rebuilt from theta.
inline CosSin angle_from_gammas(const BallVec& u, const BallVec& v,
                                const std::optional<Vec3>& reference_normal = std::nullopt) {
  const auto o = detail::oriented_theta(u, v, reference_normal);
  const double gu = gamma(u).value;
  const double gv = gamma(v).value;
  const double su = gamma_beta(u);
  const double sv = gamma_beta(v);
  const double prod = gamma_minus_one(u) * gamma_minus_one(v);
  const double guv = gu * gv + su * sv * o.cos_theta;
  return {1.0 - prod * o.sin_theta * o.sin_theta / (guv + 1.0),
          -(su * sv + prod * o.cos_theta) * o.sin_theta / (guv + 1.0)};
}

/// Signed rotation angle of gyr[u,v] about unit(u x v); 0 when trivial.
inline double gyration_angle(const BallVec& u, const BallVec& v) {
  if (detail::parallel_or_zero(u.vec(), v.vec())) return 0.0;
  return rotation_angle_about_axis(gyr_closed_form(u, v), cross(u.vec(), v.vec()));
}

}  // namespace gyro
