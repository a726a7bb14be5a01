#pragma once

// Beltrami-Klein ball model primitives induced by Einstein addition.

#include <algorithm>
#include <cmath>
#include <limits>

#include "gyro/ball_core.hpp"
#include "gyro/errors.hpp"
#include "gyro/gyration.hpp"

namespace gyro {

/// d(u, v) = |u - v| (Einstein subtraction).
inline double gyrodistance(const BallVec& u, const BallVec& v) { return einstein_sub(u, v).norm(); }

/// A ⊕ (⊖A ⊕ B) ⊗ t. A chord of the ball; t in [0, 1] is the gyrosegment.
inline BallVec gyroline_point(const BallVec& a, const BallVec& b, double t) {
  require_same_radius(a, b);
  if (a == b) throw CoincidentAnchors("gyroline needs two distinct anchor points");
  return einstein_add(a, scalar_mul(t, einstein_add(-a, b)));
}

class GyroLine {
 public:
  GyroLine(const BallVec& a, const BallVec& b) : a_(a), b_(b) {
    require_same_radius(a, b);
    if (a == b) throw CoincidentAnchors("gyroline needs two distinct anchor points");
  }

  const BallVec& a() const { return a_; }
  const BallVec& b() const { return b_; }

  BallVec point(double t) const { return gyroline_point(a_, b_, t); }

 private:
  BallVec a_;
  BallVec b_;
};

/// Gyromidpoint A ⊕ (⊖A ⊕ B) ⊗ 1/2.
inline BallVec gyromidpoint(const BallVec& a, const BallVec& b) {
  require_same_radius(a, b);
  return einstein_add(a, scalar_mul(0.5, einstein_add(-a, b)));
}

/// Gyromidpoint through coaddition: 1/2 ⊗ (A ⊞ B).
inline BallVec gyromidpoint_coadd(const BallVec& a, const BallVec& b) { return scalar_mul(0.5, coadd(a, b)); }

/// Euclidean line A + (-A + B) t, for comparison with gyrolines.
inline Vec3 euclidean_line_point(const Vec3& a, const Vec3& b, double t) { return a + (b - a) * t; }

inline double euclidean_distance(const Vec3& a, const Vec3& b) { return norm(b - a); }

/// |(P - A) x (B - A)| / |B - A|: Euclidean distance of P from the line AB.
inline double chord_deviation(const Vec3& a, const Vec3& b, const Vec3& p) {
  const Vec3 ab = b - a;
  return norm(cross(p - a, ab)) / norm(ab);
}

/// Radicand clamp for floating-point noise on collinear vertices.
inline constexpr double kDefectRadicandClamp = 1e-12;

/// Defect from the three side gamma factors:
///   tan(d/2) = sqrt(1 + 2 g_u g_v g_w - g_u^2 - g_v^2 - g_w^2) / (1 + g_u + g_v + g_w).
inline double defect_from_gammas(double gu, double gv, double gw) {
  double radicand = 1.0 + 2.0 * gu * gv * gw - gu * gu - gv * gv - gw * gw;
  if (radicand < -kDefectRadicandClamp) throw DegenerateTriangle("side gamma factors do not form a gyrotriangle");
  // Below the rounding floor of the large cancelling terms the radicand is noise.
  const double noise = 16.0 * std::numeric_limits<double>::epsilon() * gu * gv * gw;
  if (radicand <= noise) radicand = 0.0;
  return 2.0 * std::atan(std::sqrt(radicand) / (1.0 + gu + gv + gw));
}

/// Gyrotriangle UVW with side gyrovectors
///   u = ⊖W ⊕ V,  v = ⊖W ⊕ U,  w = ⊖U ⊕ V.
class GyroTriangle {
 public:
  GyroTriangle(const BallVec& U, const BallVec& V, const BallVec& W)
      : U_(U), V_(V), W_(W),
        u_(einstein_add(-W, V)),
        v_(einstein_add(-W, U)),
        w_(einstein_add(-U, V)),
        gu_(gamma(u_)),
        gv_(gamma(v_)),
        gw_(gamma(w_)) {
    require_same_radius(U, V);
    require_same_radius(U, W);
  }

  const BallVec& U() const { return U_; }
  const BallVec& V() const { return V_; }
  const BallVec& W() const { return W_; }

  const BallVec& side_u() const { return u_; }
  const BallVec& side_v() const { return v_; }
  const BallVec& side_w() const { return w_; }

  Gamma gamma_u() const { return gu_; }
  Gamma gamma_v() const { return gv_; }
  Gamma gamma_w() const { return gw_; }

  double gyrolength_u() const { return u_.norm(); }
  double gyrolength_v() const { return v_.norm(); }
  double gyrolength_w() const { return w_.norm(); }

 private:
  BallVec U_, V_, W_;
  BallVec u_, v_, w_;
  Gamma gu_, gv_, gw_;
};

/// Gyrotriangle defect, in [0, pi).
inline double defect(const GyroTriangle& t) {
  return defect_from_gammas(t.gamma_u().value, t.gamma_v().value, t.gamma_w().value);
}

/// tan^2 of half the rotation angle of gyr[u, ⊖v] for the triangle's side
/// gyrovectors, extracted from the gyration matrix. Equals tan^2(defect/2).
inline double gyration_half_angle_tan2(const GyroTriangle& t) {
  const BallVec& u = t.side_u();
  const BallVec mv = -t.side_v();
  const double angle = gyration_angle(u, mv);
  const double h = std::tan(0.5 * angle);
  return h * h;
}

/// |tan^2(angle(gyr[u, ⊖v])/2) - tan^2(defect/2)|
inline double defect_gyration_residual(const GyroTriangle& t) {
  const double h = std::tan(0.5 * defect(t));
  return std::abs(gyration_half_angle_tan2(t) - h * h);
}

/// Metric tensor (E, F, G) of the Beltrami-Klein disc at (x1, x2).
struct MetricTensor2 {
  double E{1.0};
  double F{0.0};
  double G{1.0};

  double determinant() const { return E * G - F * F; }
  bool positive_definite() const { return E > 0.0 && G > 0.0 && determinant() > 0.0; }

  /// E dx1^2 + 2 F dx1 dx2 + G dx2^2
  double line_element(double dx1, double dx2) const { return E * dx1 * dx1 + 2.0 * F * dx1 * dx2 + G * dx2 * dx2; }
};

inline MetricTensor2 metric_tensor(double x1, double x2, double c = 1.0) {
  const double c2 = c * c;
  const double r2 = x1 * x1 + x2 * x2;
  if (!(std::isfinite(r2) && std::sqrt(r2) < c)) throw OutOfBall("metric tensor point outside the disc");
  const double den = (c2 - r2) * (c2 - r2);
  return {c2 * (c2 - x2 * x2) / den, c2 * x1 * x2 / den, c2 * (c2 - x1 * x1) / den};
}

/// Squared gyrodistance |(x + dx) ⊖ x|^2 between nearby disc points.
inline double line_element_forward(const Ball& ball, double x1, double x2, double dx1, double dx2) {
  const BallVec p = ball.vec(x1 + dx1, x2 + dx2, 0.0);
  const BallVec q = ball.vec(x1, x2, 0.0);
  const double d = gyrodistance(p, q);
  return d * d;
}

/// Squared gyrodistance |(x + dx/2) ⊖ (x - dx/2)|^2. Even in dx, so it
/// matches the quadratic form at x up to O(|dx|^4).
inline double line_element_centered(const Ball& ball, double x1, double x2, double dx1, double dx2) {
  const BallVec p = ball.vec(x1 + 0.5 * dx1, x2 + 0.5 * dx2, 0.0);
  const BallVec q = ball.vec(x1 - 0.5 * dx1, x2 - 0.5 * dx2, 0.0);
  const double d = gyrodistance(p, q);
  return d * d;
}

/// Relative mismatch between the finite gyrodistance and the metric's
/// quadratic form along displacement (dx1, dx2).
inline double metric_relative_error(const Ball& ball, double x1, double x2, double dx1, double dx2) {
  const double exact = line_element_centered(ball, x1, x2, dx1, dx2);
  const double quad = metric_tensor(x1, x2, ball.radius()).line_element(dx1, dx2);
  return std::abs(exact - quad) / exact;
}

}  // namespace gyro
