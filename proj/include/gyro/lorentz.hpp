#pragma once

// Lorentz boosts as 4x4 matrices acting on column events (t, x1, x2, x3),
// and the boost composition law B(u)B(v) = B(u ⊕ v) Gyr[u,v].

#include <algorithm>
#include <array>
#include <cmath>

#include "gyro/ball_core.hpp"
#include "gyro/gyration.hpp"
#include "gyro/linalg.hpp"

namespace gyro {

struct SpacetimeEvent {
  double t{0.0};
  Vec3 x{};

  friend bool operator==(const SpacetimeEvent&, const SpacetimeEvent&) = default;
};

inline double max_abs_diff(const SpacetimeEvent& a, const SpacetimeEvent& b) {
  return std::max(std::abs(a.t - b.t), max_abs_diff(a.x, b.x));
}

inline SpacetimeEvent apply(const Mat4& m, const SpacetimeEvent& e) {
  const std::array<double, 4> in = {e.t, e.x.x, e.x.y, e.x.z};
  std::array<double, 4> out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += m(r, c) * in[c];
  return {out[0], {out[1], out[2], out[3]}};
}

inline SpacetimeEvent operator*(const Mat4& m, const SpacetimeEvent& e) { return apply(m, e); }

/// c^2 t^2 - |x|^2
inline double minkowski_form(const SpacetimeEvent& e, double c) { return c * c * e.t * e.t - norm_squared(e.x); }

/// diag(c^2, -1, -1, -1)
inline Mat4 minkowski_metric(double c) {
  Mat4 eta;
  eta(0, 0) = c * c;
  eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
  return eta;
}

/// max |L^T eta L - eta|, zero for every Lorentz transformation.
inline double minkowski_residual(const Mat4& l, double c) {
  const Mat4 eta = minkowski_metric(c);
  return max_abs_diff(l.transposed() * eta * l, eta);
}

/// A Lorentz boost together with its generating velocity.
class Boost4 {
 public:
  explicit Boost4(const BallVec& v) : v_(v) {
    const double c2 = v.radius() * v.radius();
    const double g = gamma(v).value;
    const double q = g * g / (g + 1.0) / c2;
    m_ = Mat4::identity();
    m_(0, 0) = g;
    for (std::size_t i = 0; i < 3; ++i) {
      const double vi = v.vec()[i];
      m_(0, i + 1) = g * vi / c2;
      m_(i + 1, 0) = g * vi;
      for (std::size_t j = 0; j < 3; ++j) m_(i + 1, j + 1) += q * vi * v.vec()[j];
    }
  }

  const Mat4& matrix() const { return m_; }
  const BallVec& velocity() const { return v_; }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  SpacetimeEvent operator*(const SpacetimeEvent& e) const { return apply(m_, e); }

 private:
  BallVec v_;
  Mat4 m_;
};

inline Boost4 boost_matrix(const BallVec& v) { return Boost4(v); }

/// B(u)(t, x) in vector form:
///   (g (t + u.x/c^2),  g u t + x + (g^2/(1+g)) (u.x/c^2) u).
inline SpacetimeEvent boost_apply(const BallVec& u, const SpacetimeEvent& e) {
  const double c2 = u.radius() * u.radius();
  const double g = gamma(u).value;
  const double ux = dot(u.vec(), e.x) / c2;
  return {g * (e.t + ux), g * e.t * u.vec() + e.x + (g * g / (1.0 + g)) * ux * u.vec()};
}

/// Gyr[u,v] as the block matrix diag(1, gyr[u,v]).
inline Mat4 spacetime_gyration_matrix(const BallVec& u, const BallVec& v) {
  const Rotation3 g = gyr_closed_form(u, v);
  Mat4 m;
  m(0, 0) = 1.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r + 1, c + 1) = g(r, c);
  return m;
}

/// Gyr[u,v](t, x) = (t, gyr[u,v] x).
inline SpacetimeEvent spacetime_gyr(const BallVec& u, const BallVec& v, const SpacetimeEvent& e) {
  return {e.t, gyr_closed_form(u, v) * e.x};
}

struct CompositionResiduals {
  double left{0.0};   ///< max |B(u)B(v) - B(u ⊕ v) Gyr[u,v]|
  double right{0.0};  ///< max |B(u)B(v) - Gyr[u,v] B(v ⊕ u)|
};

/// Both factorizations of a boost product into a boost and a gyration.
///
/// The gyration is applied first on the left form and last on the right
/// form. In matrix (active, column-event) form both use gyr[u,v]: since
/// gyr[u,v](v ⊕ u) = u ⊕ v, Gyr[u,v] B(v ⊕ u) maps (t, wt) to a multiple of
/// (u ⊕ v) ⊕ gyr[u,v]w, the same image as B(u ⊕ v) Gyr[u,v]. Placing
/// Gyr[v,u] = Gyr[u,v]^-1 there instead does not give an identity.
inline CompositionResiduals boost_composition_check(const BallVec& u, const BallVec& v) {
  const Mat4 lhs = Boost4(u).matrix() * Boost4(v).matrix();
  const Mat4 gyr_uv = spacetime_gyration_matrix(u, v);
  const Mat4 left = Boost4(einstein_add(u, v)).matrix() * gyr_uv;
  const Mat4 right = gyr_uv * Boost4(einstein_add(v, u)).matrix();
  return {max_abs_diff(lhs, left), max_abs_diff(lhs, right)};
}

/// Distance of B(u)B(v) from the pure boosts B(u ⊕ v) and B(v ⊕ u); the
/// smaller of the two. Positive whenever u and v are not parallel.
inline double boost_non_closure(const BallVec& u, const BallVec& v) {
  const Mat4 lhs = Boost4(u).matrix() * Boost4(v).matrix();
  return std::min(max_abs_diff(lhs, Boost4(einstein_add(u, v)).matrix()),
                  max_abs_diff(lhs, Boost4(einstein_add(v, u)).matrix()));
}

}  // namespace gyro
