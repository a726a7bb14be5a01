#pragma once

// Numeric audit of the gyrogroup laws of Einstein addition: each law is
// evaluated on seeded random samples and its largest residual is reported.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <cmath>
#include <string>
#include <vector>

#include "gyro/ball_core.hpp"
#include "gyro/gyration.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

/// max() that turns a NaN residual into +inf instead of dropping it.
inline double fold_max(double acc, double r) {
  if (std::isnan(r)) return std::numeric_limits<double>::infinity();
  return std::max(acc, r);
}

struct LawResidual {
  std::string law;
  double max_residual{0.0};
  std::size_t samples{0};
};

struct AuditReport {
  std::vector<LawResidual> rows;

  double worst() const {
    double w = 0.0;
    for (const auto& r : rows) w = std::max(w, r.max_residual);
    return w;
  }
  bool passes(double tol) const { return worst() <= tol; }
};

/// One sampled configuration: u, v, w in the ball, two scalars, and two
/// small ball vectors whose linear combination stays in the ball.
struct AuditSample {
  BallVec u;
  BallVec v;
  BallVec w;
  BallVec w1;
  BallVec w2;
  double r1;
  double r2;
};

namespace detail {

using LawFn = std::function<double(const AuditSample&)>;

struct Law {
  const char* name;
  LawFn residual;
};

inline double d(const BallVec& a, const BallVec& b) { return max_abs_diff(a.vec(), b.vec()); }
inline double d(const Rotation3& a, const Rotation3& b) { return max_abs_diff(a.matrix(), b.matrix()); }

inline std::vector<Law> gyrogroup_laws() {
  auto G = [](const BallVec& a, const BallVec& b) { return gyr_closed_form(a, b); };
  auto rot = [](const Rotation3& r, const BallVec& x) { return BallVec::trusted(r * x.vec(), x.radius()); };
  const Rotation3 I = Rotation3::identity();

  return {
      {"gyrocommutative_law",
       [=](const AuditSample& s) { return d(einstein_add(s.u, s.v), rot(G(s.u, s.v), einstein_add(s.v, s.u))); }},
      {"left_gyroassociative_law",
       [=](const AuditSample& s) {
         return d(einstein_add(s.u, einstein_add(s.v, s.w)), einstein_add(einstein_add(s.u, s.v), rot(G(s.u, s.v), s.w)));
       }},
      {"right_gyroassociative_law",
       [=](const AuditSample& s) {
         return d(einstein_add(einstein_add(s.u, s.v), s.w), einstein_add(s.u, einstein_add(s.v, rot(G(s.v, s.u), s.w))));
       }},
      {"gyration_left_loop_property",
       [=](const AuditSample& s) { return d(G(einstein_add(s.u, s.v), s.v), G(s.u, s.v)); }},
      {"gyration_right_loop_property",
       [=](const AuditSample& s) { return d(G(s.u, einstein_add(s.v, s.u)), G(s.u, s.v)); }},
      {"gyration_even_property", [=](const AuditSample& s) { return d(G(-s.u, -s.v), G(s.u, s.v)); }},
      {"gyration_inversion_law", [=](const AuditSample& s) { return d(G(s.v, s.u) * G(s.u, s.v), I); }},
      {"inner_product_invariance",
       [=](const AuditSample& s) {
         const Rotation3 g = G(s.u, s.v);
         return std::abs(dot(g * s.v.vec(), g * s.w.vec()) - dot(s.v.vec(), s.w.vec()));
       }},
      {"norm_invariance",
       [=](const AuditSample& s) { return std::abs(norm(G(s.u, s.v) * s.w.vec()) - s.w.norm()); }},
      {"automorphism_property",
       [=](const AuditSample& s) {
         const Rotation3 g = G(s.u, s.v);
         return d(rot(g, einstein_add(s.v, s.w)), einstein_add(rot(g, s.v), rot(g, s.w)));
       }},
      {"linearity",
       [=](const AuditSample& s) {
         const BallVec combo = BallVec::trusted(s.r1 * s.w1.vec() + s.r2 * s.w2.vec(), s.u.radius());
         const Vec3 lhs = gyr_definitional(s.u, s.v, combo).vec();
         const Vec3 rhs =
             s.r1 * gyr_definitional(s.u, s.v, s.w1).vec() + s.r2 * gyr_definitional(s.u, s.v, s.w2).vec();
         return max_abs_diff(lhs, rhs);
       }},
      {"automorphic_inverse_property",
       [=](const AuditSample& s) { return d(-einstein_add(s.u, s.v), einstein_add(-s.u, -s.v)); }},
      {"left_identity", [=](const AuditSample& s) { return d(einstein_add(Ball(s.u.radius()).zero(), s.u), s.u); }},
      {"right_identity", [=](const AuditSample& s) { return d(einstein_add(s.u, Ball(s.u.radius()).zero()), s.u); }},
      {"left_inverse",
       [=](const AuditSample& s) { return d(einstein_add(-s.u, s.u), Ball(s.u.radius()).zero()); }},
      {"right_inverse",
       [=](const AuditSample& s) { return d(einstein_sub(s.u, s.u), Ball(s.u.radius()).zero()); }},
      {"double_inverse", [=](const AuditSample& s) { return d(-(-s.u), s.u); }},
      {"gyr_zero_a_trivial", [=](const AuditSample& s) { return d(G(Ball(s.u.radius()).zero(), s.u), I); }},
      {"gyr_a_a_trivial", [=](const AuditSample& s) { return d(G(s.u, s.u), I); }},
      {"gyr_inverse_a_trivial", [=](const AuditSample& s) { return d(G(-s.u, s.u), I); }},
      {"gyr_a_zero_trivial", [=](const AuditSample& s) { return d(G(s.u, Ball(s.u.radius()).zero()), I); }},
      {"left_cancellation_law", [=](const AuditSample& s) { return d(einstein_add(-s.u, einstein_add(s.u, s.v)), s.v); }},
      {"gyrator_identity",
       [=](const AuditSample& s) { return d(rot(G(s.u, s.v), s.w), gyr_definitional(s.u, s.v, s.w)); }},
      {"gyration_fixes_zero",
       [=](const AuditSample& s) { return norm(G(s.u, s.v) * Vec3{}); }},
      {"gyration_commutes_with_inverse",
       [=](const AuditSample& s) { return d(rot(G(s.u, s.v), -s.w), -rot(G(s.u, s.v), s.w)); }},
  };
}

}  // namespace detail

inline AuditSample draw_audit_sample(BallSampler& sampler) {
  const Ball& ball = sampler.ball();
  AuditSample s{sampler.velocity(), sampler.velocity(), sampler.velocity(), ball.zero(), ball.zero(), 0.0, 0.0};
  // |r1 w1 + r2 w2| <= 0.45 + 0.45 < 1 in units of c.
  s.w1 = ball.vec(sampler.free_vector(0.45 * ball.radius()));
  s.w2 = ball.vec(sampler.free_vector(0.45 * ball.radius()));
  s.r1 = sampler.uniform(-1.0, 1.0);
  s.r2 = sampler.uniform(-1.0, 1.0);
  return s;
}

/// Max residual of every gyrogroup law over `samples` seeded draws with
/// speeds up to `max_speed` (fraction of c). An empty report for 0 samples.
inline AuditReport gyro_law_audit(std::size_t samples, std::uint64_t seed, double max_speed = 0.95,
                                  const Ball& ball = Ball{}) {
  AuditReport report;
  if (samples == 0) return report;
  const auto laws = detail::gyrogroup_laws();
  report.rows.reserve(laws.size());
  for (const auto& law : laws) report.rows.push_back({law.name, 0.0, samples});

  BallSampler sampler(ball, max_speed, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const AuditSample s = draw_audit_sample(sampler);
    for (std::size_t j = 0; j < laws.size(); ++j)
      report.rows[j].max_residual = fold_max(report.rows[j].max_residual, laws[j].residual(s));
  }
  return report;
}

}  // namespace gyro
