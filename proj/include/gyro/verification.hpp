#pragma once

// The complete residual table: gyrogroup laws plus the cross-checks between
// gyration routes, boosts, gyrotriangle defects, the planar sign claim and
// the disc metric. Deterministic for a given seed.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "gyro/audit.hpp"
#include "gyro/ball_core.hpp"
#include "gyro/gyration.hpp"
#include "gyro/hyperbolic.hpp"
#include "gyro/lorentz.hpp"
#include "gyro/sampling.hpp"
#include "gyro/sign_corroboration.hpp"

namespace gyro {

struct CheckRow {
  std::string name;
  double max_residual{0.0};
  double threshold{0.0};
  std::size_t samples{0};

  bool pass() const { return max_residual <= threshold; }
};

/// Relative metric mismatch allowed at step 1e-4.
inline constexpr double kMetricRelativeTolerance = 1e-4;
inline constexpr double kMetricStep = 1e-4;

/// Largest relative error of the centered gyrodistance line element against
/// the metric tensor on a polar grid of radius <= 0.9 c. Returns the number
/// of evaluations through `count`.
inline double metric_grid_check(const Ball& ball, double step, std::size_t* count = nullptr) {
  const double c = ball.radius();
  double worst = 0.0;
  std::size_t n = 0;
  for (int ri = 0; ri <= 9; ++ri) {
    const double r = 0.1 * ri * c;
    const int n_angles = ri == 0 ? 1 : 12;
    for (int ai = 0; ai < n_angles; ++ai) {
      const double phi = 2.0 * std::numbers::pi * ai / n_angles;
      const double x1 = r * std::cos(phi);
      const double x2 = r * std::sin(phi);
      for (int di = 0; di < 8; ++di) {
        const double psi = std::numbers::pi * di / 8.0;
        worst = fold_max(worst, metric_relative_error(ball, x1, x2, step * c * std::cos(psi), step * c * std::sin(psi)));
        ++n;
      }
    }
  }
  if (count) *count = n;
  return worst;
}

/// Every residual the library knows how to check, one row per identity.
/// Identity rows are held to `tol`; the metric row to its relative bound.
inline std::vector<CheckRow> extended_audit(std::size_t samples, std::uint64_t seed, double max_speed, double tol,
                                            const Ball& ball = Ball{}) {
  std::vector<CheckRow> rows;
  if (samples == 0) return rows;

  for (const auto& law : gyro_law_audit(samples, seed, max_speed, ball).rows)
    rows.push_back({law.law, law.max_residual, tol, law.samples});

  BallSampler sampler(ball, max_speed, seed + 1);
  const double c = ball.radius();
  double closed_vs_def = 0, closed_vs_matrix = 0, trace = 0, ortho = 0, det = 0, axis = 0, ab = 0, angles = 0;
  double extended_domain = 0, boost_left = 0, boost_right = 0, minkowski = 0, defect_gyr = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const BallVec u = sampler.velocity();
    const BallVec v = sampler.velocity();
    const BallVec w = sampler.velocity();
    const Vec3 free = sampler.free_vector(10.0 * c);

    const Rotation3 closed = gyr_closed_form(u, v);
    const Rotation3 matrix = gyr_matrix_form(u, v);
    closed_vs_def = fold_max(closed_vs_def, max_abs_diff(closed * w.vec(), gyr_definitional(u, v, w).vec()));
    closed_vs_matrix = fold_max(closed_vs_matrix, max_abs_diff(closed.matrix(), matrix.matrix()));
    extended_domain = fold_max(extended_domain, max_abs_diff(closed * free, matrix * free) / std::max(1.0, norm(free)));
    for (const Rotation3* r : {&closed, &matrix}) {
      trace = fold_max(trace, r->trace_identity_residual());
      ortho = fold_max(ortho, r->orthogonality_residual());
      det = fold_max(det, std::abs(r->determinant() - 1.0));
    }
    const Vec3 uxv = cross(u.vec(), v.vec());
    axis = fold_max(axis, max_abs_diff(closed * uxv, uxv));
    if (!detail::parallel_or_zero(u.vec(), v.vec())) {
      ab = fold_max(ab, alpha_beta_constraint_residual(u, v));
      const PrecessionAngles p = precession_angles(u, v);
      const CosSin g = angle_from_gammas(u, v);
      const double m = gyration_angle(u, v);
      angles = fold_max(angles, std::abs(p.epsilon - g.angle()));
      angles = fold_max(angles, std::abs(p.epsilon - m));
      angles = fold_max(angles, std::abs(g.angle() - m));
    }

    const CompositionResiduals b = boost_composition_check(u, v);
    boost_left = fold_max(boost_left, b.left);
    boost_right = fold_max(boost_right, b.right);
    minkowski = fold_max(minkowski, minkowski_residual(Boost4(u).matrix(), c));

    defect_gyr = fold_max(defect_gyr, defect_gyration_residual(GyroTriangle(u, v, w)));
  }
  rows.push_back({"gyration_closed_vs_definitional", closed_vs_def, tol, samples});
  rows.push_back({"gyration_closed_vs_matrix", closed_vs_matrix, tol, samples});
  rows.push_back({"gyration_extended_domain", extended_domain, tol, samples});
  rows.push_back({"trace_identity", trace, tol, 2 * samples});
  rows.push_back({"orthogonality", ortho, tol, 2 * samples});
  rows.push_back({"unit_determinant", det, tol, 2 * samples});
  rows.push_back({"rotation_axis_fixed", axis, tol, samples});
  rows.push_back({"alpha_beta_constraint", ab, tol, samples});
  rows.push_back({"angle_consistency", angles, tol, samples});
  rows.push_back({"boost_composition_left", boost_left, tol, samples});
  rows.push_back({"boost_composition_right", boost_right, tol, samples});
  rows.push_back({"minkowski_preservation", minkowski, tol, samples});
  rows.push_back({"defect_gyration_identity", defect_gyr, tol, samples});

  // Planar sign claim, counting violations as the residual.
  BallSampler planar(ball, max_speed, seed + 2);
  double sign_residual = 0.0;
  double violations = 0.0;
  std::size_t sign_samples = 0;
  while (sign_samples < samples) {
    const BallVec u = planar.planar_velocity();
    const double theta = planar.uniform(-std::numbers::pi, std::numbers::pi);
    const double target = planar.uniform(0.0, max_speed * c);
    if (u.is_zero() || std::abs(std::sin(theta)) <= 1e-6 || !(target > 0.0)) continue;
    const BallVec w = planar.planar_velocity();
    const SignCheckReport r = sign_check(u, theta, target / u.norm(), w);
    sign_residual = fold_max(sign_residual, r.residual);
    if (!r.opposite_signs.value_or(false)) violations += 1.0;
    ++sign_samples;
  }
  rows.push_back({"sign_check_rotation", sign_residual, tol, sign_samples});
  rows.push_back({"sign_opposition_violations", violations, 0.0, sign_samples});

  std::size_t metric_points = 0;
  const double metric = metric_grid_check(ball, kMetricStep, &metric_points);
  rows.push_back({"metric_second_order", metric, kMetricRelativeTolerance, metric_points});
  return rows;
}

}  // namespace gyro
