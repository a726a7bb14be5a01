#include <gtest/gtest.h>

#include <cmath>

#include "gyro/lorentz.hpp"
#include "gyro/sampling.hpp"
#include "oracles.hpp"

using namespace gyro;

namespace {

constexpr double kTol = 1e-12;

SpacetimeEvent random_event(BallSampler& s) { return {s.uniform(-5.0, 5.0), s.free_vector(5.0)}; }

}  // namespace

TEST(Boost4, ZeroVelocityIsIdentity) { EXPECT_EQ(Boost4(Ball{}.zero()).matrix(), Mat4::identity()); }

TEST(Boost4, FirstRowAlongX) {
  const auto b = boost_matrix(Ball{}.vec(0.6, 0, 0));
  const auto row = oracle::boost_x_first_row(0.6);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(b(0, j), row[j], 1e-15);
  EXPECT_NEAR(b(0, 1), 0.75, 1e-15);
  EXPECT_NEAR(b(1, 0), 0.75, 1e-15);
  EXPECT_NEAR(b(1, 1), 1.25, 1e-15);
  EXPECT_NEAR(b(2, 2), 1.0, 0.0);
}

TEST(Boost4, OtherRadius) {
  const double c = 3.0;
  const auto b = boost_matrix(Ball(c).vec(1.8, 0, 0));
  const auto row = oracle::boost_x_first_row(1.8, c);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(b(0, j), row[j], 1e-15);
  EXPECT_LE(minkowski_residual(b.matrix(), c), kTol);
}

TEST(Boost4, TwoDimensionalBoostsStayInThePlane) {
  const auto b = boost_matrix(Ball{}.vec(0.3, -0.5, 0));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(b(3, i), 0.0);
    EXPECT_EQ(b(i, 3), 0.0);
  }
  EXPECT_EQ(b(3, 3), 1.0);
}

TEST(Boost4, PreservesMinkowskiForm) {
  const SpacetimeEvent e{1.0, {0.2, 0.3, 0.1}};
  const auto b = Boost4(Ball{}.vec(0.6, 0, 0));
  EXPECT_NEAR(minkowski_form(b * e, 1.0), minkowski_form(e, 1.0), 1e-15);

  BallSampler s(Ball{}, 0.95, 1);
  for (int i = 0; i < 500; ++i) {
    const auto v = s.velocity();
    const auto boost = Boost4(v);
    EXPECT_LE(minkowski_residual(boost.matrix(), 1.0), 1e-12 * gamma(v).value * gamma(v).value);
    const auto ev = random_event(s);
    EXPECT_NEAR(minkowski_form(boost * ev, 1.0), minkowski_form(ev, 1.0), 1e-9 * gamma(v).value * gamma(v).value);
  }
}

TEST(BoostApply, Examples) {
  const Ball ball;
  const SpacetimeEvent e{2.0, {0.1, -0.3, 0.4}};
  EXPECT_EQ(boost_apply(ball.zero(), e), e);
  const auto r = boost_apply(ball.vec(0.6, 0, 0), {1.0, {}});
  EXPECT_NEAR(r.t, 1.25, 1e-15);
  EXPECT_LE(max_abs_diff(r.x, Vec3{0.75, 0, 0}), 1e-15);
}

TEST(BoostApply, AgreesWithMatrix) {
  BallSampler s(Ball{}, 0.95, 2);
  for (int i = 0; i < 500; ++i) {
    const auto u = s.velocity();
    const auto e = random_event(s);
    EXPECT_LE(max_abs_diff(boost_apply(u, e), Boost4(u) * e), 1e-12 * gamma(u).value * 10);
  }
}

TEST(BoostApply, WorldlineOfAVelocityMapsToTheComposedVelocity) {
  BallSampler s(Ball{}, 0.95, 3);
  for (int i = 0; i < 500; ++i) {
    const auto u = s.velocity();
    const auto v = s.velocity();
    const double t = s.uniform(-3.0, 3.0);
    const auto image = boost_apply(u, {t, t * v.vec()});
    const auto uv = einstein_add(u, v);
    const double ratio = gamma(uv).value / gamma(v).value;
    EXPECT_NEAR(image.t, ratio * t, 1e-12 * std::abs(ratio * t) + 1e-15);
    EXPECT_LE(max_abs_diff(image.x, ratio * t * uv.vec()), 1e-12 * std::abs(ratio * t) + 1e-15);
  }
}

TEST(BoostApply, RightAngleWorldline) {
  const Ball ball;
  const auto u = ball.vec(0.6, 0, 0);
  const auto v = ball.vec(0, 0.6, 0);
  const auto image = boost_apply(u, {1.0, v.vec()});
  const Vec3 dir = image.x / image.t;
  EXPECT_LE(max_abs_diff(dir, Vec3{0.6, 0.48, 0}), 1e-15);
}

TEST(SpacetimeGyr, Properties) {
  const Ball ball;
  const SpacetimeEvent e{1.5, {3.0, -2.0, 7.0}};
  EXPECT_EQ(spacetime_gyr(ball.vec(0.2, 0.1, 0), ball.vec(0.4, 0.2, 0), e), e);

  BallSampler s(Ball{}, 0.95, 4);
  for (int i = 0; i < 300; ++i) {
    const auto u = s.velocity();
    const auto v = s.velocity();
    const auto ev = random_event(s);
    const auto r = spacetime_gyr(u, v, ev);
    EXPECT_EQ(r.t, ev.t);
    EXPECT_NEAR(norm(r.x), norm(ev.x), 1e-12);
    EXPECT_LE(max_abs_diff(spacetime_gyration_matrix(u, v) * ev, r), 1e-12);
    EXPECT_LE(minkowski_residual(spacetime_gyration_matrix(u, v), 1.0), 1e-14);
  }
}

TEST(BoostComposition, TrivialCases) {
  const Ball ball;
  const auto u = ball.vec(0.3, 0.4, 0.1);
  const auto z = boost_composition_check(u, ball.zero());
  EXPECT_EQ(z.left, 0.0);
  EXPECT_EQ(z.right, 0.0);
  const auto p = boost_composition_check(u, ball.vec(0.54, 0.72, 0.18));
  EXPECT_LE(p.left, kTol);
  EXPECT_LE(p.right, kTol);
}

TEST(BoostComposition, RightAngleCase) {
  const Ball ball;
  const auto r = boost_composition_check(ball.vec(0.6, 0, 0), ball.vec(0, 0.6, 0));
  EXPECT_LE(r.left, 1e-12);
  EXPECT_LE(r.right, 1e-12);
}

TEST(BoostComposition, BothFactorisationsHold) {
  BallSampler s(Ball{}, 0.9, 5);
  for (int i = 0; i < 500; ++i) {
    const auto u = s.velocity();
    const auto v = s.velocity();
    const auto r = boost_composition_check(u, v);
    EXPECT_LE(r.left, kTol);
    EXPECT_LE(r.right, kTol);
  }
}

TEST(BoostComposition, InverseGyrationOnTheLeftIsNotAnIdentity) {
  // B(u)B(v) = Gyr[u,v] B(v + u); the inverse gyration Gyr[v,u] there fails.
  const Ball ball;
  const auto u = ball.vec(0.6, 0, 0);
  const auto v = ball.vec(0, 0.6, 0);
  const Mat4 lhs = Boost4(u).matrix() * Boost4(v).matrix();
  const Mat4 inverse_form = spacetime_gyration_matrix(v, u) * Boost4(einstein_add(v, u)).matrix();
  EXPECT_GT(max_abs_diff(lhs, inverse_form), 1e-2);
}

TEST(BoostComposition, BoostsAloneDoNotClose) {
  BallSampler s(Ball{}, 0.9, 6);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto u = s.velocity();
    const auto v = s.velocity();
    if (norm(cross(u.vec(), v.vec())) < 1e-2) continue;
    EXPECT_GT(boost_non_closure(u, v), 1e-6);
    ++checked;
  }
  EXPECT_GT(checked, 100);
  const Ball ball;
  EXPECT_LE(boost_non_closure(ball.vec(0.3, 0, 0), ball.vec(0.5, 0, 0)), 1e-15);
}

TEST(BoostComposition, ProductPreservesMinkowskiForm) {
  BallSampler s(Ball{}, 0.9, 7);
  for (int i = 0; i < 500; ++i) {
    const auto u = s.velocity();
    const auto v = s.velocity();
    EXPECT_LE(minkowski_residual(Boost4(u).matrix() * Boost4(v).matrix(), 1.0), 1e-12);
  }
}
