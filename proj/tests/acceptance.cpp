// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gyro/gyro.hpp"
#include "gyro/verification.hpp"
#include "oracles.hpp"
#include "run_cli.hpp"

using namespace gyro;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("AC%-2d %s  %s (%s)\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

void law_audit() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = gyro_law_audit(1000, 0, 0.95);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string worst_law;
  for (const auto& r : rep.rows)
    if (r.max_residual == rep.worst()) worst_law = r.law;
  const bool ok = rep.rows.size() >= 20 && rep.passes(1e-10) && secs < 5.0;
  report(1, ok, "gyrogroup law audit, 1000 samples, seed 0, speeds <= 0.95c",
         std::to_string(rep.rows.size()) + fmt(" laws, worst %.3g in ", rep.worst()) + worst_law +
             fmt(", %.3f s", secs));
}

void oracle_equivalence() {
  BallSampler s(Ball{}, 0.95, 0);
  double cd = 0, cm = 0, md = 0, trace = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto u = s.velocity();
    const auto v = s.velocity();
    const auto w = s.velocity();
    const auto closed = gyr_closed_form(u, v);
    const auto matrix = gyr_matrix_form(u, v);
    const auto def = gyr_definitional(u, v, w).vec();
    cd = fold_max(cd, max_abs_diff(closed * w.vec(), def));
    cm = fold_max(cm, max_abs_diff(closed.matrix(), matrix.matrix()));
    md = fold_max(md, max_abs_diff(matrix * w.vec(), def));
    trace = fold_max(trace, std::max(closed.trace_identity_residual(), matrix.trace_identity_residual()));
  }
  const double worst = std::max({cd, cm, md});
  report(2, worst <= 1e-10 && trace <= 1e-10, "definitional, closed and matrix gyrations agree; trace identity",
         fmt("pairwise worst %.3g, trace worst %.3g", worst, trace));
}

void sign_opposition() {
  BallSampler s(Ball{}, 0.95, 0);
  double residual = 0;
  int exceptions = 0, n = 0;
  while (n < 1000) {
    const auto u = s.planar_velocity();
    const double th = s.uniform(-kPi, kPi);
    const double target = s.uniform(0.0, 0.95);
    if (u.is_zero() || std::abs(std::sin(th)) <= 1e-6 || target == 0.0) continue;
    const auto r = sign_check(u, th, target / u.norm(), s.planar_velocity());
    residual = fold_max(residual, r.residual);
    const bool opposite = (r.epsilon > 0 && th < 0) || (r.epsilon < 0 && th > 0);
    if (!opposite) ++exceptions;
    ++n;
  }
  const Ball ball;
  const auto w = sign_check(ball.vec(0.6, 0, 0), kPi / 2, 1.0, ball.vec(0.1, 0.2, 0));
  const double witness = std::max(std::abs(w.cos_eps - oracle::kCos40_41), std::abs(w.sin_eps - oracle::kSin9_41));
  const bool ok = residual <= 1e-9 && exceptions == 0 && witness <= 1e-14;
  report(3, ok, "sign(epsilon) = -sign(theta) over 1000 planar samples; 40/41, -9/41 witness",
         fmt("residual %.3g, ", residual) + std::to_string(exceptions) + fmt(" exceptions, witness error %.3g", witness));
}

void high_speed_limit() {
  const Ball ball;
  const Vec3 z{0, 0, 1};
  double prev_c = std::numeric_limits<double>::infinity(), prev_s = prev_c;
  bool ok = true;
  std::string detail;
  for (double speed : {0.9, 0.99, 0.999}) {
    double dc = 0, ds = 0;
    for (int i = 0; i <= 2000; ++i) {
      const double th = 2 * kPi * i / 2000.0;
      if (std::abs(th - kPi) <= 0.2 || std::abs(std::sin(th)) < 1e-12) continue;
      const auto u = ball.vec(speed, 0, 0);
      const auto v = ball.vec(speed * std::cos(th), speed * std::sin(th), 0);
      const auto p = precession_angles(u, v, z);
      dc = std::max(dc, std::abs(p.cos_eps - std::cos(th)));
      ds = std::max(ds, std::abs(p.sin_eps + std::sin(th)));
    }
    ok = ok && dc < prev_c && ds < prev_s;
    prev_c = dc;
    prev_s = ds;
    detail += fmt("%.3g/", dc) + fmt("%.3g ", ds);
  }
  // For information: the convergence is pointwise, not uniform near pi.
  int pointwise_failures = 0;
  for (int i = 1; i < 2000; ++i) {
    const double th = 2 * kPi * i / 2000.0;
    if (i == 1000) continue;
    double prev = std::numeric_limits<double>::infinity();
    for (double speed : {0.9, 0.99, 0.999}) {
      const auto p = precession_angles(ball.vec(speed, 0, 0), ball.vec(speed * std::cos(th), speed * std::sin(th), 0), z);
      const double gap = std::abs(std::remainder(p.epsilon + th, 2 * kPi));
      if (!(gap < prev)) ++pointwise_failures;
      prev = gap;
    }
  }
  report(4, ok, "cos e -> cos t and sin e -> -sin t along speeds 0.9, 0.99, 0.999",
         "max |dcos|/|dsin|: " + detail.substr(0, detail.size() - 1) +
             "; pointwise |e + t| non-decreasing at " + std::to_string(pointwise_failures) + " grid angles");
}

void boost_composition() {
  BallSampler s(Ball{}, 0.9, 0);
  double left = 0, right = 0, mink = 0, literal = 0;
  for (int i = 0; i < 500; ++i) {
    const auto u = s.velocity();
    const auto v = s.velocity();
    const auto r = boost_composition_check(u, v);
    left = fold_max(left, r.left);
    right = fold_max(right, r.right);
    const Mat4 prod = Boost4(u).matrix() * Boost4(v).matrix();
    for (const Mat4& m : {Boost4(u).matrix(), Boost4(v).matrix(), prod})
      mink = fold_max(mink, minkowski_residual(m, 1.0));
    literal = fold_max(literal, max_abs_diff(prod, spacetime_gyration_matrix(v, u) * Boost4(einstein_add(v, u)).matrix()));
  }
  const bool ok = left <= 1e-12 && right <= 1e-12 && mink <= 1e-12;
  report(5, ok, "B(u)B(v) = B(u+v)Gyr[u,v] = Gyr[u,v]B(v+u), 500 pairs, speeds <= 0.9c",
         fmt("left %.3g, right %.3g", left, right) + fmt(", minkowski %.3g", mink) +
             fmt("; with Gyr[v,u] on the left instead: %.3g", literal));
}

void defect_identity() {
  BallSampler s(Ball{}, 0.95, 0);
  double worst = 0;
  for (int i = 0; i < 500; ++i)
    worst = fold_max(worst, defect_gyration_residual(GyroTriangle(s.velocity(), s.velocity(), s.velocity())));
  report(6, worst <= 1e-9, "tan^2 of half gyration angle equals tan^2 of half defect, 500 triangles",
         fmt("worst %.3g", worst));
}

void polygon_limit() {
  const auto r = total_precession({0.6, 100000, 1.0});
  const double gap = std::abs(r.total - (-2 * kPi / 5));
  const double half = std::abs(thomas_frequency(1e-4, 1.0).prefactor - 0.5);
  report(7, gap <= 1e-3 && half <= 1e-8, "polygon orbit at 0.6c with 1e5 sides; Thomas half at 1e-4c",
         fmt("gap %.3g, |prefactor - 1/2| %.3g", gap, half));
}

void metric() {
  const double rel = metric_grid_check(Ball{}, 1e-4);
  const auto o = metric_tensor(0.0, 0.0);
  const double origin = std::max({std::abs(o.E - 1), std::abs(o.F), std::abs(o.G - 1)});
  report(8, rel <= 1e-4 && origin <= 1e-15, "finite gyrodistance vs metric tensor, step 1e-4, r <= 0.9c",
         fmt("worst relative error %.3g, origin error %.3g", rel, origin));
}

void figure_shape() {
  const auto r = run_cli("sweep --k 1.001,1.1,2,5,50 --samples 721 --format csv");
  bool ok = r.exit_code == 0;
  int rows = 0, bad_axis = 0, bad_sign = 0, bad_cos = 0;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  ok = ok && line == "k,theta,cos_eps,neg_sin_eps";
  while (std::getline(in, line)) {
    double k, th, ce, nse;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &k, &th, &ce, &nse) != 4) {
      ok = false;
      break;
    }
    const int idx = rows % 721;
    if ((idx == 0 || idx == 360 || idx == 720) && !(ce == 1.0 && nse == 0.0)) ++bad_axis;
    if (th > 0 && th < kPi && !(nse >= 0)) ++bad_sign;
    if (!(1 + ce > 0)) ++bad_cos;
    ++rows;
  }
  ok = ok && rows == 5 * 721 && bad_axis == 0 && bad_sign == 0 && bad_cos == 0;
  report(9, ok, "sweep: epsilon = 0 at 0, pi, 2 pi; -sin e >= 0 on (0, pi); 1 + cos e > 0",
         std::to_string(rows) + " rows, violations " + std::to_string(bad_axis + bad_sign + bad_cos));
}

void determinism() {
  const std::string args = "audit --samples 1000 --seed 0 --max-speed 0.95";
  const auto a = run_cli(args + " --format json");
  const auto b = run_cli(args + " --format json");
  const auto c = run_cli(args + " --format csv");
  const auto d = run_cli(args + " --format csv");
  const bool ok = a.exit_code == 0 && c.exit_code == 0 && !a.out.empty() && a.out == b.out && c.out == d.out;
  report(10, ok, "audit output byte-identical across runs",
         std::to_string(a.out.size()) + " json bytes, " + std::to_string(c.out.size()) + " csv bytes");
}

}  // namespace

int main() {
  law_audit();
  oracle_equivalence();
  sign_opposition();
  high_speed_limit();
  boost_composition();
  defect_identity();
  polygon_limit();
  metric();
  figure_shape();
  determinism();
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
