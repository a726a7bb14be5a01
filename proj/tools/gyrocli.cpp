// gyrocli: command-line front end to the gyro library.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage or validation error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gyro/gyro.hpp"
#include "gyro/verification.hpp"

namespace {

using gyro::Vec3;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- output model -----------------------------------------------------------

struct Null {};
using Value = std::variant<Null, double, std::int64_t, bool, std::string, Vec3, std::vector<double>>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  Record& add(std::string key, Value v) {
    fields.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

struct Document {
  std::vector<Record> rows;
  bool table{false};
  bool violation{false};
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::ordered_json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Null>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Vec3>) {
          return nlohmann::ordered_json::array({x.x, x.y, x.z});
        } else {
          return x;
        }
      },
      v);
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json o = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.fields) o[k] = to_json(v);
  return o;
}

void csv_columns(const std::string& key, const Value& v, std::vector<std::string>& out) {
  if (std::holds_alternative<Vec3>(v)) {
    for (const char* s : {"_x", "_y", "_z"}) out.push_back(key + s);
  } else if (const auto* a = std::get_if<std::vector<double>>(&v)) {
    for (std::size_t i = 0; i < a->size(); ++i) out.push_back(key + "_" + std::to_string(i));
  } else {
    out.push_back(key);
  }
}

void csv_cells(const Value& v, std::vector<std::string>& out) {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Null>) {
          out.emplace_back();
        } else if constexpr (std::is_same_v<T, double>) {
          out.push_back(format_double(x));
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          out.push_back(std::to_string(x));
        } else if constexpr (std::is_same_v<T, bool>) {
          out.emplace_back(x ? "true" : "false");
        } else if constexpr (std::is_same_v<T, std::string>) {
          out.push_back(x);
        } else if constexpr (std::is_same_v<T, Vec3>) {
          for (double c : {x.x, x.y, x.z}) out.push_back(format_double(c));
        } else {
          for (double c : x) out.push_back(format_double(c));
        }
      },
      v);
}

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

void emit(const Document& doc, const std::string& format, std::ostream& os) {
  if (format == "json") {
    if (doc.table) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& r : doc.rows) a.push_back(to_json(r));
      os << a.dump(2) << '\n';
    } else {
      os << to_json(doc.rows.front()).dump(2) << '\n';
    }
    return;
  }
  if (doc.rows.empty()) return;
  std::vector<std::string> header;
  for (const auto& [k, v] : doc.rows.front().fields) csv_columns(k, v, header);
  os << join(header) << '\n';
  for (const auto& r : doc.rows) {
    std::vector<std::string> cells;
    for (const auto& f : r.fields) csv_cells(f.second, cells);
    os << join(cells) << '\n';
  }
}

Document single(Record r, bool violation = false) {
  Document d;
  d.rows.push_back(std::move(r));
  d.violation = violation;
  return d;
}

// ---- input parsing ----------------------------------------------------------

double parse_real(std::string_view s, const std::string& what) {
  double x = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last || !std::isfinite(x))
    throw UsageError(what + ": '" + std::string(s) + "' is not a finite real number");
  return x;
}

/// "x,y" or "x,y,z"; two components are zero-extended.
Vec3 parse_vec(const std::string& s, const std::string& what) {
  std::vector<double> parts;
  std::string_view rest = s;
  while (true) {
    const auto comma = rest.find(',');
    parts.push_back(parse_real(rest.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (parts.size() < 2 || parts.size() > 3) throw UsageError(what + ": expected 2 or 3 comma-separated components");
  return {parts[0], parts[1], parts.size() == 3 ? parts[2] : 0.0};
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::string_view rest = s;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_real(rest.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

// ---- subcommands ------------------------------------------------------------

struct Global {
  double c{1.0};
  double tol{1e-10};
  std::uint64_t seed{0};
  std::string format;
};

struct VecArg {
  std::string text;
  gyro::BallVec in(const gyro::Ball& ball, const char* name) const { return ball.vec(parse_vec(text, name)); }
};

Document cmd_add(const Global& g, const VecArg& u_arg, const VecArg& v_arg) {
  const gyro::Ball ball(g.c);
  const auto u = u_arg.in(ball, "--u");
  const auto v = v_arg.in(ball, "--v");
  const auto uv = gyro::einstein_add(u, v);
  Record r;
  r.add("u", u.vec()).add("v", v.vec());
  r.add("u_plus_v", uv.vec()).add("v_plus_u", gyro::einstein_add(v, u).vec());
  r.add("u_coplus_v", gyro::coadd(u, v).vec());
  r.add("gamma_u", gyro::gamma(u).value).add("gamma_v", gyro::gamma(v).value);
  r.add("gamma_u_plus_v", gyro::gamma(uv).value);
  r.add("gamma_identity", gyro::gamma_identity(u, v).value);
  return single(r);
}

Document cmd_gyrate(const Global& g, const VecArg& u_arg, const VecArg& v_arg, const std::string& w_text) {
  const gyro::Ball ball(g.c);
  const auto u = u_arg.in(ball, "--u");
  const auto v = v_arg.in(ball, "--v");
  const auto closed = gyro::gyr_closed_form(u, v);
  const auto matrix = gyro::gyr_matrix_form(u, v);
  const double matrix_residual = gyro::max_abs_diff(closed.matrix(), matrix.matrix());
  Record r;
  const auto flat = gyro::flatten(closed.matrix());
  r.add("gyr_matrix", std::vector<double>(flat.begin(), flat.end()));
  r.add("angle", gyro::gyration_angle(u, v));
  r.add("axis", gyro::cross(u.vec(), v.vec()));
  r.add("determinant", closed.determinant());
  r.add("trace_residual", closed.trace_identity_residual());
  r.add("matrix_form_residual", matrix_residual);
  double worst = std::max(matrix_residual, closed.trace_identity_residual());
  if (!w_text.empty()) {
    const auto w = ball.vec(parse_vec(w_text, "--w"));
    const Vec3 gw = closed * w.vec();
    const double def_residual = gyro::max_abs_diff(gw, gyro::gyr_definitional(u, v, w).vec());
    r.add("w", w.vec()).add("gyr_w", gw).add("definitional_residual", def_residual);
    worst = std::max(worst, def_residual);
  }
  return single(r, !(worst <= g.tol));
}

Document cmd_angle(const Global& g, const VecArg& u_arg, const VecArg& v_arg, const std::string& normal_text) {
  const gyro::Ball ball(g.c);
  const auto u = u_arg.in(ball, "--u");
  const auto v = v_arg.in(ball, "--v");
  std::optional<Vec3> normal;
  if (!normal_text.empty()) normal = parse_vec(normal_text, "--normal");
  const auto p = gyro::precession_angles(u, v, normal);
  const auto e = gyro::angle_from_gammas(u, v, normal);
  Record r;
  r.add("theta", p.theta).add("epsilon", p.epsilon).add("k", p.k);
  r.add("cos_eps", p.cos_eps).add("sin_eps", p.sin_eps);
  r.add("cos_half", p.cos_half).add("sin_half", p.sin_half);
  r.add("omega_theta", p.omega_theta);
  r.add("epsilon_from_gammas", p.degenerate ? 0.0 : e.angle());
  r.add("normal", p.normal).add("degenerate", p.degenerate);
  return single(r);
}

Document cmd_sweep(const std::string& k_text, std::int64_t samples) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const auto ks = parse_list(k_text, "--k");
  for (double k : ks)
    if (!(k > 1.0)) throw UsageError("--k values must exceed 1");
  Document d;
  d.table = true;
  const std::int64_t last = samples - 1;
  for (double k : ks) {
    for (std::int64_t i = 0; i < samples; ++i) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(last);
      const bool on_axis = i == 0 || i == last || 2 * i == last;
      const double cos_t = on_axis ? (2 * i == last ? -1.0 : 1.0) : std::cos(theta);
      const double sin_t = on_axis ? 0.0 : std::sin(theta);
      const auto e = gyro::precession_from_k(k, cos_t, sin_t);
      Record r;
      r.add("k", k).add("theta", theta).add("cos_eps", e.cos).add("neg_sin_eps", 0.0 - e.sin);
      d.rows.push_back(std::move(r));
    }
  }
  return d;
}

Document cmd_orbit(const Global& g, double speed, std::int64_t sides, double accel) {
  const gyro::OrbitConfig cfg{speed, sides, g.c};
  const auto res = gyro::total_precession(cfg);
  const auto f = gyro::thomas_frequency(speed, accel, g.c);
  Record r;
  r.add("speed", speed).add("sides", sides);
  r.add("gamma", gyro::gamma(gyro::Ball(g.c).vec(speed, 0.0, 0.0)).value);
  r.add("eps_per_corner", res.eps_per_corner).add("total", res.total).add("limit", res.limit);
  r.add("gap", res.gap()).add("omega_ratio", res.omega_ratio);
  r.add("phase_re", res.phase.real()).add("phase_im", res.phase.imag());
  r.add("accel", accel).add("omega", f.omega).add("omega_t", f.omega_t);
  r.add("thomas_prefactor", f.prefactor);
  return single(r);
}

Document cmd_boost_check(const Global& g, const VecArg& u_arg, const VecArg& v_arg, const std::string& event_text) {
  const gyro::Ball ball(g.c);
  const auto u = u_arg.in(ball, "--u");
  const auto v = v_arg.in(ball, "--v");
  const auto res = gyro::boost_composition_check(u, v);
  const gyro::Mat4 product = gyro::Boost4(u).matrix() * gyro::Boost4(v).matrix();
  const double mink = std::max({gyro::minkowski_residual(gyro::Boost4(u).matrix(), g.c),
                                gyro::minkowski_residual(gyro::Boost4(v).matrix(), g.c),
                                gyro::minkowski_residual(product, g.c)});
  Record r;
  r.add("left_residual", res.left).add("right_residual", res.right);
  r.add("minkowski_residual", mink).add("non_closure", gyro::boost_non_closure(u, v));
  if (!event_text.empty()) {
    const auto values = parse_list(event_text, "--event");
    if (values.size() != 4) throw UsageError("--event: expected t,x,y,z");
    const gyro::SpacetimeEvent e{values[0], {values[1], values[2], values[3]}};
    const auto image = product * e;
    r.add("image_t", image.t).add("image_x", image.x);
    r.add("interval_residual", std::abs(gyro::minkowski_form(image, g.c) - gyro::minkowski_form(e, g.c)));
  }
  const bool ok = res.left <= g.tol && res.right <= g.tol && mink <= g.tol;
  return single(r, !ok);
}

Document cmd_audit(const Global& g, std::int64_t samples, double max_speed) {
  if (samples < 1) throw UsageError("--samples must be at least 1");
  if (!(max_speed > 0.0 && max_speed < 1.0)) throw UsageError("--max-speed must lie in (0, 1)");
  const auto rows = gyro::extended_audit(static_cast<std::size_t>(samples), g.seed, max_speed, g.tol, gyro::Ball(g.c));
  Document d;
  d.table = true;
  for (const auto& row : rows) {
    Record r;
    r.add("law", row.name).add("max_residual", row.max_residual).add("threshold", row.threshold);
    r.add("samples", static_cast<std::int64_t>(row.samples)).add("pass", row.pass());
    d.rows.push_back(std::move(r));
    if (!row.pass()) d.violation = true;
  }
  return d;
}

Document cmd_sign_check(const Global& g, const VecArg& u_arg, double theta, double ratio, const VecArg& w_arg,
                        bool allow_degenerate, std::int64_t probes) {
  if (probes < 0) throw UsageError("--sweep must be nonnegative");
  const gyro::Ball ball(g.c);
  const auto u = u_arg.in(ball, "--u");
  const auto w = w_arg.in(ball, "--w");
  const auto rep = gyro::sign_check(u, theta, ratio, w);
  if (rep.degenerate && !allow_degenerate)
    throw UsageError("theta is degenerate (sin theta = 0); pass --allow-degenerate to evaluate anyway");
  Record r;
  r.add("theta", rep.theta).add("epsilon", rep.epsilon);
  r.add("cos_eps", rep.cos_eps).add("sin_eps", rep.sin_eps).add("residual", rep.residual);
  if (rep.opposite_signs)
    r.add("opposite_signs", *rep.opposite_signs);
  else
    r.add("opposite_signs", Null{});
  r.add("degenerate", rep.degenerate).add("v", rep.v.vec());
  bool ok = rep.residual <= g.tol && rep.opposite_signs.value_or(true);
  if (probes > 0) {
    // Same (u, theta, ratio) against random probes: the rotation must not depend on w.
    gyro::BallSampler sampler(ball, 0.95, g.seed);
    double worst = 0.0;
    for (std::int64_t i = 0; i < probes; ++i)
      worst = gyro::fold_max(worst, gyro::sign_check(u, theta, ratio, sampler.velocity()).residual);
    r.add("sweep_samples", probes).add("sweep_max_residual", worst);
    ok = ok && worst <= g.tol;
  }
  return single(r, !ok);
}

Document cmd_midpoint(const Global& g, const VecArg& a_arg, const VecArg& b_arg) {
  const gyro::Ball ball(g.c);
  const auto a = a_arg.in(ball, "--a");
  const auto b = b_arg.in(ball, "--b");
  const auto m = gyro::gyromidpoint(a, b);
  const auto mc = gyro::gyromidpoint_coadd(a, b);
  const double residual = gyro::max_abs_diff(m.vec(), mc.vec());
  const double balance = std::abs(gyro::gyrodistance(a, m) - gyro::gyrodistance(m, b));
  Record r;
  r.add("midpoint", m.vec()).add("midpoint_coadd", mc.vec()).add("residual", residual);
  r.add("distance_a_m", gyro::gyrodistance(a, m)).add("distance_m_b", gyro::gyrodistance(m, b));
  return single(r, !(std::max(residual, balance) <= g.tol));
}

Document cmd_defect(const Global& g, const VecArg& p, const VecArg& q, const VecArg& s) {
  const gyro::Ball ball(g.c);
  const gyro::GyroTriangle t(p.in(ball, "--U"), q.in(ball, "--V"), s.in(ball, "--W"));
  const double delta = gyro::defect(t);
  const double h = std::tan(0.5 * delta);
  const double residual = gyro::defect_gyration_residual(t);
  Record r;
  r.add("side_u", t.side_u().vec()).add("side_v", t.side_v().vec()).add("side_w", t.side_w().vec());
  r.add("gamma_u", t.gamma_u().value).add("gamma_v", t.gamma_v().value).add("gamma_w", t.gamma_w().value);
  r.add("defect", delta).add("tan2_half_defect", h * h);
  r.add("tan2_half_gyration", gyro::gyration_half_angle_tan2(t)).add("residual", residual);
  return single(r, !(residual <= g.tol));
}

Document cmd_metric(const Global& g, double x1, double x2, double step) {
  if (!(step > 0.0)) throw UsageError("--step must be positive");
  const gyro::Ball ball(g.c);
  const auto m = gyro::metric_tensor(x1, x2, g.c);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double psi = std::numbers::pi * i / 8.0;
    worst = gyro::fold_max(
        worst, gyro::metric_relative_error(ball, x1, x2, step * g.c * std::cos(psi), step * g.c * std::sin(psi)));
  }
  Record r;
  r.add("x1", x1).add("x2", x2).add("e", m.E).add("f", m.F).add("g", m.G);
  r.add("determinant", m.determinant()).add("positive_definite", m.positive_definite());
  r.add("step", step).add("max_relative_error", worst);
  return single(r, !(worst <= gyro::kMetricRelativeTolerance) || !m.positive_definite());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein velocity addition, gyrations and Thomas precession"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--c", g.c, "ball radius (speed of light)")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "residual tolerance for identity checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "sampling seed");
  app.add_option("--format", g.format, "output format (default json; csv for sweep)")
      ->check(CLI::IsMember({"csv", "json"}));

  VecArg u{"0,0,0"}, v{"0,0,0"}, w{}, a{}, b{};
  std::string w_text, normal_text, event_text, k_text = "1.001,1.5,3,10";
  std::int64_t samples = 0, sides = 1000;
  double speed = 0.6, accel = 1.0, max_speed = 0.95, theta = 0.0, ratio = 1.0, x1 = 0.0, x2 = 0.0, step = 1e-4;
  bool allow_degenerate = false;

  auto* add = app.add_subcommand("add", "u+v, v+u, coaddition and gamma factors");
  add->add_option("--u", u.text)->required();
  add->add_option("--v", v.text)->required();

  auto* gyrate = app.add_subcommand("gyrate", "gyration matrix gyr[u,v] and checks");
  gyrate->add_option("--u", u.text)->required();
  gyrate->add_option("--v", v.text)->required();
  gyrate->add_option("--w", w_text, "vector to rotate");

  auto* angle = app.add_subcommand("angle", "generating angle and Thomas precession angle");
  angle->add_option("--u", u.text)->required();
  angle->add_option("--v", v.text)->required();
  angle->add_option("--normal", normal_text, "orientation normal for signed angles");

  auto* sweep = app.add_subcommand("sweep", "cos eps and -sin eps over theta in [0, 2 pi]");
  sweep->add_option("--k", k_text, "comma-separated velocity parameters, each > 1");
  sweep->add_option("--samples", samples, "theta grid size")->default_val(361);

  auto* orbit = app.add_subcommand("orbit", "precession along a regular polygonal orbit");
  orbit->add_option("--speed", speed)->default_val(0.6);
  orbit->add_option("--sides", sides)->default_val(1000);
  orbit->add_option("--accel", accel, "centripetal acceleration")->default_val(1.0);

  auto* boost = app.add_subcommand("boost-check", "boost composition residuals");
  boost->add_option("--u", u.text)->required();
  boost->add_option("--v", v.text)->required();
  boost->add_option("--event", event_text, "t,x,y,z to transform by B(u)B(v)");

  auto* audit = app.add_subcommand("audit", "residual table over random samples");
  audit->add_option("--samples", samples)->default_val(1000);
  audit->add_option("--max-speed", max_speed, "sample speeds up to this fraction of c")->default_val(0.95);

  auto* sign = app.add_subcommand("sign-check", "planar check that epsilon and theta have opposite signs");
  sign->add_option("--u", u.text)->default_val("0.6,0");
  sign->add_option("--theta", theta)->required();
  sign->add_option("--ratio", ratio, "|v| / |u|")->default_val(1.0);
  sign->add_option("--w", w.text)->default_val("0.1,0.2");
  sign->add_flag("--allow-degenerate", allow_degenerate);
  std::int64_t probes = 0;
  sign->add_option("--sweep", probes, "also check against this many random probes w");

  auto* mid = app.add_subcommand("midpoint", "gyromidpoint two ways");
  mid->add_option("--a", a.text)->required();
  mid->add_option("--b", b.text)->required();

  VecArg p, q, s;
  auto* def = app.add_subcommand("defect", "gyrotriangle defect and gyration identity");
  def->add_option("--U", p.text)->required();
  def->add_option("--V", q.text)->required();
  def->add_option("--W", s.text)->required();

  auto* metric = app.add_subcommand("metric", "disc metric tensor against finite gyrodistance");
  metric->add_option("--x1", x1)->required();
  metric->add_option("--x2", x2)->required();
  metric->add_option("--step", step)->default_val(1e-4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Document doc;
    std::string default_format = "json";
    if (*add) doc = cmd_add(g, u, v);
    if (*gyrate) doc = cmd_gyrate(g, u, v, w_text);
    if (*angle) doc = cmd_angle(g, u, v, normal_text);
    if (*sweep) {
      doc = cmd_sweep(k_text, samples);
      default_format = "csv";
    }
    if (*orbit) doc = cmd_orbit(g, speed, sides, accel);
    if (*boost) doc = cmd_boost_check(g, u, v, event_text);
    if (*audit) doc = cmd_audit(g, samples, max_speed);
    if (*sign) doc = cmd_sign_check(g, u, theta, ratio, w, allow_degenerate, probes);
    if (*mid) doc = cmd_midpoint(g, a, b);
    if (*def) doc = cmd_defect(g, p, q, s);
    if (*metric) doc = cmd_metric(g, x1, x2, step);
    emit(doc, g.format.empty() ? default_format : g.format, std::cout);
    return doc.violation ? kExitViolation : kExitOk;
  } catch (const gyro::OutOfBall& e) {
    std::cerr << "error: OutOfBall: " << e.what() << '\n';
  } catch (const gyro::GyroError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
