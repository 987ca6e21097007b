#include "fbl/cli_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <stdexcept>

#include "fbl/diagnostics.hpp"
#include "fbl/fbl_solvers.hpp"
#include "fbl/pml_baselines.hpp"

namespace fbl {

using nlohmann::json;

ScalarFn1D GaussianIC::fn1d() const {
  const double A = amplitude, k = decay, cx = center_x;
  return [A, k, cx](double x) { return A * std::exp(-k * (x - cx) * (x - cx)); };
}

ScalarFn2D GaussianIC::fn2d() const {
  const double A = amplitude, k = decay, cx = center_x, cy = center_y;
  return [A, k, cx, cy](double x, double y) {
    return A * std::exp(-k * ((x - cx) * (x - cx) + (y - cy) * (y - cy)));
  };
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("config: unknown key " + path + it.key());
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

}  // namespace

SimulationConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  reject_unknown(j, {"problem", "method", "direction", "x_L", "x_R", "y_L", "y_R", "delta_left",
                     "delta_right", "pen", "omega", "epsilon", "profile_tol", "eta", "speed",
                     "ic", "P", "P_y", "tau", "T", "snapshot_times", "reference", "out_dir"},
                 "");

  SimulationConfig c;
  read(j, "problem", c.problem);
  read(j, "method", c.method);
  read(j, "direction", c.direction);
  read(j, "x_L", c.x_L);
  read(j, "x_R", c.x_R);
  read(j, "y_L", c.y_L);
  read(j, "y_R", c.y_R);
  read(j, "delta_left", c.delta_left);
  read(j, "delta_right", c.delta_right);
  read(j, "pen", c.pen);
  read(j, "omega", c.omega);
  read(j, "epsilon", c.epsilon);
  read(j, "profile_tol", c.profile_tol);
  read(j, "eta", c.eta);
  read(j, "speed", c.speed);
  read(j, "P", c.P);
  read(j, "P_y", c.P_y);
  read(j, "tau", c.tau);
  read(j, "T", c.T);
  read(j, "out_dir", c.out_dir);
  if (j.contains("snapshot_times"))
    c.snapshot_times = j.at("snapshot_times").get<std::vector<double>>();
  if (j.contains("ic")) {
    const json& ji = j.at("ic");
    reject_unknown(ji, {"amplitude", "decay", "center_x", "center_y"}, "ic.");
    read(ji, "amplitude", c.ic.amplitude);
    read(ji, "decay", c.ic.decay);
    read(ji, "center_x", c.ic.center_x);
    read(ji, "center_y", c.ic.center_y);
  }
  if (j.contains("reference")) {
    const json& jr = j.at("reference");
    reject_unknown(jr, {"lo", "hi", "P", "tau"}, "reference.");
    read(jr, "lo", c.ref_lo);
    read(jr, "hi", c.ref_hi);
    read(jr, "P", c.ref_P);
    read(jr, "tau", c.ref_tau);
  }

  static const std::set<std::string> problems{"oneway", "wave1d", "wave2d"};
  static const std::set<std::string> methods{"fbl",        "pml1",        "pml2",
                                             "pml-intadv", "pml-fracadv", "pml-fracdiff"};
  if (!problems.count(c.problem)) throw std::invalid_argument("config: problem: bad value");
  if (!methods.count(c.method)) throw std::invalid_argument("config: method: bad value");
  if (c.direction != "left" && c.direction != "right")
    throw std::invalid_argument("config: direction: bad value");
  if (!(c.x_L < c.x_R)) throw std::invalid_argument("config: x_L must be < x_R");
  if (!(c.tau > 0.0)) throw std::invalid_argument("config: tau must be positive");
  if (!(c.T >= 0.0)) throw std::invalid_argument("config: T must be nonnegative");
  if (c.P < 4) throw std::invalid_argument("config: P too small");
  if ((c.delta_left > 0.0 && c.pen >= c.delta_left) ||
      (c.delta_right > 0.0 && c.pen >= c.delta_right) ||
      ((c.delta_left > 0.0 || c.delta_right > 0.0) && !(c.pen > 0.0)))
    throw std::invalid_argument("config: pen_len must satisfy 0 < pen < layer length");
  for (double t : c.snapshot_times)
    if (t < 0.0 || t > c.T + 1e-12)
      throw std::invalid_argument("config: snapshot_times must lie in [0, T]");
  return c;
}

std::string serialize_config(const SimulationConfig& c) {
  json j;
  j["problem"] = c.problem;
  j["method"] = c.method;
  j["direction"] = c.direction;
  j["x_L"] = c.x_L;
  j["x_R"] = c.x_R;
  j["y_L"] = c.y_L;
  j["y_R"] = c.y_R;
  j["delta_left"] = c.delta_left;
  j["delta_right"] = c.delta_right;
  j["pen"] = c.pen;
  j["omega"] = c.omega;
  j["epsilon"] = c.epsilon;
  j["profile_tol"] = c.profile_tol;
  j["eta"] = c.eta;
  j["speed"] = c.speed;
  j["ic"] = {{"amplitude", c.ic.amplitude},
             {"decay", c.ic.decay},
             {"center_x", c.ic.center_x},
             {"center_y", c.ic.center_y}};
  j["P"] = c.P;
  j["P_y"] = c.P_y;
  j["tau"] = c.tau;
  j["T"] = c.T;
  j["snapshot_times"] = c.snapshot_times;
  j["reference"] = {{"lo", c.ref_lo}, {"hi", c.ref_hi}, {"P", c.ref_P}, {"tau", c.ref_tau}};
  j["out_dir"] = c.out_dir;
  return j.dump(2);
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string time_tag(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", t);
  std::string s = buf;
  for (auto& ch : s)
    if (ch == '.') ch = 'p';
  return s;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir + "/" + name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + dir + "/" + name);
  return out;
}

void write_snapshot_1d(const std::string& dir, const std::string& name,
                       const CollocationGrid1D& grid, const Eigen::VectorXd& u,
                       const ScalarFn1D& ref) {
  auto out = open_out(dir, name);
  out << "x,u_num,u_ref,abs_err\n";
  for (int i = 0; i <= grid.P; ++i) {
    const double r = ref(grid.nodes[i]);
    out << fmt(grid.nodes[i]) << ',' << fmt(u(i)) << ',' << fmt(r) << ','
        << fmt(std::abs(u(i) - r)) << '\n';
  }
}

void write_snapshot_2d(const std::string& dir, const std::string& name,
                       const CollocationGrid1D& gx, const CollocationGrid1D& gy,
                       const Eigen::MatrixXd& u) {
  auto out = open_out(dir, name);
  out << "x,y,u_num\n";
  for (int i = 0; i <= gx.P; ++i)
    for (int j = 0; j <= gy.P; ++j)
      out << fmt(gx.nodes[i]) << ',' << fmt(gy.nodes[j]) << ',' << fmt(u(i, j)) << '\n';
}

void write_errors(const std::string& dir, const std::vector<double>& times,
                  const std::vector<double>& linf) {
  auto out = open_out(dir, "errors.csv");
  out << "t,linf_interior\n";
  for (size_t k = 0; k < times.size(); ++k) out << fmt(times[k]) << ',' << fmt(linf[k]) << '\n';
}

void write_manifest(const SimulationConfig& c, double wall_seconds) {
  json m;
  m["config"] = json::parse(serialize_config(c));
  m["wall_seconds"] = wall_seconds;
  m["format_version"] = 1;
  auto out = open_out(c.out_dir, "manifest.json");
  out << m.dump(2) << '\n';
}

VariableOrderProfile config_profile(const SimulationConfig& c) {
  return make_profile(ProfileKind::tanh_smooth, c.epsilon, c.x_L, c.x_R, c.delta_left,
                      c.delta_right, c.pen, c.omega);
}

int run_oneway(const SimulationConfig& c) {
  const auto grid =
      jgl_grid(c.P, 0.0, 0.0, c.x_L - c.delta_left, c.x_R + c.delta_right);
  const auto u0 = c.ic.fn1d();
  const double sgn = c.direction == "right" ? 1.0 : -1.0;
  std::vector<Snapshot1D> states;
  if (c.method == "fbl") {
    const auto prof = config_profile(c);
    states = solve_oneway_fbl(c.direction == "right" ? Travel::rightward : Travel::leftward, u0,
                              c.speed, grid, prof, c.tau, c.T, c.snapshot_times);
  } else {
    const DampingProfile damping =
        make_tanh_damping(c.x_L, c.x_R, c.delta_left, c.delta_right, c.pen, c.omega);
    OneWayPmlVariant variant;
    if (c.method == "pml-intadv")
      variant = OneWayPmlVariant::int_adv;
    else if (c.method == "pml-fracadv")
      variant = OneWayPmlVariant::frac_adv;
    else if (c.method == "pml-fracdiff")
      variant = OneWayPmlVariant::frac_diff;
    else
      throw std::invalid_argument("config: method " + c.method + " not available for oneway");
    if (c.direction != "right")
      throw std::invalid_argument("config: damped one-way variants support rightward travel only");
    states = solve_oneway_pml(variant, u0, grid, damping, c.epsilon, c.tau, c.T,
                              c.snapshot_times);
  }

  const auto region = interior_region(grid, c.x_L, c.x_R, c.delta_left > 0.0 ? c.pen : 0.0,
                                      c.delta_right > 0.0 ? c.pen : 0.0);
  std::vector<double> linf;
  for (const auto& s : states) {
    const double t = s.t, sp = c.speed * sgn;
    auto ref = [u0, t, sp](double x) { return u0(x - sp * t); };
    linf.push_back(interior_error(s.u, ref, grid, region));
    write_snapshot_1d(c.out_dir, "snapshot_t" + time_tag(s.t) + ".csv", grid, s.u, ref);
  }
  std::vector<double> times;
  for (const auto& s : states) times.push_back(s.t);
  write_errors(c.out_dir, times, linf);
  return 0;
}

int run_wave1d(const SimulationConfig& c) {
  if (c.method != "fbl")
    throw std::invalid_argument("config: wave1d supports method fbl only");
  const auto grid =
      jgl_grid(c.P, 0.0, 0.0, c.x_L - c.delta_left, c.x_R + c.delta_right);
  const auto u0 = c.ic.fn1d();
  auto zero = [](double) { return 0.0; };
  const auto prof = config_profile(c);
  const auto states = solve_twoway_fbl_1d(u0, zero, c.speed, grid, prof, prof, c.tau, c.T,
                                          c.snapshot_times, c.profile_tol);

  const auto region = interior_region(grid, c.x_L, c.x_R, c.delta_left > 0.0 ? c.pen : 0.0,
                                      c.delta_right > 0.0 ? c.pen : 0.0);
  std::vector<double> times, linf;
  for (const auto& s : states) {
    const double t = s.t, cc = c.speed;
    auto ref = [u0, t, cc](double x) { return exact_dalembert(u0, x, t, cc); };
    times.push_back(s.t);
    linf.push_back(interior_error(s.u, ref, grid, region));
    write_snapshot_1d(c.out_dir, "snapshot_t" + time_tag(s.t) + ".csv", grid, s.u, ref);
  }
  write_errors(c.out_dir, times, linf);
  return 0;
}

struct Wave2DRun {
  CollocationGrid1D grid_x, grid_y;
  std::vector<double> times;
  std::vector<Eigen::MatrixXd> u;
};

Wave2DRun solve_wave2d(const SimulationConfig& c, const std::string& method) {
  const int Py = c.P_y > 0 ? c.P_y : c.P;
  Wave2DRun r{jgl_grid(c.P, 0.0, 0.0, c.x_L - c.delta_left, c.x_R + c.delta_right),
              jgl_grid(Py, 0.0, 0.0, c.y_L - c.delta_left, c.y_R + c.delta_right),
              {},
              {}};
  const auto u0 = c.ic.fn2d();
  auto zero2 = [](double, double) { return 0.0; };
  if (method == "fbl") {
    const auto px = make_profile(ProfileKind::tanh_smooth, c.epsilon, c.x_L, c.x_R, c.delta_left,
                                 c.delta_right, c.pen, c.omega);
    const auto py = make_profile(ProfileKind::tanh_smooth, c.epsilon, c.y_L, c.y_R, c.delta_left,
                                 c.delta_right, c.pen, c.omega);
    const auto states = solve_twoway_fbl_2d(u0, zero2, c.speed, r.grid_x, r.grid_y, px, py, c.tau,
                                            c.T, c.snapshot_times, c.profile_tol);
    for (const auto& s : states) {
      r.times.push_back(s.t);
      r.u.push_back(s.u);
    }
  } else if (method == "pml1" || method == "pml2") {
    DampingProfile dx, dy;
    if (method == "pml1") {
      dx = make_tanh_damping(c.x_L, c.x_R, c.delta_left, c.delta_right, c.pen, c.omega);
      dy = make_tanh_damping(c.y_L, c.y_R, c.delta_left, c.delta_right, c.pen, c.omega);
    } else {
      dx = make_linear_damping(c.x_L, c.x_R, c.delta_left, c.delta_right, c.eta);
      dy = make_linear_damping(c.y_L, c.y_R, c.delta_left, c.delta_right, c.eta);
    }
    const auto states =
        solve_wave2d_pml(method == "pml1" ? Pml2DVariant::pml1 : Pml2DVariant::pml2, u0, zero2,
                         c.speed, r.grid_x, r.grid_y, dx, dy, c.tau, c.T, c.snapshot_times);
    for (const auto& s : states) {
      r.times.push_back(s.t);
      r.u.push_back(s.u);
    }
  } else {
    throw std::invalid_argument("config: wave2d supports methods fbl, pml1, pml2");
  }
  return r;
}

// interior max error of a 2D run against the big-domain reference
std::vector<double> wave2d_errors(const SimulationConfig& c, const Wave2DRun& r,
                                  const Reference2DResult& ref) {
  const double mx = c.delta_left > 0.0 || c.delta_right > 0.0 ? c.pen : 0.0;
  std::vector<double> linf;
  for (size_t k = 0; k < r.times.size(); ++k) {
    double worst = 0.0;
    for (int i = 0; i <= r.grid_x.P; ++i)
      for (int j = 0; j <= r.grid_y.P; ++j) {
        const double x = r.grid_x.nodes[i], y = r.grid_y.nodes[j];
        if (x < c.x_L + mx || x > c.x_R - mx || y < c.y_L + mx || y > c.y_R - mx) continue;
        worst = std::max(worst, std::abs(r.u[k](i, j) - ref.fields[k](i, j)));
      }
    linf.push_back(worst);
  }
  return linf;
}

int run_wave2d(const SimulationConfig& c, const std::string& method, const std::string& prefix) {
  const auto r = solve_wave2d(c, method);
  const auto ref = reference_2d(c.ic.fn2d(), [](double, double) { return 0.0; }, c.speed,
                                c.ref_lo, c.ref_hi, c.ref_P, c.ref_tau, r.times, r.grid_x.nodes,
                                r.grid_y.nodes);
  for (size_t k = 0; k < r.times.size(); ++k) {
    write_snapshot_2d(c.out_dir, prefix + "snapshot_t" + time_tag(r.times[k]) + ".csv", r.grid_x,
                      r.grid_y, r.u[k]);
    write_snapshot_2d(c.out_dir, prefix + "reference_t" + time_tag(r.times[k]) + ".csv", r.grid_x,
                      r.grid_y, ref.fields[k]);
  }
  const auto linf = wave2d_errors(c, r, ref);
  auto out = open_out(c.out_dir, prefix + "errors.csv");
  out << "t,linf_interior\n";
  for (size_t k = 0; k < r.times.size(); ++k)
    out << fmt(r.times[k]) << ',' << fmt(linf[k]) << '\n';
  return 0;
}

template <class F>
int guarded(const SimulationConfig& c, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const int rc = body();
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
    write_manifest(c, wall);
    return rc;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int run(const SimulationConfig& c) {
  return guarded(c, [&]() {
    if (c.problem == "oneway") return run_oneway(c);
    if (c.problem == "wave1d") return run_wave1d(c);
    if (c.problem == "wave2d") {
      const std::string method = c.method == "fbl" || c.method == "pml1" || c.method == "pml2"
                                     ? c.method
                                     : throw std::invalid_argument("config: bad wave2d method");
      return run_wave2d(c, method, "");
    }
    throw std::invalid_argument("config: bad problem");
  });
}

int run_prefine(const SimulationConfig& c, const std::vector<int>& P_list) {
  return guarded(c, [&]() {
    OneWayStudyConfig sc;
    sc.u0 = c.ic.fn1d();
    sc.speed = c.speed;
    sc.x_L = c.x_L;
    sc.x_R = c.x_R;
    sc.delta = c.delta_right;
    sc.pen = c.pen;
    sc.omega = c.omega;
    sc.epsilon = c.epsilon;
    sc.tau = c.tau;
    sc.t_eval = c.snapshot_times.empty() ? 6.0 : c.snapshot_times.back();
    sc.margin = c.pen;
    StudyFormulation f = StudyFormulation::fbl;
    if (c.method == "pml-intadv") f = StudyFormulation::int_adv_pml;
    if (c.method == "pml-fracdiff") f = StudyFormulation::frac_diff_pml;
    const auto rows = p_refinement_study(f, P_list, sc);
    auto out = open_out(c.out_dir, "prefine.csv");
    out << "P,linf\n";
    for (const auto& row : rows) out << row.P << ',' << fmt(row.linf) << '\n';
    return 0;
  });
}

int run_layers(const SimulationConfig& c,
               const std::vector<std::array<double, 3>>& variants) {
  return guarded(c, [&]() {
    OneWayStudyConfig sc;
    sc.u0 = c.ic.fn1d();
    sc.speed = c.speed;
    sc.x_L = c.x_L;
    sc.x_R = c.x_R;
    sc.delta = c.delta_right;
    sc.pen = c.pen;
    sc.omega = c.omega;
    sc.epsilon = c.epsilon;
    sc.tau = c.tau;
    sc.t_eval = c.snapshot_times.empty() ? 6.0 : c.snapshot_times.back();
    sc.margin = c.pen;
    const auto rows = layer_characterization_study(sc, c.P, variants);
    auto out = open_out(c.out_dir, "layers.csv");
    out << "delta,pen,omega,linf\n";
    for (const auto& r : rows)
      out << fmt(r.delta) << ',' << fmt(r.pen) << ',' << fmt(r.omega) << ',' << fmt(r.linf)
          << '\n';
    return 0;
  });
}

int run_compare(const SimulationConfig& c) {
  return guarded(c, [&]() {
    if (c.problem != "wave2d")
      throw std::invalid_argument("compare: wave2d only");
    for (const std::string m : {"fbl", "pml1", "pml2"}) run_wave2d(c, m, m + "_");
    return 0;
  });
}

}  // namespace fbl
