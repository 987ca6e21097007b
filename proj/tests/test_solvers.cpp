#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fbl/diagnostics.hpp"
#include "fbl/fbl_solvers.hpp"
#include "fbl/pml_baselines.hpp"

using namespace fbl;

namespace {
double gauss(double x) { return std::exp(-x * x); }
double zero1(double) { return 0.0; }
}

TEST_CASE("one-way buffer-layer solve: zero data stays zero") {
  const auto grid = jgl_grid(40, 0.0, 0.0, -5.0, 6.0);
  const auto prof = make_profile(ProfileKind::tanh_smooth, 1e-5, -5.0, 5.0, 0.0, 1.0, 0.5, 20.0);
  const auto states =
      solve_oneway_fbl(Travel::rightward, zero1, 1.0, grid, prof, 1e-2, 0.2, {0.0, 0.2});
  CHECK(states.size() == 2);
  CHECK(states.back().u.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("one-way solve rejects mismatched direction and profile") {
  const auto grid = jgl_grid(40, 0.0, 0.0, -6.0, 5.0);
  const auto prof = make_profile(ProfileKind::tanh_smooth, 1e-5, -5.0, 5.0, 1.0, 0.0, 0.5, 20.0);
  CHECK_THROWS_AS(
      solve_oneway_fbl(Travel::rightward, zero1, 1.0, grid, prof, 1e-2, 0.1, {0.1}),
      std::invalid_argument);
  CHECK_NOTHROW(solve_oneway_fbl(Travel::leftward, zero1, 1.0, grid, prof, 1e-2, 0.1, {0.1}));
}

TEST_CASE("characteristic split identities") {
  const auto grid = jgl_grid(60, 0.0, 0.0, -6.0, 6.0);
  Eigen::VectorXd V0, W0;
  split_wave_1d(gauss, zero1, 1.0, grid, V0, W0);
  // phi = 0: both characteristics carry sqrt(2)/2 c u0'
  CHECK((V0 - W0).cwiseAbs().maxCoeff() <= 1e-14);
  Eigen::VectorXd du(61);
  for (int i = 0; i <= 60; ++i) du(i) = -2.0 * grid.nodes[i] * gauss(grid.nodes[i]);
  CHECK((V0 - std::sqrt(2.0) / 2.0 * du).cwiseAbs().maxCoeff() <= 1e-8);

  // recouple(split) is the identity on (v, w)
  const double r = std::sqrt(2.0) / 2.0;
  const double v_in = -0.37, w_in = 1.22;
  const double V = r * (w_in - v_in), W = r * (v_in + w_in);
  CHECK(r * (W - V) == doctest::Approx(v_in).epsilon(1e-14));
  CHECK(r * (V + W) == doctest::Approx(w_in).epsilon(1e-14));
}

TEST_CASE("reconstruction paths") {
  const auto grid = jgl_grid(20, 0.0, 0.0, -5.0, 6.0);
  Eigen::VectorXd u0n(21);
  for (int i = 0; i <= 20; ++i) u0n(i) = gauss(grid.nodes[i]);

  SUBCASE("zero u_t history returns u0") {
    std::vector<Eigen::VectorXd> hist(5, Eigen::VectorXd::Zero(21));
    CHECK((reconstruct_u_time(hist, 0.1, u0n) - u0n).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("constant u_t integrates exactly") {
    std::vector<Eigen::VectorXd> hist(11, Eigen::VectorXd::Constant(21, 0.7));
    const Eigen::VectorXd u = reconstruct_u_time(hist, 0.1, u0n);
    CHECK((u - (u0n.array() + 0.7).matrix()).cwiseAbs().maxCoeff() <= 1e-14);
  }
  SUBCASE("space path inverts c u_x") {
    const auto fine = jgl_grid(60, 0.0, 0.0, -5.0, 6.0);
    Eigen::VectorXd w(61);  // w = c u_x with u = exp(-x^2)
    const double c = 2.0;
    for (int i = 0; i <= 60; ++i)
      w(i) = -2.0 * c * fine.nodes[i] * gauss(fine.nodes[i]);
    const Eigen::VectorXd u = reconstruct_u_space(w, c, fine);
    double worst = 0.0;
    for (int i = 0; i <= 60; ++i)
      worst = std::max(worst, std::abs(u(i) - (gauss(fine.nodes[i]) - gauss(fine.x_lo))));
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("two-way 1D: mirror symmetry while pulses stay interior") {
  const int P = 120;
  const auto grid = jgl_grid(P, 0.0, 0.0, -6.0, 6.0);
  const auto prof = make_profile(ProfileKind::tanh_smooth, 1e-5, -5.0, 5.0, 1.0, 1.0, 0.5, 20.0);
  const auto states = solve_twoway_fbl_1d(gauss, zero1, 1.0, grid, prof, prof, 1e-3, 0.5, {0.5});
  const Eigen::VectorXd& u = states.back().u;
  // nodes are symmetric about 0; compare u(x) with u(-x)
  double worst = 0.0;
  for (int i = 0; i <= P; ++i) worst = std::max(worst, std::abs(u(i) - u(P - i)));
  CHECK(worst <= 1e-10);
}

TEST_CASE("integer advection with damping off matches the translating pulse") {
  const int P = 200;
  const auto grid = jgl_grid(P, 0.0, 0.0, -5.0, 6.0);
  const auto damping = make_linear_damping(-5.0, 5.0, 0.0, 1.0, 0.0);
  const auto states = solve_oneway_pml(OneWayPmlVariant::int_adv, gauss, grid, damping, 1e-5,
                                       1e-3, 3.0, {3.0});
  const auto region = interior_region(grid, -5.0, 5.0, 0.0, 0.5);
  auto ref = [](double x) { return gauss(x - 3.0); };
  CHECK(interior_error(states.back().u, ref, grid, region) <= 5e-5);
}

TEST_CASE("linear damping ramp midpoint value") {
  const auto d = make_linear_damping(-2.0, 2.0, 0.5, 0.5, 100.0);
  CHECK(d.eval(2.0 + 0.25) == doctest::Approx(50.0).epsilon(1e-14));
  CHECK(d.eval(0.0) == 0.0);
  CHECK(d.eval(1.999999) == 0.0);
}

TEST_CASE("tanh damping equals the order profile minus one at zero offset") {
  const auto d = make_tanh_damping(-5.0, 5.0, 0.0, 1.0, 0.5, 20.0);
  CHECK(d.eval(5.25) == doctest::Approx(0.5).epsilon(1e-14));  // band midpoint
  CHECK(d.eval(3.0) == 0.0);
  CHECK(d.eval(5.8) == 1.0);
}

TEST_CASE("2D damped systems: field counts and quiescent auxiliaries") {
  CHECK(pml2d_field_count(Pml2DVariant::pml1) == 4);
  CHECK(pml2d_field_count(Pml2DVariant::pml2) == 5);

  const int P = 24;
  const auto g = jgl_grid(P, 0.0, 0.0, -2.5, 2.5);
  auto u0 = [](double x, double y) { return std::exp(-5.0 * (x * x + y * y)); };
  auto zero2 = [](double, double) { return 0.0; };
  const auto off = make_linear_damping(-2.0, 2.0, 0.5, 0.5, 0.0);

  const auto s1 = solve_wave2d_pml(Pml2DVariant::pml1, u0, zero2, 1.0, g, g, off, off, 1e-3, 0.1,
                                   {0.1});
  const auto s2 = solve_wave2d_pml(Pml2DVariant::pml2, u0, zero2, 1.0, g, g, off, off, 1e-3, 0.1,
                                   {0.1});
  CHECK(s1.back().fields.size() == 4);
  CHECK(s2.back().fields.size() == 5);
  // psi is driven only through the damping, so it stays identically zero;
  // Q and R integrate w2 and w1 regardless but feed back only through sigma,
  // so with damping off both formulations evolve (v, w1, w2) identically
  CHECK(s1.back().fields[3].cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((s1.back().u - s2.back().u).cwiseAbs().maxCoeff() <= 1e-12);
  for (int k = 0; k < 3; ++k)
    CHECK((s1.back().fields[k] - s2.back().fields[k]).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("2D buffer-layer march reports divergence instead of returning garbage") {
  // the layer part of D+ acts as a stiff diffusion; at P = 50 the explicit
  // two-step march diverges for tau = 1e-3 and must say so
  const int P = 50;
  const auto g = jgl_grid(P, 0.0, 0.0, -2.5, 2.5);
  const auto prof = make_profile(ProfileKind::tanh_smooth, 1e-5, -2.0, 2.0, 0.5, 0.5, 0.25, 20.0);
  auto u0 = [](double x, double y) { return std::exp(-5.0 * (x * x + y * y)); };
  auto zero2 = [](double, double) { return 0.0; };
  CHECK_THROWS_AS(
      solve_twoway_fbl_2d(u0, zero2, 1.0, g, g, prof, prof, 1e-3, 0.5, {0.5}, 1e-2),
      std::runtime_error);
}

TEST_CASE("integer first-derivative matrix agrees with the fractional limit") {
  const int P = 40;
  const auto g = jgl_grid(P, 0.0, 0.0, -5.0, 6.0);
  const Eigen::MatrixXd D1 = first_derivative_matrix(g);
  std::vector<int> rows;
  for (int i = 1; i < P; ++i) rows.push_back(i);
  std::vector<double> alpha(rows.size(), 1.0 + 1e-12);
  // the right-sided operator tends to -d/dx
  const Eigen::MatrixXd DR = frac_diff_submatrix(g, alpha, Side::right, rows, rows);
  Eigen::VectorXd f(P - 1), df(P - 1);
  for (int i = 1; i < P; ++i) {
    f(i - 1) = gauss(g.nodes[i]);
    df(i - 1) = -2.0 * g.nodes[i] * gauss(g.nodes[i]);
  }
  const Eigen::MatrixXd D1i = D1.block(1, 1, P - 1, P - 1);
  // both paths differentiate the same interpolant: they agree far more
  // tightly than either matches the analytic derivative
  CHECK((-(DR * f) - D1i * f).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK((D1i * f - df).cwiseAbs().maxCoeff() <= 1e-4);
}
