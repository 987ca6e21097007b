#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fbl/frac_ops.hpp"
#include "fbl/reference.hpp"

using namespace fbl;

namespace {
double gauss(double x) { return std::exp(-x * x); }
}

TEST_CASE("exact one-way translates") {
  CHECK(exact_oneway(gauss, -1.0, 3.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(exact_oneway(gauss, -1.0, 0.7, 0.0) == doctest::Approx(gauss(0.7)).epsilon(1e-15));
  CHECK(exact_oneway(gauss, -1.0, 0.0, 3.0) == doctest::Approx(std::exp(-9.0)).epsilon(1e-12));
}

TEST_CASE("d'Alembert averages") {
  CHECK(exact_dalembert(gauss, 0.4, 0.0) == doctest::Approx(gauss(0.4)).epsilon(1e-15));
  CHECK(exact_dalembert(gauss, 0.0, 3.0) == doctest::Approx(std::exp(-9.0)).epsilon(1e-12));
  CHECK(exact_dalembert(gauss, 3.0, 3.0) ==
        doctest::Approx(0.5 * (std::exp(-36.0) + 1.0)).epsilon(1e-12));
}

TEST_CASE("d'Alembert satisfies the wave equation under spectral differentiation") {
  const auto g = jgl_grid(60, 0.0, 0.0, -6.0, 6.0);
  const Eigen::MatrixXd D2 = second_derivative_matrix(g);
  const double t = 0.8, dt = 1e-4;
  Eigen::VectorXd um(61), u0(61), up(61);
  for (int i = 0; i <= 60; ++i) {
    um(i) = exact_dalembert(gauss, g.nodes[i], t - dt);
    u0(i) = exact_dalembert(gauss, g.nodes[i], t);
    up(i) = exact_dalembert(gauss, g.nodes[i], t + dt);
  }
  const Eigen::VectorXd utt = (up - 2.0 * u0 + um) / (dt * dt);
  // central-difference-in-time floor dominates; spatial part is spectral
  CHECK((utt - D2 * u0).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("barycentric interpolation is exact on polynomials") {
  const auto g = jgl_grid(12, 0.0, 0.0, -3.0, 4.0);
  std::vector<double> targets{-2.7, -1.1, 0.0, 0.3, 2.9, 3.99, -3.0, 4.0};
  const Eigen::MatrixXd M = barycentric_interp_matrix(g.nodes, targets);
  Eigen::VectorXd f(13);
  for (int i = 0; i <= 12; ++i) f(i) = std::pow(g.nodes[i], 7) - 2.0 * g.nodes[i] + 1.0;
  const Eigen::VectorXd v = M * f;
  for (size_t k = 0; k < targets.size(); ++k) {
    const double exact = std::pow(targets[k], 7) - 2.0 * targets[k] + 1.0;
    CHECK(v(k) == doctest::Approx(exact).epsilon(1e-12).scale(std::max(1.0, std::abs(exact))));
  }
}

TEST_CASE("2D reference basics") {
  auto zero2 = [](double, double) { return 0.0; };
  auto u0 = [](double x, double y) { return std::exp(-5.0 * (x * x + y * y)); };
  std::vector<double> line;
  for (int i = -20; i <= 20; ++i) line.push_back(0.1 * i);

  SUBCASE("zero data stays zero") {
    const auto r = reference_2d(zero2, zero2, 1.0, -5.0, 5.0, 30, 1e-2, {0.5}, line, line);
    CHECK(r.fields[0].cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("containment check rejects late snapshots") {
    CHECK_THROWS_AS(reference_2d(u0, zero2, 1.0, -5.0, 5.0, 30, 1e-2, {4.5}, line, line),
                    std::invalid_argument);
  }

  SUBCASE("radial data: symmetry and the t=1 ring") {
    const auto r = reference_2d(u0, zero2, 1.0, -5.0, 5.0, 80, 2.5e-4, {1.0}, line, line);
    const Eigen::MatrixXd& F = r.fields[0];
    CHECK((F - F.transpose()).cwiseAbs().maxCoeff() <= 1e-8);
    // ring maximum at radius ~ c t = 1
    double best = 0.0, best_r = 0.0;
    for (int i = 0; i < F.rows(); ++i)
      for (int j = 0; j < F.cols(); ++j)
        if (std::abs(F(i, j)) > best) {
          best = std::abs(F(i, j));
          best_r = std::hypot(line[i], line[j]);
        }
    CHECK(best_r == doctest::Approx(1.0).epsilon(0.11));
  }

  SUBCASE("self-convergence in the reference time step") {
    const auto r1 = reference_2d(u0, zero2, 1.0, -5.0, 5.0, 60, 2e-4, {1.0}, line, line);
    const auto r2 = reference_2d(u0, zero2, 1.0, -5.0, 5.0, 60, 1e-4, {1.0}, line, line);
    CHECK((r1.fields[0] - r2.fields[0]).cwiseAbs().maxCoeff() <= 1e-6);
  }
}
