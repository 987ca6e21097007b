#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fbl/steppers.hpp"

using namespace fbl;

TEST_CASE("Crank-Nicolson scalar amplification") {
  Eigen::MatrixXd A(1, 1);
  A(0, 0) = -1.0;
  CNOperator cn(A, 0.1);
  Eigen::VectorXd u(1);
  u(0) = 1.0;
  u = cn.step(u);
  CHECK(u(0) == doctest::Approx((1.0 - 0.05) / (1.0 + 0.05)).epsilon(1e-14));
  CHECK(u(0) == doctest::Approx(0.9047619).epsilon(1e-6));
}

TEST_CASE("Crank-Nicolson is A-stable on a stiff decay") {
  Eigen::MatrixXd A(1, 1);
  A(0, 0) = -1e6;
  CNOperator cn(A, 0.1);
  Eigen::VectorXd u(1);
  u(0) = 1.0;
  for (int n = 0; n < 50; ++n) u = cn.step(u);
  CHECK(std::abs(u(0)) <= 1.0);
}

TEST_CASE("Crank-Nicolson second order in tau") {
  // u' = -u, u(0) = 1, to t = 1; halving tau shrinks the error ~4x
  auto run = [](double tau) {
    Eigen::MatrixXd A(1, 1);
    A(0, 0) = -1.0;
    CNOperator cn(A, tau);
    Eigen::VectorXd u(1);
    u(0) = 1.0;
    const int steps = static_cast<int>(std::lround(1.0 / tau));
    for (int n = 0; n < steps; ++n) u = cn.step(u);
    return std::abs(u(0) - std::exp(-1.0));
  };
  const double e1 = run(0.02), e2 = run(0.01);
  CHECK(e1 / e2 >= 3.6);
  CHECK(e1 / e2 <= 4.4);
}

TEST_CASE("CNOperator rejects bad inputs and keeps a tight factorization") {
  Eigen::MatrixXd A = Eigen::MatrixXd::Random(8, 8);
  CHECK_THROWS_AS(CNOperator(A, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CNOperator(Eigen::MatrixXd::Zero(2, 3), 0.1), std::invalid_argument);
  CNOperator cn(A, 1e-3);
  CHECK(cn.factorization_residual() <= 1e-12);
  Eigen::VectorXd wrong(5);
  CHECK_THROWS_AS(cn.step(wrong), std::invalid_argument);
}

namespace {
struct ScalarRhs {
  double operator()(const Eigen::VectorXd& s) const { return 0.0; }
};
}  // namespace

TEST_CASE("AB2 first two steps on u' = -u, tau = 0.01") {
  auto rhs = [](const Eigen::VectorXd& s) { return Eigen::VectorXd(-s); };
  Ab2Stepper<Eigen::VectorXd, decltype(rhs)> ab(rhs, 0.01);
  Eigen::VectorXd s(1);
  s(0) = 1.0;
  s = ab.step(s);
  CHECK(s(0) == doctest::Approx(0.99).epsilon(1e-14));
  s = ab.step(s);
  // s2 = s1 + tau * rhs(1.5 s1 - 0.5 s0) = 0.99 - 0.01*(1.5*0.99 - 0.5)
  CHECK(s(0) == doctest::Approx(0.98015).epsilon(1e-14));
}

TEST_CASE("AB2 converges to the exact decay and is second order") {
  auto run = [](double tau) {
    auto rhs = [](const Eigen::VectorXd& s) { return Eigen::VectorXd(-s); };
    Ab2Stepper<Eigen::VectorXd, decltype(rhs)> ab(rhs, tau);
    Eigen::VectorXd s(1);
    s(0) = 1.0;
    const int steps = static_cast<int>(std::lround(1.0 / tau));
    for (int n = 0; n < steps; ++n) s = ab.step(s);
    return std::abs(s(0) - std::exp(-1.0));
  };
  CHECK(run(1e-4) <= 1e-6);
  const double e1 = run(0.002), e2 = run(0.001);
  CHECK(e1 / e2 >= 3.6);
  CHECK(e1 / e2 <= 4.4);
}
