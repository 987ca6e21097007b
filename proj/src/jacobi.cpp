#include "fbl/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace fbl {

double rgamma(double z) {
  if (z > 0.5) return 1.0 / std::tgamma(z);
  if (z == std::floor(z)) return 0.0;  // poles of Gamma
  // Reflection 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi.
  return std::tgamma(1.0 - z) * std::sin(M_PI * z) / M_PI;
}

namespace {

void check_ab(double a, double b) {
  if (a <= -1.0 || b <= -1.0)
    throw std::domain_error("jacobi: parameters a, b must be > -1");
}

}  // namespace

std::vector<double> jacobi_poly_all(int kmax, double a, double b, double x) {
  check_ab(a, b);
  std::vector<double> p(static_cast<size_t>(kmax) + 1);
  p[0] = 1.0;
  if (kmax == 0) return p;
  p[1] = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
  for (int j = 1; j < kmax; ++j) {
    const double j2 = 2.0 * j + a + b;
    const double A = (j2 + 1.0) * (j2 + 2.0) / (2.0 * (j + 1.0) * (j + a + b + 1.0));
    const double B = (b * b - a * a) * (j2 + 1.0) / (2.0 * (j + 1.0) * (j + a + b + 1.0) * j2);
    const double C = (j + a) * (j + b) * (j2 + 2.0) / ((j + 1.0) * (j + a + b + 1.0) * j2);
    p[j + 1] = (A * x - B) * p[j] - C * p[j - 1];
  }
  return p;
}

double jacobi_poly(int n, double a, double b, double x) {
  check_ab(a, b);
  if (n < 0) return 0.0;
  if (x == 1.0) return jacobi_at_plus_one(n, a, b).back();
  if (x == -1.0) return jacobi_at_minus_one(n, a, b).back();
  return jacobi_poly_all(n, a, b, x).back();
}

std::vector<double> jacobi_at_plus_one(int kmax, double a, double b) {
  (void)b;
  std::vector<double> v(static_cast<size_t>(kmax) + 1);
  v[0] = 1.0;
  for (int k = 1; k <= kmax; ++k) v[k] = v[k - 1] * (k + a) / k;
  return v;
}

std::vector<double> jacobi_at_minus_one(int kmax, double a, double b) {
  (void)a;
  std::vector<double> v(static_cast<size_t>(kmax) + 1);
  v[0] = 1.0;
  for (int k = 1; k <= kmax; ++k) v[k] = -v[k - 1] * (k + b) / k;
  return v;
}

double jacobi_poly_deriv(int n, double a, double b, double x) {
  if (n == 0) return 0.0;
  return 0.5 * (n + a + b + 1.0) * jacobi_poly(n - 1, a + 1.0, b + 1.0, x);
}

double jacobi_poly_deriv2(int n, double a, double b, double x) {
  if (n <= 1) return 0.0;
  return 0.25 * (n + a + b + 1.0) * (n + a + b + 2.0) *
         jacobi_poly(n - 2, a + 2.0, b + 2.0, x);
}

double jacobi_norm(int k, double a, double b) {
  // log form: the raw gamma products overflow past k ~ 85
  const double lg = (a + b + 1.0) * std::log(2.0) + std::lgamma(k + a + 1.0) +
                    std::lgamma(k + b + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(k + a + b + 1.0);
  return std::exp(lg) / (2.0 * k + a + b + 1.0);
}

JacobiRecurrence jacobi_recurrence(int jmax, double a, double b) {
  check_ab(a, b);
  JacobiRecurrence r;
  const size_t n = static_cast<size_t>(jmax) + 1;
  r.A.resize(n);
  r.B.resize(n);
  r.C.resize(n);
  r.Ah.resize(n);
  r.Bh.resize(n);
  r.Ch.resize(n);

  r.A[0] = 0.5 * (a + b + 2.0);
  r.B[0] = 0.5 * (b - a);
  r.C[0] = 0.0;
  r.Ah[0] = 0.0;  // multiplies p_{-1}, never used
  r.Bh[0] = (b - a) / (a + b + 2.0);
  r.Ch[0] = 2.0 / (a + b + 2.0);

  for (int j = 1; j <= jmax; ++j) {
    const double j2 = 2.0 * j + a + b;
    r.A[j] = (j2 + 1.0) * (j2 + 2.0) / (2.0 * (j + 1.0) * (j + a + b + 1.0));
    r.B[j] = (b * b - a * a) * (j2 + 1.0) / (2.0 * (j + 1.0) * (j + a + b + 1.0) * j2);
    r.C[j] = (j + a) * (j + b) * (j2 + 2.0) / ((j + 1.0) * (j + a + b + 1.0) * j2);
    r.Ah[j] = -2.0 * (j + a) * (j + b) / ((j + a + b) * j2 * (j2 + 1.0));
    r.Bh[j] = 2.0 * (a - b) / (j2 * (j2 + 2.0));
    r.Ch[j] = 2.0 * (j + a + b + 1.0) / ((j2 + 1.0) * (j2 + 2.0));
  }
  return r;
}

}  // namespace fbl
