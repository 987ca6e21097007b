#include "fbl/rl_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace fbl {

namespace {

// Chain of recursions: the order-mu recursion couples to order mu-1 through
// the product-rule expansion d^n/dx^n (x J^{n-mu} p_j) = x D^mu p_j + n D^{mu-1} p_j
// (left side; the right side picks up a sign on the second term).  The chain
// bottoms out at mu <= 0, where the recursion is the plain three-term
// recurrence under the fractional integral.
std::vector<double> rl_chain(const JacobiRecurrence& rc, double a, double b, double mu,
                             double xhat, int kmax, Side side) {
  const int n = (mu <= 0.0) ? 0 : static_cast<int>(std::ceil(mu));
  std::vector<double> lower;
  if (n >= 1) lower = rl_chain(rc, a, b, mu - 1.0, xhat, kmax, side);

  const double s = n - mu;  // in [0, 1)
  const double pw = (side == Side::left) ? (xhat + 1.0) : (1.0 - xhat);
  const double sgn = (side == Side::left) ? 1.0 : -1.0;
  const double rg1 = rgamma(1.0 - mu);
  const double rg2 = rgamma(2.0 - mu);
  const double powneg = std::pow(pw, -mu) * rg1;      // (pw)^{-mu} / Gamma(1-mu)
  const double powneg1 = std::pow(pw, 1.0 - mu) * rg2;

  std::vector<double> d(static_cast<size_t>(kmax) + 1);
  d[0] = powneg;
  if (kmax == 0) return d;
  if (side == Side::left)
    d[1] = 0.5 * (a + b + 2.0) * powneg1 - (b + 1.0) * powneg;
  else
    d[1] = -0.5 * (a + b + 2.0) * powneg1 + (a + 1.0) * powneg;

  const std::vector<double> pend = (side == Side::left) ? jacobi_at_minus_one(kmax, a, b)
                                                        : jacobi_at_plus_one(kmax, a, b);
  for (int j = 1; j < kmax; ++j) {
    const double denom = 1.0 + s * rc.A[j] * rc.Ch[j];
    const double prod = xhat * d[j] + sgn * n * (n >= 1 ? lower[j] : 0.0);
    const double corr =
        s * rc.A[j] * (rc.Ah[j] * pend[j - 1] + rc.Bh[j] * pend[j] + rc.Ch[j] * pend[j + 1]) *
        powneg / denom;
    d[j + 1] = (rc.A[j] / denom) * prod -
               ((rc.B[j] + s * rc.A[j] * rc.Bh[j]) / denom) * d[j] -
               ((rc.C[j] + s * rc.A[j] * rc.Ah[j]) / denom) * d[j - 1] + corr;
  }
  return d;
}

}  // namespace

std::vector<double> rl_jacobi_derivs(const JacobiRecurrence& rc, double a, double b, double mu,
                                     double xhat, int kmax, Side side) {
  if (mu <= -1.0 || mu > 2.0)
    throw std::domain_error("rl_jacobi_derivs: order must be in (-1, 2]");
  if (mu > 0.0) {
    const double pw = (side == Side::left) ? (xhat + 1.0) : (1.0 - xhat);
    if (pw <= 0.0)
      throw std::domain_error(
          "rl_jacobi_derivs: evaluation at the operator's singular endpoint");
  }
  return rl_chain(rc, a, b, mu, xhat, kmax, side);
}

std::vector<double> rl_jacobi_derivs(double a, double b, double mu, double xhat, int kmax,
                                     Side side) {
  const auto rc = jacobi_recurrence(kmax, a, b);
  return rl_jacobi_derivs(rc, a, b, mu, xhat, kmax, side);
}

BasisDerivTable rl_deriv_basis(const CollocationGrid1D& grid,
                               const std::vector<double>& alpha_at_nodes, Side side) {
  const int P = grid.P;
  if (static_cast<int>(alpha_at_nodes.size()) != P - 1)
    throw std::invalid_argument("rl_deriv_basis: need one order per interior node");
  for (double al : alpha_at_nodes)
    if (!(al > 1.0 && al <= 2.0))
      throw std::domain_error("rl_deriv_basis: orders must lie in (1, 2]");

  BasisDerivTable t;
  t.alpha_values = alpha_at_nodes;
  t.coeffs = jacobi_recurrence(P, grid.a, grid.b);
  Eigen::MatrixXd m(P - 1, P + 1);
  for (int i = 1; i < P; ++i) {
    const auto row = rl_jacobi_derivs(t.coeffs, grid.a, grid.b, alpha_at_nodes[i - 1],
                                      grid.ref_nodes[i], P, side);
    for (int k = 0; k <= P; ++k) {
      if (!std::isfinite(row[k]))
        throw std::runtime_error("rl_deriv_basis: non-finite derivative value");
      m(i - 1, k) = row[k];
    }
  }
  if (side == Side::left)
    t.deriv_left = std::move(m);
  else
    t.deriv_right = std::move(m);
  return t;
}

double rl_oracle(const std::vector<double>& poly_coeffs, double alpha, double x, double x_start,
                 double x_end, Side side) {
  if (poly_coeffs.size() > 31)
    throw std::invalid_argument("rl_oracle: polynomial degree exceeds 30");
  const double s = (side == Side::left) ? (x - x_start) : (x_end - x);
  if (s <= 0.0) throw std::domain_error("rl_oracle: x at or beyond the singular endpoint");
  double acc = 0.0;
  for (size_t k = 0; k < poly_coeffs.size(); ++k) {
    acc += poly_coeffs[k] * std::tgamma(k + 1.0) * rgamma(k + 1.0 - alpha) *
           std::pow(s, static_cast<double>(k) - alpha);
  }
  return acc;
}

std::vector<double> jacobi_shifted_monomials(int k, double a, double b, Side side) {
  // Three-term recurrence carried on coefficient vectors in the shifted
  // variable s = x+1 (left) or s = 1-x (right).
  std::vector<double> pm1{1.0};
  if (k == 0) return pm1;
  std::vector<double> p(2);
  if (side == Side::left) {
    p[0] = -(b + 1.0);
    p[1] = 0.5 * (a + b + 2.0);
  } else {
    p[0] = a + 1.0;
    p[1] = -0.5 * (a + b + 2.0);
  }
  const auto rc = jacobi_recurrence(k, a, b);
  const double xsgn = (side == Side::left) ? 1.0 : -1.0;   // x = xsgn*s + const
  const double xoff = (side == Side::left) ? -1.0 : 1.0;
  for (int j = 1; j < k; ++j) {
    std::vector<double> next(j + 2, 0.0);
    for (int m = 0; m <= j; ++m) {
      next[m + 1] += rc.A[j] * xsgn * p[m];
      next[m] += (rc.A[j] * xoff - rc.B[j]) * p[m];
    }
    for (size_t m = 0; m < pm1.size(); ++m) next[m] -= rc.C[j] * pm1[m];
    pm1 = std::move(p);
    p = std::move(next);
  }
  return p;
}

}  // namespace fbl
