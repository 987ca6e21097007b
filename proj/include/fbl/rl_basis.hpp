#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fbl/grid.hpp"
#include "fbl/jacobi.hpp"

namespace fbl {

enum class Side { left, right };

// Variable-order Riemann-Liouville derivatives of the Jacobi basis on [-1,1]:
//   left:  D^mu p_k evaluated from -1, right: D^mu p_k evaluated toward +1.
// Returns values for k = 0..kmax at the point xhat.  Valid for mu in (-1, 2];
// xhat must lie strictly inside the operator's interval when mu > 0.
std::vector<double> rl_jacobi_derivs(double a, double b, double mu, double xhat, int kmax,
                                     Side side);

// Same, reusing a precomputed recurrence-coefficient cache.
std::vector<double> rl_jacobi_derivs(const JacobiRecurrence& rc, double a, double b, double mu,
                                     double xhat, int kmax, Side side);

// Per-node table of RL derivatives of the basis, rows = interior nodes
// 1..P-1, cols = basis index 0..P.
struct BasisDerivTable {
  std::vector<double> alpha_values;  // order at each interior node
  Eigen::MatrixXd deriv_left;        // empty unless the left side was built
  Eigen::MatrixXd deriv_right;       // empty unless the right side was built
  JacobiRecurrence coeffs;
};

// Orders must lie in (1, 2]; alpha_at_nodes has one entry per interior node.
BasisDerivTable rl_deriv_basis(const CollocationGrid1D& grid,
                               const std::vector<double>& alpha_at_nodes, Side side);

// Independent oracle: exact RL derivative of a polynomial given by its
// monomial coefficients in (x - x_start) for the left side or (x_end - x)
// for the right side, via the fractional power rule
//   D^alpha s^k = Gamma(k+1)/Gamma(k+1-alpha) s^{k-alpha}.
// Degree capped at 30; x must be strictly inside the operator's interval.
double rl_oracle(const std::vector<double>& poly_coeffs, double alpha, double x, double x_start,
                 double x_end, Side side);

// Monomial coefficients of p_k^{a,b} in powers of (x+1) (left) or (1-x) (right),
// for use with rl_oracle.
std::vector<double> jacobi_shifted_monomials(int k, double a, double b, Side side);

}  // namespace fbl
