#include "fbl/grid.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fbl/jacobi.hpp"

namespace fbl {

CollocationGrid1D jgl_grid(int P, double a, double b, double x_lo, double x_hi) {
  if (P < 2) throw std::invalid_argument("jgl_grid: P must be >= 2");
  if (!(x_lo < x_hi)) throw std::invalid_argument("jgl_grid: x_lo must be < x_hi");
  if (a <= -1.0 || b <= -1.0) throw std::domain_error("jgl_grid: a, b must be > -1");

  CollocationGrid1D g;
  g.x_lo = x_lo;
  g.x_hi = x_hi;
  g.P = P;
  g.a = a;
  g.b = b;
  g.ref_nodes.resize(P + 1);
  g.ref_nodes[0] = -1.0;
  g.ref_nodes[P] = 1.0;

  // Interior nodes: roots of p_{P-1}^{a+1,b+1}, i.e. of d/dx p_P^{a,b}.
  const int max_iter = 100;
  const double tol = 1e-14;
  for (int j = 1; j < P; ++j) {
    double x = -std::cos(M_PI * j / P);  // Chebyshev-Lobatto guess
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
      const double f = jacobi_poly(P - 1, a + 1.0, b + 1.0, x);
      const double df = jacobi_poly_deriv(P - 1, a + 1.0, b + 1.0, x);
      const double dx = f / df;
      x -= dx;
      if (std::abs(dx) < tol) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("jgl_grid: Newton iteration did not converge for node " +
                               std::to_string(j));
    g.ref_nodes[j] = x;
  }
  if (!std::is_sorted(g.ref_nodes.begin(), g.ref_nodes.end()))
    throw std::runtime_error("jgl_grid: nodes not strictly increasing");

  // Interpolatory weights: sum_j p_k(x_j) w_j = mass * delta_{k0}, k = 0..P.
  Eigen::MatrixXd V(P + 1, P + 1);
  for (int j = 0; j <= P; ++j) {
    const auto pk = jacobi_poly_all(P, a, b, g.ref_nodes[j]);
    for (int k = 0; k <= P; ++k) V(k, j) = pk[k];
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(P + 1);
  rhs(0) = jacobi_norm(0, a, b);
  Eigen::VectorXd w = V.partialPivLu().solve(rhs);
  g.weights.assign(w.data(), w.data() + P + 1);

  g.nodes.resize(P + 1);
  for (int j = 0; j <= P; ++j) g.nodes[j] = g.to_physical(g.ref_nodes[j]);
  g.nodes[0] = x_lo;
  g.nodes[P] = x_hi;
  return g;
}

}  // namespace fbl
