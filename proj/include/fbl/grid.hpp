#pragma once

#include <vector>

namespace fbl {

// Mapped Jacobi-Gauss-Lobatto collocation grid on [x_lo, x_hi].
// nodes[0] = x_lo, nodes[P] = x_hi; ref_nodes are the corresponding
// reference coordinates in [-1,1]; weights are the JGL quadrature weights
// on the reference interval.
struct CollocationGrid1D {
  double x_lo = 0.0;
  double x_hi = 0.0;
  int P = 0;
  double a = 0.0;
  double b = 0.0;
  std::vector<double> nodes;
  std::vector<double> ref_nodes;
  std::vector<double> weights;

  double half_length() const { return 0.5 * (x_hi - x_lo); }
  double to_reference(double x) const { return (x - x_lo) / half_length() - 1.0; }
  double to_physical(double xhat) const { return x_lo + half_length() * (xhat + 1.0); }
};

// JGL grid with P+1 nodes: endpoints plus the roots of d/dx p_P^{a,b}.
// Interior roots by Newton iteration from Chebyshev-Lobatto initial guesses;
// weights by the interpolatory moment conditions.
CollocationGrid1D jgl_grid(int P, double a, double b, double x_lo, double x_hi);

}  // namespace fbl
