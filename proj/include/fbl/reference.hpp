#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "fbl/grid.hpp"

namespace fbl {

using ScalarFn1D = std::function<double(double)>;
using ScalarFn2D = std::function<double(double, double)>;

// Translating-profile solution of the one-way equation u_t = V u_x:
// u(x, t) = u0(x + V t).
double exact_oneway(const ScalarFn1D& u0, double V, double x, double t);

// d'Alembert solution of the 1D wave equation with zero initial velocity:
// u(x, t) = (u0(x + c t) + u0(x - c t)) / 2.
double exact_dalembert(const ScalarFn1D& u0, double x, double t, double c = 1.0);

// Interpolation matrix M with (M f)(i) = interpolant of the nodal samples f
// evaluated at targets[i], via the barycentric form of the Lagrange
// interpolant on src_nodes.
Eigen::MatrixXd barycentric_interp_matrix(const std::vector<double>& src_nodes,
                                          const std::vector<double>& targets);

struct Reference2DResult {
  std::vector<double> times;
  // one field per snapshot; rows follow target_x, columns follow target_y
  std::vector<Eigen::MatrixXd> fields;
};

// High-resolution solution of u_tt = c^2 (u_xx + u_yy) on the square
// [lo, hi]^2 with spectral collocation in space and central differences in
// time, transferred onto the requested target points.  Snapshot times must be
// small enough that no wave content reaches the big-domain boundary
// (c t + initial support radius < half-width).
Reference2DResult reference_2d(const ScalarFn2D& u0, const ScalarFn2D& phi, double c, double lo,
                               double hi, int P_ref, double tau_ref,
                               const std::vector<double>& snapshot_times,
                               const std::vector<double>& target_x,
                               const std::vector<double>& target_y);

}  // namespace fbl
