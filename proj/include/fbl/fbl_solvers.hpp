#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fbl/frac_ops.hpp"
#include "fbl/grid.hpp"
#include "fbl/reference.hpp"
#include "fbl/vorder.hpp"

namespace fbl {

enum class Travel { leftward, rightward };

// All 1D snapshots carry full-grid nodal values (P+1), with the trimmed
// Dirichlet nodes holding exact zeros.
struct Snapshot1D {
  double t = 0.0;
  Eigen::VectorXd u;
};

struct TwoWaySnapshot1D {
  double t = 0.0;
  Eigen::VectorXd V, W;  // characteristic fields, full grid
  Eigen::VectorXd u;     // reconstructed via the running time integral of u_t
};

// One-way advection at the given speed toward the buffered side, marched by
// Crank-Nicolson on the variable-order operator.  The profile must have its
// layer on the outflow side only, and u0 must vanish (<= 1e-10) at both
// extended-domain endpoints.
std::vector<Snapshot1D> solve_oneway_fbl(Travel direction, const ScalarFn1D& u0, double speed,
                                         const CollocationGrid1D& grid,
                                         const VariableOrderProfile& profile, double tau, double T,
                                         const std::vector<double>& snapshot_times);

// Characteristic splitting of the wave system (v, w) = (u_t, c u_x) into
// independently advected fields, sampled on the full grid:
// V = sqrt(2)/2 (c u0' - phi), W = sqrt(2)/2 (phi + c u0').
void split_wave_1d(const ScalarFn1D& u0, const ScalarFn1D& phi, double c,
                   const CollocationGrid1D& grid, Eigen::VectorXd& V0, Eigen::VectorXd& W0);

// Two-way 1D wave solve: V and W marched independently by Crank-Nicolson
// with the right- and left-sided variable-order operators; u accumulated by
// the trapezoidal rule on u_t = sqrt(2)/2 (W - V).
std::vector<TwoWaySnapshot1D> solve_twoway_fbl_1d(const ScalarFn1D& u0, const ScalarFn1D& phi,
                                                  double c, const CollocationGrid1D& grid,
                                                  const VariableOrderProfile& prof_alpha,
                                                  const VariableOrderProfile& prof_beta,
                                                  double tau, double T,
                                                  const std::vector<double>& snapshot_times,
                                                  double validation_tol = 1e-3);

// Reconstruction paths for u.  The time path integrates a per-step history of
// u_t samples by the trapezoidal rule; the space path integrates
// u_x = w / c through the exact partial integrals of the interpolant.
Eigen::VectorXd reconstruct_u_time(const std::vector<Eigen::VectorXd>& ut_history, double tau,
                                   const Eigen::VectorXd& u0_nodes);
Eigen::VectorXd reconstruct_u_space(const Eigen::VectorXd& w_full, double c,
                                    const CollocationGrid1D& grid);

struct Snapshot2D {
  double t = 0.0;
  // full-grid arrays, rows follow x nodes, columns follow y nodes
  Eigen::MatrixXd v, w1, w2;
  Eigen::MatrixXd u;  // running time integral of v plus u0
};

// Coupled first-order 2D system (v, w1, w2) = (u_t, c u_x, c u_y) marched by
// two-step Adams-Bashforth with the half-sum/half-difference operators.
std::vector<Snapshot2D> solve_twoway_fbl_2d(const ScalarFn2D& u0, const ScalarFn2D& phi, double c,
                                            const CollocationGrid1D& grid_x,
                                            const CollocationGrid1D& grid_y,
                                            const VariableOrderProfile& prof_x,
                                            const VariableOrderProfile& prof_y, double tau,
                                            double T, const std::vector<double>& snapshot_times,
                                            double validation_tol = 1e-2);

}  // namespace fbl
