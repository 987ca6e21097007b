#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fbl/fbl_solvers.hpp"
#include "fbl/grid.hpp"
#include "fbl/reference.hpp"

namespace fbl {

// Damping function sigma(x): zero in the interior, rising through the layer.
struct DampingProfile {
  enum class Kind { tanh_shaped, linear_ramp };
  Kind kind = Kind::tanh_shaped;
  double x_L = 0.0, x_R = 0.0;
  double layer_left = 0.0, layer_right = 0.0;
  double pen = 0.0, omega = 0.0;  // tanh_shaped: sigma = alpha(x) - 1 at eps = 0
  double eta = 0.0;               // linear_ramp: sigma = eta * depth / layer

  double eval(double x) const;
  double lo() const { return x_L - layer_left; }
  double hi() const { return x_R + layer_right; }
};

DampingProfile make_tanh_damping(double x_L, double x_R, double layer_left, double layer_right,
                                 double pen, double omega);
DampingProfile make_linear_damping(double x_L, double x_R, double layer_left, double layer_right,
                                   double eta);

// The three absorbing-layer formulations compared against the buffer layer in
// the one-way setting: integer advection with damping, fractional advection
// of order 1 - eps with damping, and fractional diffusion of order 1 + eps
// with damping.
enum class OneWayPmlVariant { int_adv, frac_adv, frac_diff };

// Rightward-travelling one-way solve du/dt = L u - sigma u by Crank-Nicolson.
// The advection variants constrain only the inflow (left) node; the diffusion
// variant constrains both endpoints.
std::vector<Snapshot1D> solve_oneway_pml(OneWayPmlVariant variant, const ScalarFn1D& u0,
                                         const CollocationGrid1D& grid,
                                         const DampingProfile& damping, double epsilon, double tau,
                                         double T, const std::vector<double>& snapshot_times);

enum class Pml2DVariant { pml1, pml2 };

// Number of evolved field arrays in each 2D formulation (buffer layer: 3).
int pml2d_field_count(Pml2DVariant variant);

struct PmlSnapshot2D {
  double t = 0.0;
  Eigen::MatrixXd u;                    // reconstructed via the time integral of v
  std::vector<Eigen::MatrixXd> fields;  // evolved fields, full grid
};

// Damped split-field 2D wave systems marched by two-step Adams-Bashforth.
// Variant pml1 evolves (v, w1, w2, psi) with x-direction damping feeding the
// auxiliary field psi; variant pml2 evolves (v, w1, w2, Q, R) with damping in
// both directions.  Auxiliary fields start at zero.
std::vector<PmlSnapshot2D> solve_wave2d_pml(Pml2DVariant variant, const ScalarFn2D& u0,
                                            const ScalarFn2D& phi, double c,
                                            const CollocationGrid1D& grid_x,
                                            const CollocationGrid1D& grid_y,
                                            const DampingProfile& damping_x,
                                            const DampingProfile& damping_y, double tau, double T,
                                            const std::vector<double>& snapshot_times);

}  // namespace fbl
