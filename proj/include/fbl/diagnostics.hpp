#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "fbl/grid.hpp"
#include "fbl/reference.hpp"
#include "fbl/vorder.hpp"

namespace fbl {

// Node set used for error reporting: the physical interior with a margin
// excluded next to each buffered side (penetration-band smearing there is by
// design).
struct InteriorRegion1D {
  double lo = 0.0, hi = 0.0;
  std::vector<int> node_indices;
};

InteriorRegion1D interior_region(const CollocationGrid1D& grid, double x_L, double x_R,
                                 double margin_left, double margin_right);

struct ErrorReport {
  std::vector<double> times;
  std::vector<double> linf;                 // per snapshot, over the region
  std::vector<Eigen::VectorXd> pointwise;   // |difference| at region nodes
  double region_lo = 0.0, region_hi = 0.0;
};

// Max and pointwise |u - ref| over the region nodes of a full-grid field.
double interior_error(const Eigen::VectorXd& u_full, const ScalarFn1D& reference,
                      const CollocationGrid1D& grid, const InteriorRegion1D& region,
                      Eigen::VectorXd* pointwise = nullptr);

// Quadrature-weighted L2 norm over the region nodes.
double energy_l2(const Eigen::VectorXd& u_full, const InteriorRegion1D& region,
                 const CollocationGrid1D& grid);

// Shared setup of the one-way refinement and layer studies (the rightward
// travelling Gaussian absorbed in a right-side layer).
struct OneWayStudyConfig {
  ScalarFn1D u0;
  double speed = 1.0;
  double x_L = -5.0, x_R = 5.0;
  double delta = 1.0, pen = 0.5, omega = 20.0;
  double epsilon = 1e-5;
  double tau = 1e-3;
  double t_eval = 6.0;
  double margin = 0.5;  // region trim next to the layer
};

enum class StudyFormulation { fbl, int_adv_pml, frac_diff_pml };

struct PRefinementRow {
  int P = 0;
  double linf = 0.0;
};

// One full simulation per P; interior max error against the translating
// exact solution at t_eval.
std::vector<PRefinementRow> p_refinement_study(StudyFormulation formulation,
                                               const std::vector<int>& P_list,
                                               const OneWayStudyConfig& config);

struct LayerVariantResult {
  double delta = 0.0, pen = 0.0, omega = 0.0;
  double linf = 0.0;
};

// Interior max error at t_eval for each (delta, pen, omega) layer variant.
std::vector<LayerVariantResult> layer_characterization_study(
    const OneWayStudyConfig& base, int P,
    const std::vector<std::array<double, 3>>& variants);

}  // namespace fbl
