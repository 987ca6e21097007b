#include "fbl/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "fbl/fbl_solvers.hpp"
#include "fbl/pml_baselines.hpp"

namespace fbl {

InteriorRegion1D interior_region(const CollocationGrid1D& grid, double x_L, double x_R,
                                 double margin_left, double margin_right) {
  InteriorRegion1D r;
  r.lo = x_L + margin_left;
  r.hi = x_R - margin_right;
  if (!(r.hi > r.lo)) throw std::invalid_argument("interior_region: empty region");
  for (int i = 0; i <= grid.P; ++i)
    if (grid.nodes[i] >= r.lo && grid.nodes[i] <= r.hi) r.node_indices.push_back(i);
  if (r.node_indices.empty()) throw std::invalid_argument("interior_region: no nodes in region");
  return r;
}

double interior_error(const Eigen::VectorXd& u_full, const ScalarFn1D& reference,
                      const CollocationGrid1D& grid, const InteriorRegion1D& region,
                      Eigen::VectorXd* pointwise) {
  if (u_full.size() != grid.P + 1)
    throw std::invalid_argument("interior_error: full-grid field required");
  Eigen::VectorXd pw(region.node_indices.size());
  for (size_t k = 0; k < region.node_indices.size(); ++k) {
    const int i = region.node_indices[k];
    pw(k) = std::abs(u_full(i) - reference(grid.nodes[i]));
  }
  if (pointwise) *pointwise = pw;
  return pw.maxCoeff();
}

double energy_l2(const Eigen::VectorXd& u_full, const InteriorRegion1D& region,
                 const CollocationGrid1D& grid) {
  if (u_full.size() != grid.P + 1)
    throw std::invalid_argument("energy_l2: full-grid field required");
  double acc = 0.0;
  const double h = grid.half_length();
  for (int i : region.node_indices) acc += h * grid.weights[i] * u_full(i) * u_full(i);
  return std::sqrt(acc);
}

namespace {

double oneway_linf_at_eval(StudyFormulation formulation, int P, const OneWayStudyConfig& c,
                           double delta, double pen, double omega) {
  const auto grid = jgl_grid(P, 0.0, 0.0, c.x_L, c.x_R + delta);
  const std::vector<double> snaps{c.t_eval};
  std::vector<Snapshot1D> states;
  if (formulation == StudyFormulation::fbl) {
    const auto prof =
        make_profile(ProfileKind::tanh_smooth, c.epsilon, c.x_L, c.x_R, 0.0, delta, pen, omega);
    states = solve_oneway_fbl(Travel::rightward, c.u0, c.speed, grid, prof, c.tau, c.t_eval, snaps);
  } else {
    const auto damping = make_tanh_damping(c.x_L, c.x_R, 0.0, delta, pen, omega);
    const auto variant = formulation == StudyFormulation::int_adv_pml
                             ? OneWayPmlVariant::int_adv
                             : OneWayPmlVariant::frac_diff;
    states = solve_oneway_pml(variant, c.u0, grid, damping, c.epsilon, c.tau, c.t_eval, snaps);
  }
  const auto region = interior_region(grid, c.x_L, c.x_R, 0.0, c.margin);
  const double t = c.t_eval, speed = c.speed;
  const auto& u0 = c.u0;
  auto ref = [&](double x) { return u0(x - speed * t); };
  return interior_error(states.back().u, ref, grid, region);
}

}  // namespace

std::vector<PRefinementRow> p_refinement_study(StudyFormulation formulation,
                                               const std::vector<int>& P_list,
                                               const OneWayStudyConfig& config) {
  for (size_t i = 1; i < P_list.size(); ++i)
    if (P_list[i] <= P_list[i - 1])
      throw std::invalid_argument("p_refinement_study: P_list must be ascending");
  std::vector<PRefinementRow> rows;
  for (int P : P_list)
    rows.push_back({P, oneway_linf_at_eval(formulation, P, config, config.delta, config.pen,
                                           config.omega)});
  return rows;
}

std::vector<LayerVariantResult> layer_characterization_study(
    const OneWayStudyConfig& base, int P,
    const std::vector<std::array<double, 3>>& variants) {
  std::vector<LayerVariantResult> out;
  for (const auto& v : variants) {
    LayerVariantResult r;
    r.delta = v[0];
    r.pen = v[1];
    r.omega = v[2];
    r.linf = oneway_linf_at_eval(StudyFormulation::fbl, P, base, r.delta, r.pen, r.omega);
    out.push_back(r);
  }
  return out;
}

}  // namespace fbl
