#include "fbl/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "fbl/frac_ops.hpp"

namespace fbl {

double exact_oneway(const ScalarFn1D& u0, double V, double x, double t) {
  return u0(x + V * t);
}

double exact_dalembert(const ScalarFn1D& u0, double x, double t, double c) {
  return 0.5 * (u0(x + c * t) + u0(x - c * t));
}

Eigen::MatrixXd barycentric_interp_matrix(const std::vector<double>& src_nodes,
                                          const std::vector<double>& targets) {
  const int n = static_cast<int>(src_nodes.size());
  if (n < 2) throw std::invalid_argument("barycentric_interp_matrix: need at least two nodes");

  // barycentric weights 1 / prod_{k != j} (x_j - x_k), rescaled to avoid
  // overflow on wide domains
  std::vector<double> w(n, 1.0);
  const double scale = 4.0 / (src_nodes.back() - src_nodes.front());
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k)
      if (k != j) w[j] *= (src_nodes[j] - src_nodes[k]) * scale;
    w[j] = 1.0 / w[j];
  }

  Eigen::MatrixXd M(targets.size(), n);
  for (size_t i = 0; i < targets.size(); ++i) {
    const double x = targets[i];
    int hit = -1;
    for (int j = 0; j < n; ++j)
      if (x == src_nodes[j]) hit = j;
    if (hit >= 0) {
      M.row(i).setZero();
      M(i, hit) = 1.0;
      continue;
    }
    double denom = 0.0;
    for (int j = 0; j < n; ++j) denom += w[j] / (x - src_nodes[j]);
    for (int j = 0; j < n; ++j) M(i, j) = (w[j] / (x - src_nodes[j])) / denom;
  }
  return M;
}

Reference2DResult reference_2d(const ScalarFn2D& u0, const ScalarFn2D& phi, double c, double lo,
                               double hi, int P_ref, double tau_ref,
                               const std::vector<double>& snapshot_times,
                               const std::vector<double>& target_x,
                               const std::vector<double>& target_y) {
  if (!(hi > lo)) throw std::invalid_argument("reference_2d: bad domain");
  if (!(tau_ref > 0.0)) throw std::invalid_argument("reference_2d: tau_ref must be positive");
  const auto g = jgl_grid(P_ref, 0.0, 0.0, lo, hi);
  const int P = g.P;
  const double center = 0.5 * (lo + hi), half = 0.5 * (hi - lo);

  Eigen::MatrixXd U(P + 1, P + 1), V(P + 1, P + 1);
  double support = 0.0;
  for (int i = 0; i <= P; ++i)
    for (int j = 0; j <= P; ++j) {
      U(i, j) = u0(g.nodes[i], g.nodes[j]);
      V(i, j) = phi(g.nodes[i], g.nodes[j]);
      if (std::abs(U(i, j)) > 1e-10 || std::abs(V(i, j)) > 1e-10)
        support = std::max(support, std::hypot(g.nodes[i] - center, g.nodes[j] - center));
    }
  double t_max = 0.0;
  for (double t : snapshot_times) t_max = std::max(t_max, t);
  if (c * t_max + support >= half)
    throw std::invalid_argument("reference_2d: wave reaches the big-domain boundary by t = " +
                                std::to_string(t_max));

  const Eigen::MatrixXd D2full = second_derivative_matrix(g);
  const Eigen::MatrixXd D2 = D2full.block(1, 1, P - 1, P - 1);
  const Eigen::MatrixXd Mx = barycentric_interp_matrix(g.nodes, target_x);
  const Eigen::MatrixXd My = barycentric_interp_matrix(g.nodes, target_y);

  // interior unknowns, homogeneous Dirichlet rim
  Eigen::MatrixXd u_prev = U.block(1, 1, P - 1, P - 1);
  const Eigen::MatrixXd lap0 = D2 * u_prev + u_prev * D2.transpose();
  Eigen::MatrixXd u_cur = u_prev + tau_ref * V.block(1, 1, P - 1, P - 1) +
                          0.5 * tau_ref * tau_ref * c * c * lap0;

  Reference2DResult out;
  std::vector<long> snap_steps;
  for (double t : snapshot_times) snap_steps.push_back(std::lround(t / tau_ref));
  long n_max = 0;
  for (long s : snap_steps) n_max = std::max(n_max, s);

  auto record = [&](long n, const Eigen::MatrixXd& u) {
    for (size_t k = 0; k < snap_steps.size(); ++k)
      if (snap_steps[k] == n) {
        Eigen::MatrixXd full = Eigen::MatrixXd::Zero(P + 1, P + 1);
        full.block(1, 1, P - 1, P - 1) = u;
        out.times.push_back(snapshot_times[k]);
        out.fields.push_back(Mx * full * My.transpose());
      }
  };

  record(0, u_prev);
  if (n_max >= 1) record(1, u_cur);
  const double fac = tau_ref * tau_ref * c * c;
  for (long n = 2; n <= n_max; ++n) {
    Eigen::MatrixXd u_next =
        2.0 * u_cur - u_prev + fac * (D2 * u_cur + u_cur * D2.transpose());
    u_prev.swap(u_cur);
    u_cur.swap(u_next);
    record(n, u_cur);
  }
  return out;
}

}  // namespace fbl
