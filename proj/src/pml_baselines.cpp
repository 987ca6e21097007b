#include "fbl/pml_baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "fbl/frac_ops.hpp"
#include "fbl/steppers.hpp"

namespace fbl {

double DampingProfile::eval(double x) const {
  if (x < lo() || x > hi()) throw std::domain_error("DampingProfile: x outside the domain");
  if (x >= x_L && x <= x_R) return 0.0;
  const double d = x > x_R ? x - x_R : x_L - x;
  const double layer = x > x_R ? layer_right : layer_left;
  if (kind == Kind::linear_ramp) return eta * d / layer;
  if (d > pen) return 1.0;
  return 0.5 + 0.5 * std::tanh(omega * (d - 0.5 * pen));
}

DampingProfile make_tanh_damping(double x_L, double x_R, double layer_left, double layer_right,
                                 double pen, double omega) {
  if (!(x_L < x_R)) throw std::invalid_argument("damping: x_L must be < x_R");
  if ((layer_left > 0.0 && pen >= layer_left) || (layer_right > 0.0 && pen >= layer_right) ||
      ((layer_left > 0.0 || layer_right > 0.0) && !(pen > 0.0 && omega > 0.0)))
    throw std::invalid_argument("damping: need 0 < pen < layer and positive slope");
  DampingProfile d;
  d.kind = DampingProfile::Kind::tanh_shaped;
  d.x_L = x_L;
  d.x_R = x_R;
  d.layer_left = layer_left;
  d.layer_right = layer_right;
  d.pen = pen;
  d.omega = omega;
  return d;
}

DampingProfile make_linear_damping(double x_L, double x_R, double layer_left, double layer_right,
                                   double eta) {
  if (!(x_L < x_R)) throw std::invalid_argument("damping: x_L must be < x_R");
  if (eta < 0.0) throw std::invalid_argument("damping: eta must be >= 0");
  DampingProfile d;
  d.kind = DampingProfile::Kind::linear_ramp;
  d.x_L = x_L;
  d.x_R = x_R;
  d.layer_left = layer_left;
  d.layer_right = layer_right;
  d.eta = eta;
  return d;
}

namespace {

std::vector<long> snapshot_steps(const std::vector<double>& times, double tau) {
  std::vector<long> steps;
  for (double t : times) {
    if (t < 0.0) throw std::invalid_argument("snapshot times must be nonnegative");
    steps.push_back(std::lround(t / tau));
  }
  return steps;
}

}  // namespace

std::vector<Snapshot1D> solve_oneway_pml(OneWayPmlVariant variant, const ScalarFn1D& u0,
                                         const CollocationGrid1D& grid,
                                         const DampingProfile& damping, double epsilon, double tau,
                                         double T, const std::vector<double>& snapshot_times) {
  if (std::abs(u0(grid.x_lo)) > 1e-10 || std::abs(u0(grid.x_hi)) > 1e-10)
    throw std::invalid_argument("solve_oneway_pml: u0 must vanish at the endpoints");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("solve_oneway_pml: epsilon in (0,1)");
  const int P = grid.P;

  // advection variants keep the outflow endpoint free (one boundary
  // condition); the diffusion variant is pinned at both ends
  std::vector<int> nodes;
  if (variant == OneWayPmlVariant::frac_diff)
    for (int i = 1; i < P; ++i) nodes.push_back(i);
  else
    for (int i = 1; i <= P; ++i) nodes.push_back(i);
  const int n = static_cast<int>(nodes.size());

  Eigen::MatrixXd A;
  switch (variant) {
    case OneWayPmlVariant::int_adv: {
      const Eigen::MatrixXd D1 = first_derivative_matrix(grid);
      A.resize(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = -D1(nodes[i], nodes[j]);
      break;
    }
    case OneWayPmlVariant::frac_adv: {
      std::vector<double> alpha(nodes.size(), 1.0 - epsilon);
      A = -frac_diff_submatrix(grid, alpha, Side::left, nodes, nodes);
      break;
    }
    case OneWayPmlVariant::frac_diff: {
      std::vector<double> alpha(nodes.size(), 1.0 + epsilon);
      A = frac_diff_submatrix(grid, alpha, Side::right, nodes, nodes);
      break;
    }
  }
  for (int i = 0; i < n; ++i) A(i, i) -= damping.eval(grid.nodes[nodes[i]]);

  CNOperator cn(A, tau);
  Eigen::VectorXd u(n);
  for (int i = 0; i < n; ++i) u(i) = u0(grid.nodes[nodes[i]]);

  const auto snaps = snapshot_steps(snapshot_times, tau);
  const long n_end = std::lround(T / tau);
  std::vector<Snapshot1D> out;
  auto record = [&](long step) {
    for (size_t k = 0; k < snaps.size(); ++k)
      if (snaps[k] == step) {
        Eigen::VectorXd full = Eigen::VectorXd::Zero(P + 1);
        for (int i = 0; i < n; ++i) full(nodes[i]) = u(i);
        out.push_back({snapshot_times[k], full});
      }
  };
  record(0);
  for (long step = 1; step <= n_end; ++step) {
    u = cn.step(u);
    record(step);
  }
  return out;
}

int pml2d_field_count(Pml2DVariant variant) {
  return variant == Pml2DVariant::pml1 ? 4 : 5;
}

std::vector<PmlSnapshot2D> solve_wave2d_pml(Pml2DVariant variant, const ScalarFn2D& u0,
                                            const ScalarFn2D& phi, double c,
                                            const CollocationGrid1D& grid_x,
                                            const CollocationGrid1D& grid_y,
                                            const DampingProfile& damping_x,
                                            const DampingProfile& damping_y, double tau, double T,
                                            const std::vector<double>& snapshot_times) {
  if (!(c > 0.0)) throw std::invalid_argument("solve_wave2d_pml: c must be positive");
  const int Px = grid_x.P, Py = grid_y.P;

  Eigen::MatrixXd U0(Px + 1, Py + 1), Phi(Px + 1, Py + 1);
  for (int i = 0; i <= Px; ++i)
    for (int j = 0; j <= Py; ++j) {
      U0(i, j) = u0(grid_x.nodes[i], grid_y.nodes[j]);
      Phi(i, j) = phi(grid_x.nodes[i], grid_y.nodes[j]);
    }

  const Eigen::MatrixXd D1x_full = first_derivative_matrix(grid_x);
  const Eigen::MatrixXd D1y_full = first_derivative_matrix(grid_y);
  const Eigen::MatrixXd Dx = D1x_full.block(1, 1, Px - 1, Px - 1);
  const Eigen::MatrixXd Dy = D1y_full.block(1, 1, Py - 1, Py - 1);

  Eigen::VectorXd sx(Px - 1), sy(Py - 1);
  for (int i = 1; i < Px; ++i) sx(i - 1) = damping_x.eval(grid_x.nodes[i]);
  for (int j = 1; j < Py; ++j) sy(j - 1) = damping_y.eval(grid_y.nodes[j]);

  auto trim = [&](const Eigen::MatrixXd& F) { return F.block(1, 1, Px - 1, Py - 1); };
  const Eigen::MatrixXd dU0x = trim(D1x_full * U0);
  const Eigen::MatrixXd dU0y = trim(U0 * D1y_full.transpose());
  const Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(Px - 1, Py - 1);

  FieldSet s;
  if (variant == Pml2DVariant::pml1)
    s = FieldSet({trim(Phi), c * dU0x, c * dU0y, Z});
  else
    s = FieldSet({trim(Phi), c * dU0x, c * dU0y, Z, Z});

  auto rhs1 = [&](const FieldSet& st) {
    const Eigen::MatrixXd& v = st.f[0];
    const Eigen::MatrixXd& w1 = st.f[1];
    const Eigen::MatrixXd& w2 = st.f[2];
    const Eigen::MatrixXd& psi = st.f[3];
    const Eigen::MatrixXd w2dy = w2 * Dy.transpose();
    return FieldSet({c * (Dx * w1 + w2dy) - sx.asDiagonal() * v + psi,
                     c * (Dx * v) - sx.asDiagonal() * w1,
                     c * (v * Dy.transpose()),
                     c * (sx.asDiagonal() * w2dy)});
  };
  auto rhs2 = [&](const FieldSet& st) {
    const Eigen::MatrixXd& v = st.f[0];
    const Eigen::MatrixXd& w1 = st.f[1];
    const Eigen::MatrixXd& w2 = st.f[2];
    const Eigen::MatrixXd& Q = st.f[3];
    const Eigen::MatrixXd& R = st.f[4];
    return FieldSet({c * (Dx * w1 + w2 * Dy.transpose()) -
                         (sx.asDiagonal() * v + v * sy.asDiagonal()) +
                         c * (sx.asDiagonal() * (Q * Dy.transpose())) +
                         c * ((Dx * R) * sy.asDiagonal()),
                     c * (Dx * v) - sx.asDiagonal() * w1,
                     c * (v * Dy.transpose()) - w2 * sy.asDiagonal(),
                     w2, w1});
  };

  Eigen::MatrixXd u_acc = trim(U0);
  Eigen::MatrixXd vt_old = s.f[0];

  const auto snaps = snapshot_steps(snapshot_times, tau);
  const long n_end = std::lround(T / tau);
  std::vector<PmlSnapshot2D> out;
  auto embed = [&](const Eigen::MatrixXd& F) {
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(Px + 1, Py + 1);
    full.block(1, 1, Px - 1, Py - 1) = F;
    return full;
  };
  auto record = [&](long n) {
    for (size_t k = 0; k < snaps.size(); ++k)
      if (snaps[k] == n) {
        PmlSnapshot2D snap;
        snap.t = snapshot_times[k];
        snap.u = embed(u_acc);
        for (const auto& F : s.f) snap.fields.push_back(embed(F));
        out.push_back(std::move(snap));
      }
  };

  auto advance = [&](auto& stepper) {
    for (long n = 1; n <= n_end; ++n) {
      s = stepper.step(s);
      u_acc += 0.5 * tau * (vt_old + s.f[0]);
      vt_old = s.f[0];
      if (n % 100 == 0 && !s.f[0].allFinite())
        throw std::runtime_error(
            "solve_wave2d_pml: fields diverged; the explicit march needs a smaller tau");
      record(n);
    }
  };

  record(0);
  if (variant == Pml2DVariant::pml1) {
    Ab2Stepper<FieldSet, decltype(rhs1)> stepper(rhs1, tau);
    advance(stepper);
  } else {
    Ab2Stepper<FieldSet, decltype(rhs2)> stepper(rhs2, tau);
    advance(stepper);
  }
  return out;
}

}  // namespace fbl
