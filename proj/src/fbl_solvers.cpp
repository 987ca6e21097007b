#include "fbl/fbl_solvers.hpp"

#include <cmath>
#include <stdexcept>

#include "fbl/steppers.hpp"

namespace fbl {

namespace {

std::vector<int> interior_nodes(int P) {
  std::vector<int> v(P - 1);
  for (int i = 1; i < P; ++i) v[i - 1] = i;
  return v;
}

void check_boundary_data(const ScalarFn1D& u0, const CollocationGrid1D& grid) {
  if (std::abs(u0(grid.x_lo)) > 1e-10 || std::abs(u0(grid.x_hi)) > 1e-10)
    throw std::invalid_argument("initial data must vanish (<= 1e-10) at the extended endpoints");
}

std::vector<long> snapshot_steps(const std::vector<double>& times, double tau) {
  std::vector<long> steps;
  for (double t : times) {
    if (t < 0.0) throw std::invalid_argument("snapshot times must be nonnegative");
    steps.push_back(std::lround(t / tau));
  }
  return steps;
}

Eigen::VectorXd embed_full(const Eigen::VectorXd& interior, int P) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(P + 1);
  full.segment(1, P - 1) = interior;
  return full;
}

// interior-trimmed single-sided matrix with orders taken from the profile
Eigen::MatrixXd profile_matrix(const CollocationGrid1D& grid, const VariableOrderProfile& profile,
                               Side side) {
  const auto rows = interior_nodes(grid.P);
  std::vector<double> alpha(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) alpha[i] = eval_profile(profile, grid.nodes[rows[i]]);
  return frac_diff_submatrix(grid, alpha, side, rows, rows);
}

}  // namespace

std::vector<Snapshot1D> solve_oneway_fbl(Travel direction, const ScalarFn1D& u0, double speed,
                                         const CollocationGrid1D& grid,
                                         const VariableOrderProfile& profile, double tau, double T,
                                         const std::vector<double>& snapshot_times) {
  if (!(speed > 0.0)) throw std::invalid_argument("solve_oneway_fbl: speed must be positive");
  check_boundary_data(u0, grid);
  if (direction == Travel::rightward && profile.layer_left != 0.0)
    throw std::invalid_argument("solve_oneway_fbl: rightward travel needs a right-side layer only");
  if (direction == Travel::leftward && profile.layer_right != 0.0)
    throw std::invalid_argument("solve_oneway_fbl: leftward travel needs a left-side layer only");
  const auto val = validate_profile(profile, 1e-3);
  if (!val.ok) throw std::invalid_argument("solve_oneway_fbl: " + val.message);
  if (std::abs(grid.x_lo - profile.lo()) > 1e-12 || std::abs(grid.x_hi - profile.hi()) > 1e-12)
    throw std::invalid_argument("solve_oneway_fbl: grid and profile domains differ");

  const Side side = direction == Travel::rightward ? Side::right : Side::left;
  const Eigen::MatrixXd A = speed * profile_matrix(grid, profile, side);
  CNOperator cn(A, tau);

  const int P = grid.P;
  Eigen::VectorXd u(P - 1);
  for (int i = 1; i < P; ++i) u(i - 1) = u0(grid.nodes[i]);

  const auto snaps = snapshot_steps(snapshot_times, tau);
  const long n_end = std::lround(T / tau);
  std::vector<Snapshot1D> out;
  auto record = [&](long n) {
    for (size_t k = 0; k < snaps.size(); ++k)
      if (snaps[k] == n) out.push_back({snapshot_times[k], embed_full(u, P)});
  };
  record(0);
  for (long n = 1; n <= n_end; ++n) {
    u = cn.step(u);
    record(n);
  }
  return out;
}

void split_wave_1d(const ScalarFn1D& u0, const ScalarFn1D& phi, double c,
                   const CollocationGrid1D& grid, Eigen::VectorXd& V0, Eigen::VectorXd& W0) {
  check_boundary_data(u0, grid);
  if (std::abs(phi(grid.x_lo)) > 1e-10 || std::abs(phi(grid.x_hi)) > 1e-10)
    throw std::invalid_argument("split_wave_1d: phi must vanish at the extended endpoints");
  const int P = grid.P;
  Eigen::VectorXd u0n(P + 1), phin(P + 1);
  for (int i = 0; i <= P; ++i) {
    u0n(i) = u0(grid.nodes[i]);
    phin(i) = phi(grid.nodes[i]);
  }
  const Eigen::VectorXd du0 = first_derivative_matrix(grid) * u0n;
  const double r = std::sqrt(2.0) / 2.0;
  V0 = r * (c * du0 - phin);
  W0 = r * (phin + c * du0);
}

std::vector<TwoWaySnapshot1D> solve_twoway_fbl_1d(const ScalarFn1D& u0, const ScalarFn1D& phi,
                                                  double c, const CollocationGrid1D& grid,
                                                  const VariableOrderProfile& prof_alpha,
                                                  const VariableOrderProfile& prof_beta,
                                                  double tau, double T,
                                                  const std::vector<double>& snapshot_times,
                                                  double validation_tol) {
  if (!(c > 0.0)) throw std::invalid_argument("solve_twoway_fbl_1d: c must be positive");
  for (const auto* p : {&prof_alpha, &prof_beta}) {
    const auto val = validate_profile(*p, validation_tol);
    if (!val.ok) throw std::invalid_argument("solve_twoway_fbl_1d: " + val.message);
    if (std::abs(grid.x_lo - p->lo()) > 1e-12 || std::abs(grid.x_hi - p->hi()) > 1e-12)
      throw std::invalid_argument("solve_twoway_fbl_1d: grid and profile domains differ");
  }

  const int P = grid.P;
  Eigen::VectorXd V0full, W0full;
  split_wave_1d(u0, phi, c, grid, V0full, W0full);

  // V rides the right-going characteristic, W the left-going one
  CNOperator cnV(c * profile_matrix(grid, prof_alpha, Side::right), tau);
  CNOperator cnW(c * profile_matrix(grid, prof_beta, Side::left), tau);

  Eigen::VectorXd V = V0full.segment(1, P - 1), W = W0full.segment(1, P - 1);
  Eigen::VectorXd u_nodes(P - 1);
  for (int i = 1; i < P; ++i) u_nodes(i - 1) = u0(grid.nodes[i]);

  const double r = std::sqrt(2.0) / 2.0;
  Eigen::VectorXd ut_old = r * (W - V);

  const auto snaps = snapshot_steps(snapshot_times, tau);
  const long n_end = std::lround(T / tau);
  std::vector<TwoWaySnapshot1D> out;
  auto record = [&](long n) {
    for (size_t k = 0; k < snaps.size(); ++k)
      if (snaps[k] == n)
        out.push_back({snapshot_times[k], embed_full(V, P), embed_full(W, P),
                       embed_full(u_nodes, P)});
  };
  record(0);
  for (long n = 1; n <= n_end; ++n) {
    V = cnV.step(V);
    W = cnW.step(W);
    const Eigen::VectorXd ut_new = r * (W - V);
    u_nodes += 0.5 * tau * (ut_old + ut_new);
    ut_old = ut_new;
    record(n);
  }
  return out;
}

Eigen::VectorXd reconstruct_u_time(const std::vector<Eigen::VectorXd>& ut_history, double tau,
                                   const Eigen::VectorXd& u0_nodes) {
  if (ut_history.empty())
    throw std::invalid_argument("reconstruct_u_time: empty history");
  Eigen::VectorXd u = u0_nodes;
  for (size_t n = 1; n < ut_history.size(); ++n)
    u += 0.5 * tau * (ut_history[n - 1] + ut_history[n]);
  return u;
}

Eigen::VectorXd reconstruct_u_space(const Eigen::VectorXd& w_full, double c,
                                    const CollocationGrid1D& grid) {
  if (w_full.size() != grid.P + 1)
    throw std::invalid_argument("reconstruct_u_space: full-grid w required");
  return (partial_integral_matrix(grid) * w_full) / c;
}

std::vector<Snapshot2D> solve_twoway_fbl_2d(const ScalarFn2D& u0, const ScalarFn2D& phi, double c,
                                            const CollocationGrid1D& grid_x,
                                            const CollocationGrid1D& grid_y,
                                            const VariableOrderProfile& prof_x,
                                            const VariableOrderProfile& prof_y, double tau,
                                            double T, const std::vector<double>& snapshot_times,
                                            double validation_tol) {
  if (!(c > 0.0)) throw std::invalid_argument("solve_twoway_fbl_2d: c must be positive");
  const auto m = build_matrices_2d(grid_x, grid_y, prof_x, prof_y, validation_tol);
  const int Px = grid_x.P, Py = grid_y.P;

  Eigen::MatrixXd U0(Px + 1, Py + 1), Phi(Px + 1, Py + 1);
  for (int i = 0; i <= Px; ++i)
    for (int j = 0; j <= Py; ++j) {
      U0(i, j) = u0(grid_x.nodes[i], grid_y.nodes[j]);
      Phi(i, j) = phi(grid_x.nodes[i], grid_y.nodes[j]);
    }
  for (int i = 0; i <= Px; ++i)
    if (std::abs(U0(i, 0)) > 1e-10 || std::abs(U0(i, Py)) > 1e-10 ||
        std::abs(Phi(i, 0)) > 1e-10 || std::abs(Phi(i, Py)) > 1e-10)
      throw std::invalid_argument("solve_twoway_fbl_2d: data must vanish on the boundary");
  for (int j = 0; j <= Py; ++j)
    if (std::abs(U0(0, j)) > 1e-10 || std::abs(U0(Px, j)) > 1e-10 ||
        std::abs(Phi(0, j)) > 1e-10 || std::abs(Phi(Px, j)) > 1e-10)
      throw std::invalid_argument("solve_twoway_fbl_2d: data must vanish on the boundary");

  const Eigen::MatrixXd dU0x = first_derivative_matrix(grid_x) * U0;
  const Eigen::MatrixXd dU0y = U0 * first_derivative_matrix(grid_y).transpose();

  auto trim = [&](const Eigen::MatrixXd& F) { return F.block(1, 1, Px - 1, Py - 1); };
  FieldSet s({trim(Phi), c * trim(dU0x), c * trim(dU0y)});

  auto rhs = [&](const FieldSet& st) {
    const Eigen::MatrixXd& v = st.f[0];
    const Eigen::MatrixXd& w1 = st.f[1];
    const Eigen::MatrixXd& w2 = st.f[2];
    return FieldSet({c * (m.x.D_minus * w1 + m.x.D_plus * v + w2 * m.y.D_minus.transpose() +
                          v * m.y.D_plus.transpose()),
                     c * (m.x.D_plus * w1 + m.x.D_minus * v),
                     c * (w2 * m.y.D_plus.transpose() + v * m.y.D_minus.transpose())});
  };
  Ab2Stepper<FieldSet, decltype(rhs)> stepper(rhs, tau);

  Eigen::MatrixXd u_acc = trim(U0);
  Eigen::MatrixXd vt_old = s.f[0];

  const auto snaps = snapshot_steps(snapshot_times, tau);
  const long n_end = std::lround(T / tau);
  std::vector<Snapshot2D> out;
  auto embed = [&](const Eigen::MatrixXd& F) {
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(Px + 1, Py + 1);
    full.block(1, 1, Px - 1, Py - 1) = F;
    return full;
  };
  auto record = [&](long n) {
    for (size_t k = 0; k < snaps.size(); ++k)
      if (snaps[k] == n)
        out.push_back({snapshot_times[k], embed(s.f[0]), embed(s.f[1]), embed(s.f[2]),
                       embed(u_acc)});
  };
  record(0);
  for (long n = 1; n <= n_end; ++n) {
    s = stepper.step(s);
    u_acc += 0.5 * tau * (vt_old + s.f[0]);
    vt_old = s.f[0];
    if (n % 100 == 0 && !s.f[0].allFinite())
      throw std::runtime_error(
          "solve_twoway_fbl_2d: fields diverged; the explicit march needs a smaller tau");
    record(n);
  }
  return out;
}

}  // namespace fbl
