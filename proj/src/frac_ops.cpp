#include "fbl/frac_ops.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "fbl/jacobi.hpp"

namespace fbl {

Eigen::MatrixXd lagrange_to_jacobi(const CollocationGrid1D& grid) {
  const int P = grid.P;
  Eigen::MatrixXd ell(P + 1, P + 1);
  std::vector<double> gam(P + 1);
  for (int k = 0; k <= P; ++k) gam[k] = jacobi_norm(k, grid.a, grid.b);
  // Lobatto quadrature is inexact at degree 2P; the k = P normalizer carries
  // the discrete-norm correction factor.
  gam[P] *= 2.0 + (grid.a + grid.b + 1.0) / P;
  for (int j = 0; j <= P; ++j) {
    const auto pk = jacobi_poly_all(P, grid.a, grid.b, grid.ref_nodes[j]);
    for (int k = 0; k <= P; ++k) ell(k, j) = pk[k] * grid.weights[j] / gam[k];
  }
  return ell;
}

Eigen::MatrixXd frac_diff_submatrix(const CollocationGrid1D& grid,
                                    const std::vector<double>& alpha_at_rows, Side side,
                                    const std::vector<int>& row_nodes,
                                    const std::vector<int>& col_nodes) {
  const int P = grid.P;
  if (alpha_at_rows.size() != row_nodes.size())
    throw std::invalid_argument("frac_diff_submatrix: one order per row node");

  const Eigen::MatrixXd ell = lagrange_to_jacobi(grid);
  const auto rc = jacobi_recurrence(P, grid.a, grid.b);
  const double h = grid.half_length();

  Eigen::MatrixXd basis(row_nodes.size(), P + 1);
  for (size_t i = 0; i < row_nodes.size(); ++i) {
    const auto d = rl_jacobi_derivs(rc, grid.a, grid.b, alpha_at_rows[i],
                                    grid.ref_nodes[row_nodes[i]], P, side);
    const double scale = std::pow(h, -alpha_at_rows[i]);
    for (int k = 0; k <= P; ++k) basis(i, k) = scale * d[k];
  }

  const Eigen::MatrixXd full = basis * ell;
  Eigen::MatrixXd out(row_nodes.size(), col_nodes.size());
  for (size_t j = 0; j < col_nodes.size(); ++j) out.col(j) = full.col(col_nodes[j]);
  if (!out.allFinite()) throw std::runtime_error("frac_diff_submatrix: non-finite entries");
  return out;
}

namespace {

std::vector<int> interior_nodes(int P) {
  std::vector<int> v(P - 1);
  for (int i = 1; i < P; ++i) v[i - 1] = i;
  return v;
}

void check_domains(const CollocationGrid1D& grid, const VariableOrderProfile& profile) {
  if (std::abs(grid.x_lo - profile.lo()) > 1e-12 || std::abs(grid.x_hi - profile.hi()) > 1e-12)
    throw std::invalid_argument("build_matrices: grid and profile extended domains differ");
}

}  // namespace

FracDiffMatrices build_matrices_1d(const CollocationGrid1D& grid,
                                   const VariableOrderProfile& profile, double validation_tol) {
  check_domains(grid, profile);
  const auto val = validate_profile(profile, validation_tol);
  if (!val.ok)
    throw std::invalid_argument("build_matrices_1d: profile fails validation: " + val.message);

  const auto rows = interior_nodes(grid.P);
  std::vector<double> alpha(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) alpha[i] = eval_profile(profile, grid.nodes[rows[i]]);

  FracDiffMatrices m;
  m.D_L = frac_diff_submatrix(grid, alpha, Side::left, rows, rows);
  m.D_R = frac_diff_submatrix(grid, alpha, Side::right, rows, rows);
  m.D_minus = 0.5 * (m.D_L - m.D_R);
  m.D_plus = 0.5 * (m.D_L + m.D_R);
  return m;
}

FracDiffMatrices2D build_matrices_2d(const CollocationGrid1D& grid_x,
                                     const CollocationGrid1D& grid_y,
                                     const VariableOrderProfile& profile_x,
                                     const VariableOrderProfile& profile_y,
                                     double validation_tol) {
  FracDiffMatrices2D m;
  m.x = build_matrices_1d(grid_x, profile_x, validation_tol);
  m.y = build_matrices_1d(grid_y, profile_y, validation_tol);
  return m;
}

Eigen::MatrixXd first_derivative_matrix(const CollocationGrid1D& grid) {
  const int P = grid.P;
  const Eigen::MatrixXd ell = lagrange_to_jacobi(grid);
  Eigen::MatrixXd basis(P + 1, P + 1);
  for (int i = 0; i <= P; ++i)
    for (int k = 0; k <= P; ++k)
      basis(i, k) = jacobi_poly_deriv(k, grid.a, grid.b, grid.ref_nodes[i]);
  return (basis * ell) / grid.half_length();
}

Eigen::MatrixXd second_derivative_matrix(const CollocationGrid1D& grid) {
  const int P = grid.P;
  const Eigen::MatrixXd ell = lagrange_to_jacobi(grid);
  Eigen::MatrixXd basis(P + 1, P + 1);
  for (int i = 0; i <= P; ++i)
    for (int k = 0; k <= P; ++k)
      basis(i, k) = jacobi_poly_deriv2(k, grid.a, grid.b, grid.ref_nodes[i]);
  return (basis * ell) / (grid.half_length() * grid.half_length());
}

Eigen::MatrixXd partial_integral_matrix(const CollocationGrid1D& grid) {
  if (grid.a != 0.0 || grid.b != 0.0)
    throw std::invalid_argument("partial_integral_matrix: Legendre grids only");
  const int P = grid.P;
  const Eigen::MatrixXd ell = lagrange_to_jacobi(grid);
  // antiderivative of Legendre: int_{-1}^{x} p_m = (p_{m+1} - p_{m-1})/(2m+1)
  Eigen::MatrixXd anti(P + 1, P + 1);
  for (int i = 0; i <= P; ++i) {
    const auto pk = jacobi_poly_all(P + 1, 0.0, 0.0, grid.ref_nodes[i]);
    anti(i, 0) = grid.ref_nodes[i] + 1.0;
    for (int m = 1; m <= P; ++m) anti(i, m) = (pk[m + 1] - pk[m - 1]) / (2.0 * m + 1.0);
  }
  return grid.half_length() * (anti * ell);
}

void dump_matrix_csv(const Eigen::MatrixXd& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("dump_matrix_csv: cannot open " + path);
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf << (j + 1 < m.cols() ? "," : "");
    }
    out << '\n';
  }
}

}  // namespace fbl
