#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fbl/grid.hpp"
#include "fbl/rl_basis.hpp"
#include "fbl/vorder.hpp"

namespace fbl {

// Dense variable-order differentiation matrices on the interior nodes
// (homogeneous-Dirichlet trimmed), with the physical (length/2)^{-alpha(x_i)}
// scale applied per row.
struct FracDiffMatrices {
  Eigen::MatrixXd D_L, D_R;
  Eigen::MatrixXd D_minus;  // (D_L - D_R)/2, first derivative in the advection limit
  Eigen::MatrixXd D_plus;   // (D_L + D_R)/2, second derivative in the diffusion limit
};

// Change-of-basis coefficients ell_k^j: column j holds the Jacobi expansion of
// the j-th Lagrange basis polynomial; (P+1)x(P+1).
Eigen::MatrixXd lagrange_to_jacobi(const CollocationGrid1D& grid);

// Variable-order RL differentiation sub-matrix: rows are evaluation nodes
// (indices into the grid), cols are the retained unknowns.  alpha_at_rows has
// one order per row node.
Eigen::MatrixXd frac_diff_submatrix(const CollocationGrid1D& grid,
                                    const std::vector<double>& alpha_at_rows, Side side,
                                    const std::vector<int>& row_nodes,
                                    const std::vector<int>& col_nodes);

// Interior-trimmed L/R matrices and their half-sum/half-difference for a
// validated profile on the grid's extended domain.
// validation_tol bounds the allowed |alpha - 2| shortfall at the start of the
// diffusion zone; sharper tanh bands need a looser bound (the band-edge value
// is 1.5 + (0.5 - eps) tanh(omega dbar / 2)).
FracDiffMatrices build_matrices_1d(const CollocationGrid1D& grid,
                                   const VariableOrderProfile& profile,
                                   double validation_tol = 1e-3);

struct FracDiffMatrices2D {
  FracDiffMatrices x;  // act by left-multiplication on the field array
  FracDiffMatrices y;  // act by right-multiplication with the transpose
};

FracDiffMatrices2D build_matrices_2d(const CollocationGrid1D& grid_x,
                                     const CollocationGrid1D& grid_y,
                                     const VariableOrderProfile& profile_x,
                                     const VariableOrderProfile& profile_y,
                                     double validation_tol = 1e-3);

// Classical spectral differentiation matrices on the full grid (exact
// Lagrange differentiation, physical scale included).
Eigen::MatrixXd first_derivative_matrix(const CollocationGrid1D& grid);
Eigen::MatrixXd second_derivative_matrix(const CollocationGrid1D& grid);

// T(i,j) = integral of the j-th Lagrange basis from x_lo to node i
// (Legendre grids, a = b = 0).  Used for quadrature partial sums.
Eigen::MatrixXd partial_integral_matrix(const CollocationGrid1D& grid);

// Plain-text CSV, row-major, 17 significant digits.
void dump_matrix_csv(const Eigen::MatrixXd& m, const std::string& path);

}  // namespace fbl
