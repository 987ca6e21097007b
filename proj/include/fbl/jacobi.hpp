#pragma once

#include <vector>

namespace fbl {

// 1/Gamma(z), finite for all real z; exactly zero at z = 0, -1, -2, ...
double rgamma(double z);

// p_n^{a,b}(x) by the three-term recurrence, a, b > -1, x in [-1,1].
// Endpoint values are returned in closed form.
double jacobi_poly(int n, double a, double b, double x);

// p_k^{a,b}(x) for k = 0..kmax.
std::vector<double> jacobi_poly_all(int kmax, double a, double b, double x);

// Endpoint values p_k^{a,b}(+1) = binom(k+a,k) and p_k^{a,b}(-1) = (-1)^k binom(k+b,k).
std::vector<double> jacobi_at_plus_one(int kmax, double a, double b);
std::vector<double> jacobi_at_minus_one(int kmax, double a, double b);

// d/dx p_k^{a,b}(x) = (k+a+b+1)/2 * p_{k-1}^{a+1,b+1}(x).
double jacobi_poly_deriv(int n, double a, double b, double x);
double jacobi_poly_deriv2(int n, double a, double b, double x);

// L2 weight-function norm gamma_k^{a,b} of p_k^{a,b}.
double jacobi_norm(int k, double a, double b);

// Coefficients of the three-term recurrence
//   p_{j+1} = (A_j x - B_j) p_j - C_j p_{j-1}
// and of the inverse-derivative expansion
//   p_j = Ah_j p'_{j-1} + Bh_j p'_j + Ch_j p'_{j+1}.
// Index j = 0..jmax.  The j = 0 entries of B, Ah, Bh are the limiting values
// (the generic expressions are 0/0 there for a + b = 0).
struct JacobiRecurrence {
  std::vector<double> A, B, C;
  std::vector<double> Ah, Bh, Ch;
};

JacobiRecurrence jacobi_recurrence(int jmax, double a, double b);

}  // namespace fbl
