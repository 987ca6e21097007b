#include "fbl/steppers.hpp"

#include <string>

namespace fbl {

CNOperator::CNOperator(const Eigen::MatrixXd& A, double tau) : tau_(tau) {
  if (A.rows() != A.cols()) throw std::invalid_argument("CNOperator: A must be square");
  if (!(tau > 0.0)) throw std::invalid_argument("CNOperator: tau must be positive");
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(A.rows(), A.cols());
  minus_ = I - 0.5 * tau * A;
  plus_ = I + 0.5 * tau * A;
  lu_.compute(minus_);
  const Eigen::VectorXd diag = lu_.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i)
    if (diag(i) == 0.0)
      throw std::runtime_error("CNOperator: singular factorization at pivot " +
                               std::to_string(i));
}

Eigen::VectorXd CNOperator::step(const Eigen::VectorXd& u) const {
  if (u.size() != minus_.rows()) throw std::invalid_argument("CNOperator: dimension mismatch");
  return lu_.solve(plus_ * u);
}

double CNOperator::factorization_residual() const {
  const Eigen::MatrixXd reconstructed = lu_.permutationP().inverse() *
                                        (Eigen::MatrixXd(lu_.matrixLU().triangularView<Eigen::UnitLower>()) *
                                         Eigen::MatrixXd(lu_.matrixLU().triangularView<Eigen::Upper>()));
  return (reconstructed - minus_).cwiseAbs().maxCoeff();
}

}  // namespace fbl
