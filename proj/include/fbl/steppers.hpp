#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fbl {

// Crank-Nicolson update u^{n+1} = (I - tau/2 A)^{-1} (I + tau/2 A) u^n with
// the factorization cached across steps.
class CNOperator {
 public:
  CNOperator(const Eigen::MatrixXd& A, double tau);

  Eigen::VectorXd step(const Eigen::VectorXd& u) const;

  double tau() const { return tau_; }
  Eigen::Index size() const { return minus_.rows(); }

  // max-norm residual of the cached factorization against I - tau/2 A
  double factorization_residual() const;

 private:
  double tau_;
  Eigen::MatrixXd minus_;  // I - tau/2 A
  Eigen::MatrixXd plus_;   // I + tau/2 A
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

// A fixed-size collection of same-shape field arrays, with the linear
// operations the AB2 stepper needs.  Used as the state of the coupled 2D
// systems (3 fields for the buffer-layer form, 4 or 5 for the damped forms).
struct FieldSet {
  std::vector<Eigen::MatrixXd> f;

  FieldSet() = default;
  explicit FieldSet(std::vector<Eigen::MatrixXd> fields) : f(std::move(fields)) {}

  FieldSet& operator+=(const FieldSet& o) {
    if (f.size() != o.f.size()) throw std::invalid_argument("FieldSet: size mismatch");
    for (size_t i = 0; i < f.size(); ++i) f[i] += o.f[i];
    return *this;
  }
};

inline FieldSet operator+(FieldSet a, const FieldSet& b) { return a += b; }

inline FieldSet operator*(double s, const FieldSet& a) {
  FieldSet r = a;
  for (auto& m : r.f) m *= s;
  return r;
}

inline FieldSet operator-(const FieldSet& a, const FieldSet& b) { return a + (-1.0) * b; }

// Two-step Adams-Bashforth with a forward-Euler first step.  State must
// support scalar multiplication and addition (Eigen types or FieldSet above).
template <class State, class Rhs>
class Ab2Stepper {
 public:
  Ab2Stepper(Rhs rhs, double tau) : rhs_(std::move(rhs)), tau_(tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("Ab2Stepper: tau must be positive");
  }

  State step(const State& s) {
    State next = prev_ ? State(s + tau_ * rhs_(1.5 * s - 0.5 * (*prev_)))
                       : State(s + tau_ * rhs_(s));
    prev_ = s;
    return next;
  }

 private:
  Rhs rhs_;
  double tau_;
  std::optional<State> prev_;
};

}  // namespace fbl
