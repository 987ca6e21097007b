#pragma once

#include <string>

namespace fbl {

enum class ProfileKind { step, tanh_smooth };

// Variable-order function alpha(x): 1 + epsilon in the interior [x_L, x_R],
// transitioning to 2 across a penetration band of width pen_len inside a
// buffer layer of width layer_len on each buffered side.  A layer_len of 0
// means no layer on that side.
struct VariableOrderProfile {
  ProfileKind kind = ProfileKind::tanh_smooth;
  double epsilon = 1e-5;
  double x_L = 0.0;
  double x_R = 0.0;
  double layer_left = 0.0;
  double layer_right = 0.0;
  double pen_left = 0.0;
  double pen_right = 0.0;
  double slope = 0.0;  // omega, tanh kind only

  double lo() const { return x_L - layer_left; }
  double hi() const { return x_R + layer_right; }
};

// Symmetric two-sided profile, or one-sided when a layer length is zero.
VariableOrderProfile make_profile(ProfileKind kind, double epsilon, double x_L, double x_R,
                                  double delta_left, double delta_right, double pen, double omega);

double eval_profile(const VariableOrderProfile& p, double x);

struct ProfileValidation {
  bool ok = true;
  double worst_violation = 0.0;
  double worst_location = 0.0;
  std::string message;
};

// Checks the three-zone condition on a dense sample: 1 < alpha <= 2
// everywhere, alpha = 1 + epsilon in the interior, |alpha - 2| <= tol in the
// fully-diffusion zone, and alpha non-decreasing outward through each layer.
ProfileValidation validate_profile(const VariableOrderProfile& p, double tol);

}  // namespace fbl
