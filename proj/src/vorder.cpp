#include "fbl/vorder.hpp"

#include <cmath>
#include <stdexcept>

namespace fbl {

VariableOrderProfile make_profile(ProfileKind kind, double epsilon, double x_L, double x_R,
                                  double delta_left, double delta_right, double pen,
                                  double omega) {
  if (!(x_L < x_R)) throw std::invalid_argument("profile: x_L must be < x_R");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("profile: epsilon in (0,1)");
  if (delta_left < 0.0 || delta_right < 0.0)
    throw std::invalid_argument("profile: layer lengths must be >= 0");
  if ((delta_left > 0.0 || delta_right > 0.0) && !(pen > 0.0))
    throw std::invalid_argument("profile: pen_len must be positive");
  if (delta_left > 0.0 && pen >= delta_left)
    throw std::invalid_argument("profile: pen_len must be < layer_len");
  if (delta_right > 0.0 && pen >= delta_right)
    throw std::invalid_argument("profile: pen_len must be < layer_len");
  if (kind == ProfileKind::tanh_smooth && !(omega > 0.0))
    throw std::invalid_argument("profile: tanh kind needs a positive slope");

  VariableOrderProfile p;
  p.kind = kind;
  p.epsilon = epsilon;
  p.x_L = x_L;
  p.x_R = x_R;
  p.layer_left = delta_left;
  p.layer_right = delta_right;
  p.pen_left = delta_left > 0.0 ? pen : 0.0;
  p.pen_right = delta_right > 0.0 ? pen : 0.0;
  p.slope = omega;
  return p;
}

double eval_profile(const VariableOrderProfile& p, double x) {
  if (x < p.lo() || x > p.hi())
    throw std::domain_error("eval_profile: x outside the extended domain");
  if (x >= p.x_L && x <= p.x_R) return 1.0 + p.epsilon;

  if (x > p.x_R) {
    const double d = x - p.x_R;
    if (p.kind == ProfileKind::step) return d <= p.pen_right ? 1.0 + p.epsilon : 2.0;
    if (d > p.pen_right) return 2.0;
    return 1.5 + (0.5 - p.epsilon) * std::tanh(p.slope * (d - 0.5 * p.pen_right));
  }
  const double d = p.x_L - x;
  if (p.kind == ProfileKind::step) return d <= p.pen_left ? 1.0 + p.epsilon : 2.0;
  if (d > p.pen_left) return 2.0;
  return 1.5 + (0.5 - p.epsilon) * std::tanh(p.slope * (d - 0.5 * p.pen_left));
}

ProfileValidation validate_profile(const VariableOrderProfile& p, double tol) {
  ProfileValidation r;
  auto flag = [&](double x, double mag, const std::string& msg) {
    if (mag > r.worst_violation) {
      r.ok = false;
      r.worst_violation = mag;
      r.worst_location = x;
      r.message = msg;
    } else {
      r.ok = false;
    }
  };

  const int samples = 1000;
  auto sweep = [&](double lo, double hi, auto&& check) {
    if (!(hi > lo)) return;
    for (int i = 0; i <= samples; ++i) check(lo + (hi - lo) * i / samples);
  };

  // range and interior exactness
  sweep(p.lo(), p.hi(), [&](double x) {
    const double al = eval_profile(p, x);
    if (!(al > 1.0 && al <= 2.0)) flag(x, std::abs(al - 1.5), "order outside (1,2]");
  });
  sweep(p.x_L, p.x_R, [&](double x) {
    const double al = eval_profile(p, x);
    if (al != 1.0 + p.epsilon) flag(x, std::abs(al - 1.0 - p.epsilon), "interior not 1+epsilon");
  });

  // diffusion zones, including the value the penetration band attains at
  // their inner edge (catches tanh bands too short for the slope)
  if (p.layer_right > 0.0) {
    sweep(p.x_R + p.pen_right, p.x_R + p.layer_right, [&](double x) {
      const double dev = std::abs(eval_profile(p, x) - 2.0);
      if (dev > tol) flag(x, dev, "diffusion zone not at order 2");
    });
    if (p.kind == ProfileKind::tanh_smooth) {
      const double edge =
          1.5 + (0.5 - p.epsilon) * std::tanh(p.slope * 0.5 * p.pen_right);
      if (std::abs(edge - 2.0) > tol)
        flag(p.x_R + p.pen_right, std::abs(edge - 2.0), "penetration band does not reach 2");
    }
  }
  if (p.layer_left > 0.0) {
    sweep(p.x_L - p.layer_left, p.x_L - p.pen_left, [&](double x) {
      const double dev = std::abs(eval_profile(p, x) - 2.0);
      if (dev > tol) flag(x, dev, "diffusion zone not at order 2");
    });
    if (p.kind == ProfileKind::tanh_smooth) {
      const double edge = 1.5 + (0.5 - p.epsilon) * std::tanh(p.slope * 0.5 * p.pen_left);
      if (std::abs(edge - 2.0) > tol)
        flag(p.x_L - p.pen_left, std::abs(edge - 2.0), "penetration band does not reach 2");
    }
  }

  // monotone outward through each buffered side
  auto monotone = [&](double lo, double hi, double sgn) {
    double prev = eval_profile(p, sgn > 0 ? lo : hi);
    for (int i = 1; i <= samples; ++i) {
      const double x = sgn > 0 ? lo + (hi - lo) * i / samples : hi - (hi - lo) * i / samples;
      const double al = eval_profile(p, x);
      if (al < prev - 1e-12) flag(x, prev - al, "order decreasing outward");
      prev = al;
    }
  };
  if (p.layer_right > 0.0) monotone(p.x_R, p.x_R + p.layer_right, 1.0);
  if (p.layer_left > 0.0) monotone(p.x_L - p.layer_left, p.x_L, -1.0);

  return r;
}

}  // namespace fbl
