#pragma once

#include <array>
#include <string>
#include <vector>

#include "fbl/reference.hpp"

namespace fbl {

// Gaussian initial condition u0 = amplitude * exp(-decay * r^2) about the
// center; every experiment in scope uses this family.
struct GaussianIC {
  double amplitude = 1.0;
  double decay = 1.0;
  double center_x = 0.0;
  double center_y = 0.0;

  ScalarFn1D fn1d() const;
  ScalarFn2D fn2d() const;
};

struct SimulationConfig {
  std::string problem = "oneway";  // oneway | wave1d | wave2d
  std::string method = "fbl";      // fbl | pml1 | pml2 | pml-intadv | pml-fracadv | pml-fracdiff
  std::string direction = "right";  // oneway travel direction

  double x_L = -5.0, x_R = 5.0;
  double y_L = -5.0, y_R = 5.0;
  double delta_left = 0.0, delta_right = 1.0;
  double pen = 0.5;
  double omega = 20.0;
  double epsilon = 1e-5;
  double profile_tol = 1e-3;  // layer validation tolerance
  double eta = 100.0;         // linear-ramp damping strength (pml2)

  double speed = 1.0;  // |V| or c
  GaussianIC ic;

  int P = 500, P_y = 0;  // P_y = 0 means same as P
  double tau = 1e-3;
  double T = 9.0;
  std::vector<double> snapshot_times{3.0, 6.0, 9.0};

  // big-domain reference (2D)
  double ref_lo = -5.0, ref_hi = 5.0;
  int ref_P = 100;
  double ref_tau = 1e-4;

  std::string out_dir = ".";
};

// Strict JSON parsing: unknown keys rejected with their path, defaults
// filled, cross-field invariants checked.
SimulationConfig parse_config(const std::string& json_text);
std::string serialize_config(const SimulationConfig& config);

// Runs the configured simulation and writes snapshot CSVs, errors.csv, and
// manifest.json into out_dir.  Returns the process exit code:
// 0 success, 1 validation failure, 2 numerical failure.
int run(const SimulationConfig& config);

// Study drivers used by the CLI subcommands; both write a CSV into out_dir.
int run_prefine(const SimulationConfig& config, const std::vector<int>& P_list);
int run_layers(const SimulationConfig& config,
               const std::vector<std::array<double, 3>>& variants);

// wave2d only: runs fbl, pml1, and pml2 on the same configuration and writes
// per-method snapshots plus a shared error comparison.
int run_compare(const SimulationConfig& config);

}  // namespace fbl
