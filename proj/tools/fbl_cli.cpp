#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fbl/cli_io.hpp"

namespace {

int load_config(const std::string& path, fbl::SimulationConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "validation error: cannot read config %s\n", path.c_str());
    return 1;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    cfg = fbl::parse_config(ss.str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 1;
  }
  return 0;
}

void apply_overrides(fbl::SimulationConfig& cfg, const std::string& out,
                     const std::vector<double>& snapshots, const std::string& method) {
  if (!out.empty()) cfg.out_dir = out;
  if (!snapshots.empty()) cfg.snapshot_times = snapshots;
  if (!method.empty()) cfg.method = method;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Absorbing-layer wave simulations: variable-order buffer layers and damped-layer "
               "baselines"};
  app.require_subcommand(1);

  std::string config_path, out_dir, method;
  std::vector<double> snapshots;
  std::vector<int> p_list{100, 200, 300, 400, 500};
  std::vector<std::vector<double>> layer_variants;

  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON configuration file")->required();
    sub->add_option("--out", out_dir, "output directory override");
    sub->add_option("--snapshots", snapshots, "snapshot times override")->delimiter(',');
    sub->add_option("--method", method, "method override");
  };

  auto* oneway = app.add_subcommand("oneway", "one-way advection with an absorbing layer");
  auto* wave1d = app.add_subcommand("wave1d", "two-way 1D wave via characteristic splitting");
  auto* wave2d = app.add_subcommand("wave2d", "coupled 2D wave system");
  auto* prefine = app.add_subcommand("prefine", "one-way error versus polynomial degree");
  auto* layers = app.add_subcommand("layers", "one-way error versus layer parameters");
  auto* compare = app.add_subcommand("compare", "2D buffer layer against both damped layers");
  for (auto* sub : {oneway, wave1d, wave2d, prefine, layers, compare}) add_shared(sub);
  prefine->add_option("--plist", p_list, "polynomial degrees")->delimiter(',');
  layers
      ->add_option("--variant", layer_variants,
                   "delta,pen,omega triple (repeatable); defaults to the base layer")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  fbl::SimulationConfig cfg;
  if (const int rc = load_config(config_path, cfg)) return rc;
  apply_overrides(cfg, out_dir, snapshots, method);

  if (oneway->parsed()) {
    cfg.problem = "oneway";
    return fbl::run(cfg);
  }
  if (wave1d->parsed()) {
    cfg.problem = "wave1d";
    return fbl::run(cfg);
  }
  if (wave2d->parsed()) {
    cfg.problem = "wave2d";
    return fbl::run(cfg);
  }
  if (prefine->parsed()) return fbl::run_prefine(cfg, p_list);
  if (layers->parsed()) {
    std::vector<std::array<double, 3>> variants;
    for (const auto& v : layer_variants) {
      if (v.size() != 3) {
        std::fprintf(stderr, "validation error: --variant needs delta,pen,omega\n");
        return 1;
      }
      variants.push_back({v[0], v[1], v[2]});
    }
    if (variants.empty()) variants.push_back({cfg.delta_right, cfg.pen, cfg.omega});
    return fbl::run_layers(cfg, variants);
  }
  return fbl::run_compare(cfg);
}
