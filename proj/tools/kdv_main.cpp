// Command-line driver: convergence tables, long-time evolutions, and the
// property suite for the periodic generalized KdV DG solver.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kdv/harness.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CLI::RuntimeError("cannot open output file: " + path, 1);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discontinuous Galerkin solver for the generalized KdV equation"};
  app.require_subcommand(1);

  // convergence
  std::string cv_example = "4.1", cv_method = "A", cv_mesh = "random", cv_out = "-";
  int cv_degree = 2;
  std::vector<int> cv_cells = {10, 20, 40, 80};
  double cv_cfl = 0.0, cv_perturb = 0.1;
  std::uint64_t cv_seed = 7;
  auto* conv = app.add_subcommand("convergence", "Refinement study with L2 errors and orders");
  conv->add_option("--example", cv_example, "Benchmark id")->check(CLI::IsMember({"4.1", "4.2", "4.3"}));
  conv->add_option("--method", cv_method, "Flux variant")->check(CLI::IsMember({"A", "U", "C"}));
  conv->add_option("--degree", cv_degree, "Polynomial degree k >= 2")->check(CLI::Range(2, 6));
  conv->add_option("--cells", cv_cells, "Cell counts, each double the previous")->delimiter(',');
  conv->add_option("--cfl", cv_cfl, "CFL number (0 = per-degree default)");
  conv->add_option("--mesh", cv_mesh, "Mesh family")->check(CLI::IsMember({"uniform", "random"}));
  conv->add_option("--perturb", cv_perturb, "Random-mesh perturbation fraction");
  conv->add_option("--seed", cv_seed, "Base mesh seed (level N uses seed + N)");
  conv->add_option("--out", cv_out, "Output CSV path ('-' = stdout)");

  // evolve
  std::string ev_example = "4.4", ev_method = "A", ev_mesh = "uniform";
  std::string ev_energy_out = "-", ev_snapshot_out;
  int ev_degree = 2, ev_cells = 20, ev_every = 1000;
  double ev_T = 5.0, ev_cfl = 0.0, ev_perturb = 0.1;
  std::uint64_t ev_seed = 7;
  auto* evolve = app.add_subcommand("evolve", "Long-time run with energy history and snapshots");
  evolve->add_option("--example", ev_example, "Benchmark id")->check(CLI::IsMember({"4.1", "4.2", "4.3", "4.4"}));
  evolve->add_option("--method", ev_method, "Flux variant")->check(CLI::IsMember({"A", "U", "C"}));
  evolve->add_option("--degree", ev_degree, "Polynomial degree k >= 2")->check(CLI::Range(2, 6));
  evolve->add_option("--cells", ev_cells, "Number of cells")->check(CLI::PositiveNumber);
  evolve->add_option("--T", ev_T, "Final time");
  evolve->add_option("--cfl", ev_cfl, "CFL number (0 = per-degree default)");
  evolve->add_option("--mesh", ev_mesh, "Mesh family")->check(CLI::IsMember({"uniform", "random"}));
  evolve->add_option("--perturb", ev_perturb, "Random-mesh perturbation fraction");
  evolve->add_option("--seed", ev_seed, "Mesh seed");
  evolve->add_option("--energy-out", ev_energy_out, "Energy-history CSV path");
  evolve->add_option("--snapshot-out", ev_snapshot_out, "Final-state snapshot CSV path");
  evolve->add_option("--snapshot-every", ev_every, "Energy sampling cadence in steps");

  auto* verify = app.add_subcommand("verify", "Run the invariant property suite");
  std::uint64_t vf_seed = 2024;
  int vf_states = 100;
  verify->add_option("--seed", vf_seed, "Random-state seed");
  verify->add_option("--states", vf_states, "Random states per identity");

  CLI11_PARSE(app, argc, argv);

  try {
    if (conv->parsed()) {
      kdv::ConvergenceConfig config;
      config.example = kdv::example_from_string(cv_example);
      config.variant = kdv::variant_from_string(cv_method);
      config.degree = cv_degree;
      config.cells = cv_cells;
      config.cfl = cv_cfl;
      config.random_mesh = (cv_mesh == "random");
      config.perturb_fraction = cv_perturb;
      config.seed = cv_seed;
      const auto report = kdv::run_convergence(kdv::make_problem(config.example), config);
      write_output(cv_out, kdv::convergence_csv(report));
    } else if (evolve->parsed()) {
      kdv::EvolutionConfig config;
      config.example = kdv::example_from_string(ev_example);
      config.variant = kdv::variant_from_string(ev_method);
      config.degree = ev_degree;
      config.cells = ev_cells;
      config.t_final = ev_T;
      config.cfl = ev_cfl;
      config.random_mesh = (ev_mesh == "random");
      config.perturb_fraction = ev_perturb;
      config.seed = ev_seed;
      config.energy_every = ev_every;
      const auto result = kdv::run_evolution(kdv::make_problem(config.example), config);
      write_output(ev_energy_out, kdv::energy_csv(result));
      if (!ev_snapshot_out.empty())
        write_output(ev_snapshot_out,
                     kdv::snapshot_csv(result.final_state, config.points_per_cell));
      if (result.final_error_u >= 0.0)
        std::cerr << "final L2 error vs exact: " << result.final_error_u << "\n";
    } else if (verify->parsed()) {
      const auto report = kdv::run_property_suite(vf_seed, vf_states);
      for (const auto& r : report.results)
        std::printf("[%s] %-42s measured %.3e  tol %.3e\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.magnitude, r.tolerance);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
