#ifndef KDV_HARNESS_HPP
#define KDV_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kdv/operators.hpp"
#include "kdv/problems.hpp"

namespace kdv {

struct ConvergenceConfig {
  ExampleId example = ExampleId::Ex41;
  MethodVariant variant = MethodVariant::A;
  int degree = 2;
  std::vector<int> cells = {10, 20, 40, 80};
  double cfl = 0.0;  // 0 selects default_cfl(degree)
  bool random_mesh = true;
  double perturb_fraction = 0.1;
  std::uint64_t seed = 7;
};

struct ConvergenceRow {
  int cells = 0;
  bool ok = true;  // false when the run blew up (diagnostic row)
  double error_u = 0.0;
  double order_u = 0.0;
  double error_phi = 0.0;
  double order_phi = 0.0;
};

struct ConvergenceReport {
  ConvergenceConfig config;
  double cfl = 0.0;      // resolved value
  double t_final = 0.0;  // 10 * dt on the coarsest mesh
  std::vector<ConvergenceRow> rows;
};

/// Refinement study at T = 10 * dt_coarsest; errors ||u - u_h|| and ||phi_h||
/// at T, orders log2(e_N / e_2N). Random meshes are regenerated per level
/// with seed + N.
ConvergenceReport run_convergence(const ProblemSpec& problem, ConvergenceConfig config);

std::string convergence_csv(const ConvergenceReport& report);

/// log2 ratio orders for a synthetic or measured error sequence (first entry 0).
std::vector<double> orders_from_errors(const std::vector<double>& errors);

struct EvolutionConfig {
  ExampleId example = ExampleId::Ex44;
  MethodVariant variant = MethodVariant::A;
  int degree = 2;
  int cells = 20;
  double t_final = 5.0;
  double cfl = 0.0;
  bool random_mesh = false;
  double perturb_fraction = 0.1;
  std::uint64_t seed = 7;
  int energy_every = 1000;     // sampling cadence in steps
  int points_per_cell = 6;     // snapshot sampling
};

struct EnergySample {
  double t;
  double energy_u;
  double energy_phi;
};

struct EvolutionResult {
  EvolutionConfig config;
  double cfl = 0.0;
  double dt = 0.0;
  std::vector<EnergySample> history;
  StatePair final_state;
  double final_error_u = -1.0;  // -1 when no exact solution is registered
};

EvolutionResult run_evolution(const ProblemSpec& problem, EvolutionConfig config);

std::string energy_csv(const EvolutionResult& result);

/// Rows x,u,phi sampled at points_per_cell equispaced reference points per
/// cell (endpoints included, so interface rows appear twice with one-sided
/// values).
std::string snapshot_csv(const StatePair& state, int points_per_cell = 6);

struct PropertyResult {
  std::string name;
  bool pass = false;
  double magnitude = 0.0;  // measured worst case
  double tolerance = 0.0;
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  bool all_pass() const;
};

/// Invariant battery: conservation and entropy identities, projection
/// interface conditions, special-function checks, exact-solution residuals.
PropertyReport run_property_suite(std::uint64_t seed = 2024, int num_states = 100);

// Quadratic/bilinear form helpers on dual-space residuals: value of the form
// tested against `test`, and the cellwise absolute scale for relative
// tolerances.
double form_value(const DGField& residual, const DGField& test);
double form_scale(const DGField& residual, const DGField& test);

DGField random_field(MeshPtr mesh, int degree, std::uint64_t seed);

}  // namespace kdv

#endif
