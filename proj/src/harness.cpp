#include "kdv/harness.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kdv/special.hpp"
#include "kdv/timestep.hpp"

namespace kdv {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

MeshPtr build_mesh(int cells, bool random_mesh, double fraction, std::uint64_t seed) {
  if (random_mesh && fraction > 0.0)
    return std::make_shared<const Mesh>(perturbed_mesh(cells, fraction, seed));
  return std::make_shared<const Mesh>(uniform_mesh(cells));
}

}  // namespace

std::vector<double> orders_from_errors(const std::vector<double>& errors) {
  std::vector<double> orders(errors.size(), 0.0);
  for (std::size_t i = 1; i < errors.size(); ++i)
    orders[i] = (errors[i] > 0.0 && errors[i - 1] > 0.0)
                    ? std::log2(errors[i - 1] / errors[i])
                    : 0.0;
  return orders;
}

ConvergenceReport run_convergence(const ProblemSpec& problem, ConvergenceConfig config) {
  if (config.cells.empty())
    throw std::invalid_argument("run_convergence: empty cell list");
  ConvergenceReport report;
  report.config = config;
  report.cfl = config.cfl > 0.0 ? config.cfl : default_cfl(config.degree);

  const MeshPtr coarse = build_mesh(config.cells.front(), config.random_mesh,
                                    config.perturb_fraction,
                                    config.seed + config.cells.front());
  report.t_final = 10.0 * dt_from_cfl(report.cfl, *coarse);

  std::vector<double> err_u, err_phi;
  for (int n : config.cells) {
    ConvergenceRow row;
    row.cells = n;
    const MeshPtr mesh = build_mesh(n, config.random_mesh, config.perturb_fraction,
                                    config.seed + n);
    StatePair state{l2_project(problem.initial, mesh, config.degree),
                    zero_field(mesh, config.degree)};
    const double dt = dt_from_cfl(report.cfl, *mesh);
    try {
      state = integrate(std::move(state), dt, report.t_final,
                        [&](const StatePair& s) { return rhs(s, problem, config.variant); });
      row.error_u = problem.has_exact()
                        ? l2_error(state.u, [&](double x) {
                            return problem.exact(x, report.t_final);
                          })
                        : l2_norm(state.u);
      row.error_phi = l2_norm(state.phi);
    } catch (const std::runtime_error&) {
      row.ok = false;
      row.error_u = row.error_phi = std::nan("");
    }
    err_u.push_back(row.error_u);
    err_phi.push_back(row.error_phi);
    report.rows.push_back(row);
  }
  const auto ou = orders_from_errors(err_u);
  const auto op = orders_from_errors(err_phi);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    report.rows[i].order_u = ou[i];
    report.rows[i].order_phi = op[i];
  }
  return report;
}

std::string convergence_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  const ConvergenceConfig& c = report.config;
  out << "# kdv convergence example=" << to_string(c.example)
      << " method=" << to_string(c.variant) << " degree=" << c.degree
      << " mesh=" << (c.random_mesh ? "random" : "uniform")
      << " perturb=" << fmt("%.3f", c.perturb_fraction) << " seed=" << c.seed
      << " cfl=" << fmt("%.5e", report.cfl) << " T=" << fmt("%.5e", report.t_final)
      << "\n";
  out << "method,example,degree,cells,seed,error_u,order_u,error_phi,order_phi\n";
  for (const auto& row : report.rows) {
    out << to_string(c.variant) << ',' << to_string(c.example) << ',' << c.degree << ','
        << row.cells << ',' << (c.seed + row.cells) << ',' << fmt("%.5e", row.error_u)
        << ',' << fmt("%.2f", row.order_u) << ',' << fmt("%.5e", row.error_phi) << ','
        << fmt("%.2f", row.order_phi) << "\n";
  }
  return out.str();
}

EvolutionResult run_evolution(const ProblemSpec& problem, EvolutionConfig config) {
  if (!(config.t_final >= 0.0))
    throw std::invalid_argument("run_evolution: t_final must be nonnegative");
  EvolutionResult result;
  result.config = config;
  result.cfl = config.cfl > 0.0 ? config.cfl : default_cfl(config.degree);

  const MeshPtr mesh = build_mesh(config.cells, config.random_mesh,
                                  config.perturb_fraction, config.seed + config.cells);
  result.dt = dt_from_cfl(result.cfl, *mesh);
  StatePair state{l2_project(problem.initial, mesh, config.degree),
                  zero_field(mesh, config.degree)};

  const int cadence = std::max(1, config.energy_every);
  double last_t = -1.0;
  auto observer = [&](long step, double t, const StatePair& s) {
    if (step % cadence == 0 || t >= config.t_final) {
      if (t > last_t || step == 0) {
        result.history.push_back(
            {t, inner_product(s.u, s.u), inner_product(s.phi, s.phi)});
        last_t = t;
      }
    }
  };
  result.final_state =
      integrate(std::move(state), result.dt, config.t_final,
                [&](const StatePair& s) { return rhs(s, problem, config.variant); },
                observer);
  if (problem.has_exact())
    result.final_error_u = l2_error(result.final_state.u, [&](double x) {
      return problem.exact(x, config.t_final);
    });
  return result;
}

std::string energy_csv(const EvolutionResult& result) {
  std::ostringstream out;
  const EvolutionConfig& c = result.config;
  out << "# kdv evolve example=" << to_string(c.example)
      << " method=" << to_string(c.variant) << " degree=" << c.degree
      << " cells=" << c.cells << " mesh=" << (c.random_mesh ? "random" : "uniform")
      << " seed=" << c.seed << " cfl=" << fmt("%.5e", result.cfl)
      << " dt=" << fmt("%.5e", result.dt) << " T=" << fmt("%.5e", c.t_final) << "\n";
  out << "t,energy_u,energy_phi,energy_total\n";
  for (const auto& s : result.history)
    out << fmt("%.12e", s.t) << ',' << fmt("%.12e", s.energy_u) << ','
        << fmt("%.12e", s.energy_phi) << ',' << fmt("%.12e", s.energy_u + s.energy_phi)
        << "\n";
  return out.str();
}

std::string snapshot_csv(const StatePair& state, int points_per_cell) {
  if (points_per_cell < 2)
    throw std::invalid_argument("snapshot_csv: need at least 2 points per cell");
  std::ostringstream out;
  out << "x,u,phi\n";
  const Mesh& mesh = *state.u.mesh();
  for (int j = 0; j < mesh.num_cells(); ++j) {
    for (int p = 0; p < points_per_cell; ++p) {
      const double xi = -1.0 + 2.0 * p / (points_per_cell - 1);
      const double x = mesh.nodes[j] + 0.5 * mesh.cell_sizes[j] * (xi + 1.0);
      out << fmt("%.8e", x) << ',' << fmt("%.8e", state.u.cell_eval(j, xi)) << ','
          << fmt("%.8e", state.phi.cell_eval(j, xi)) << "\n";
    }
  }
  return out.str();
}

double form_value(const DGField& residual, const DGField& test) {
  double s = 0.0;
  for (int j = 0; j < residual.num_cells(); ++j)
    for (int i = 0; i <= residual.degree(); ++i)
      s += residual.coeff(j, i) * test.coeff(j, i);
  return s;
}

double form_scale(const DGField& residual, const DGField& test) {
  double s = 0.0;
  for (int j = 0; j < residual.num_cells(); ++j) {
    double cell = 0.0;
    for (int i = 0; i <= residual.degree(); ++i)
      cell += residual.coeff(j, i) * test.coeff(j, i);
    s += std::abs(cell);
  }
  return s;
}

DGField random_field(MeshPtr mesh, int degree, std::uint64_t seed) {
  DGField field(std::move(mesh), degree);
  std::mt19937_64 gen(seed);
  for (double& c : field.coeffs())
    c = 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
  return field;
}

bool PropertyReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

void record(PropertyReport& report, const std::string& name, double magnitude,
            double tolerance) {
  report.results.push_back({name, magnitude <= tolerance, magnitude, tolerance});
}

}  // namespace

PropertyReport run_property_suite(std::uint64_t seed, int num_states) {
  PropertyReport report;
  const double eps = 1.0 / (4.0 * M_PI * M_PI);

  // Mesh construction invariants.
  {
    double worst = 0.0;
    for (int n : {7, 20, 40}) {
      const Mesh m = perturbed_mesh(n, 0.1, seed + n);
      double sum = 0.0;
      for (double h : m.cell_sizes) sum += h;
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    record(report, "mesh cell sizes sum to 1", worst, 1e-14);
  }

  // Conservation and dissipation identities of the dispersion forms.
  double worst_a = 0.0, worst_c = 0.0, worst_u = 0.0;
  for (int k : {2, 3, 4}) {
    for (int mesh_kind = 0; mesh_kind < 2; ++mesh_kind) {
      const MeshPtr mesh =
          mesh_kind == 0
              ? std::make_shared<const Mesh>(uniform_mesh(16))
              : std::make_shared<const Mesh>(perturbed_mesh(16, 0.1, seed + k));
      for (int s = 0; s < num_states; ++s) {
        const std::uint64_t sd = seed + 1000 * k + 10 * mesh_kind + s;
        StatePair state{random_field(mesh, k, sd), random_field(mesh, k, sd + 7)};
        const auto da = dispersion_residual(state, MethodVariant::A, eps);
        const double vu = form_value(da.u, state.u);
        const double vp = form_value(da.phi, state.phi);
        const double scale =
            form_scale(da.u, state.u) + form_scale(da.phi, state.phi) + 1e-300;
        worst_a = std::max(worst_a, std::abs(vu - vp) / scale);

        StatePair uonly{state.u, zero_field(mesh, k)};
        const auto dc = dispersion_residual(uonly, MethodVariant::C, eps);
        worst_c = std::max(worst_c, std::abs(form_value(dc.u, state.u)) /
                                        (form_scale(dc.u, state.u) + 1e-300));
        const auto du = dispersion_residual(uonly, MethodVariant::U, eps);
        const double qu =
            form_value(du.u, state.u) / (form_scale(du.u, state.u) + 1e-300);
        worst_u = std::max(worst_u, -qu);  // must be >= -tol
      }
    }
  }
  record(report, "variant A conservation identity", worst_a, 1e-12);
  record(report, "variant C conservation identity", worst_c, 1e-12);
  record(report, "variant U dissipation sign", worst_u, 1e-12);

  // Entropy identity of the convection form.
  {
    FluxFunction fluxes[3];
    fluxes[0] = {[](double u) { return u; }, [](double) { return 1.0; },
                 [](double u) { return 0.5 * u * u; }};
    fluxes[1] = {[](double u) { return -u; }, [](double) { return -1.0; },
                 [](double u) { return -0.5 * u * u; }};
    fluxes[2] = {[](double u) { return 0.5 * u * u; }, [](double u) { return u; },
                 [](double u) { return u * u * u / 6.0; }};
    double worst = 0.0;
    const MeshPtr mesh = std::make_shared<const Mesh>(perturbed_mesh(16, 0.1, seed));
    for (int fi = 0; fi < 3; ++fi)
      for (int k : {2, 3, 4})
        for (int s = 0; s < num_states; ++s) {
          StatePair state{random_field(mesh, k, seed + 100 * fi + s),
                          zero_field(mesh, k)};
          const DGField conv = convection_residual(state, fluxes[fi]);
          worst = std::max(worst, std::abs(form_value(conv, state.u)) /
                                      (form_scale(conv, state.u) + 1e-300));
        }
    record(report, "entropy flux identity", worst, 1e-11);
  }

  // Coupled projection: the six interface conditions.
  {
    const double tp = 2.0 * M_PI;
    const ScalarFn3 u{[=](double x) { return std::sin(tp * x); },
                      [=](double x) { return tp * std::cos(tp * x); },
                      [=](double x) { return -tp * tp * std::sin(tp * x); }};
    const ScalarFn3 phi{[=](double x) { return std::cos(tp * x); },
                        [=](double x) { return -tp * std::sin(tp * x); },
                        [=](double x) { return -tp * tp * std::cos(tp * x); }};
    double worst = 0.0;
    for (int k : {2, 3}) {
      const MeshPtr mesh = std::make_shared<const Mesh>(perturbed_mesh(20, 0.1, seed + k));
      auto [p1, p2] = coupled_project(u, phi, mesh, k);
      const auto t1 = traces(p1);
      const auto t2 = traces(p2);
      for (int i = 0; i < mesh->num_cells(); ++i) {
        const double x = mesh->nodes[i];
        const double gu[3] = {u.value(x), u.dx(x), u.dxx(x)};
        const double gp[3] = {phi.value(x), phi.dx(x), phi.dxx(x)};
        for (int d = 0; d < 3; ++d) {
          // Residuals measured relative to the size of the matched data;
          // second-derivative rows carry (2/h)^2 scaling in the solve.
          worst = std::max(worst,
                           std::abs(t1[i].mean(d) + 0.5 * t2[i].jump(d) - gu[d]) /
                               std::max(1.0, std::abs(gu[d])));
          worst = std::max(worst,
                           std::abs(t2[i].mean(d) + 0.5 * t1[i].jump(d) - gp[d]) /
                               std::max(1.0, std::abs(gp[d])));
        }
      }
    }
    record(report, "coupled projection interface conditions", worst, 1e-12);
  }

  // Special functions.
  record(report, "elliptic K(0.5)", std::abs(elliptic_K(0.5) - 1.8540746773013719),
         1e-10);
  record(report, "elliptic K(0.9)", std::abs(elliptic_K(0.9) - 2.5780921133481731),
         1e-10);
  record(report, "cn quarter-period zero",
         std::abs(jacobi_cn(elliptic_K(0.9), 0.9)), 1e-12);

  // Exact solutions satisfy the PDE.
  {
    const auto r1 = residual_check(make_problem(ExampleId::Ex41), 50);
    record(report, "example 4.1 PDE residual", r1.max_residual, 1e-6);
    const auto r2 = residual_check(make_problem(ExampleId::Ex42), 50);
    record(report, "example 4.2 PDE residual", r2.max_residual, 1e-6);
    const auto r3 = residual_check(make_problem(ExampleId::Ex43), 50);
    record(report, "example 4.3 PDE residual (relative)", r3.max_residual / r3.scale,
           1e-5);
  }

  return report;
}

}  // namespace kdv
