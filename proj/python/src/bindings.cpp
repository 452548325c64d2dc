// Python bindings for the solver core: meshes, fields, projections, the
// study harness, and the special functions.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "kdv/field.hpp"
#include "kdv/harness.hpp"
#include "kdv/mesh.hpp"
#include "kdv/operators.hpp"
#include "kdv/problems.hpp"
#include "kdv/special.hpp"
#include "kdv/timestep.hpp"

namespace py = pybind11;

namespace {

using MeshHandle = std::shared_ptr<kdv::Mesh>;

kdv::MeshPtr as_const(const MeshHandle& mesh) { return mesh; }

kdv::ScalarFn3 make_fn3(const kdv::ScalarFn& value, const kdv::ScalarFn& dx,
                        const kdv::ScalarFn& dxx) {
  return {value, dx, dxx};
}

}  // namespace

PYBIND11_MODULE(_kdvdg, m) {
  m.doc() = "Discontinuous Galerkin solver for the generalized KdV equation";

  py::class_<kdv::Mesh, MeshHandle>(m, "Mesh")
      .def_readonly("nodes", &kdv::Mesh::nodes)
      .def_readonly("cell_sizes", &kdv::Mesh::cell_sizes)
      .def_readonly("h_max", &kdv::Mesh::h_max)
      .def_readonly("h_min", &kdv::Mesh::h_min)
      .def("num_cells", &kdv::Mesh::num_cells)
      .def("cell_center", &kdv::Mesh::cell_center, py::arg("j"));

  m.def("uniform_mesh",
        [](int n) { return std::make_shared<kdv::Mesh>(kdv::uniform_mesh(n)); },
        py::arg("num_cells"));
  m.def("perturbed_mesh",
        [](int n, double fraction, std::uint64_t seed) {
          return std::make_shared<kdv::Mesh>(kdv::perturbed_mesh(n, fraction, seed));
        },
        py::arg("num_cells"), py::arg("fraction"), py::arg("seed"));

  py::class_<kdv::DGField>(m, "DGField")
      .def("degree", &kdv::DGField::degree)
      .def("num_cells", &kdv::DGField::num_cells)
      .def("coeffs", [](const kdv::DGField& f) { return f.coeffs(); })
      .def("cell_eval", &kdv::DGField::cell_eval, py::arg("cell"), py::arg("xi"),
           py::arg("deriv") = 0)
      .def("__call__", &kdv::DGField::evaluate, py::arg("x"));

  m.def("l2_project",
        [](const kdv::ScalarFn& g, const MeshHandle& mesh, int degree) {
          return kdv::l2_project(g, as_const(mesh), degree);
        },
        py::arg("g"), py::arg("mesh"), py::arg("degree"));
  m.def("gauss_radau_project",
        [](const std::string& side, const kdv::ScalarFn& g, const kdv::ScalarFn& dg,
           const kdv::ScalarFn& ddg, const MeshHandle& mesh, int degree) {
          const auto s = side == "plus" ? kdv::RadauSide::Plus : kdv::RadauSide::Minus;
          return kdv::gauss_radau_project(s, make_fn3(g, dg, ddg), as_const(mesh),
                                          degree);
        },
        py::arg("side"), py::arg("g"), py::arg("dg"), py::arg("ddg"), py::arg("mesh"),
        py::arg("degree"));
  m.def("coupled_project",
        [](const kdv::ScalarFn& u, const kdv::ScalarFn& du, const kdv::ScalarFn& ddu,
           const kdv::ScalarFn& phi, const kdv::ScalarFn& dphi,
           const kdv::ScalarFn& ddphi, const MeshHandle& mesh, int degree) {
          return kdv::coupled_project(make_fn3(u, du, ddu), make_fn3(phi, dphi, ddphi),
                                      as_const(mesh), degree);
        },
        py::arg("u"), py::arg("du"), py::arg("ddu"), py::arg("phi"), py::arg("dphi"),
        py::arg("ddphi"), py::arg("mesh"), py::arg("degree"));

  m.def("l2_error", &kdv::l2_error, py::arg("field"), py::arg("g"));
  m.def("l2_norm", &kdv::l2_norm, py::arg("field"));
  m.def("inner_product", &kdv::inner_product, py::arg("a"), py::arg("b"));

  m.def("elliptic_K", &kdv::elliptic_K, py::arg("m"));
  m.def("jacobi_cn", &kdv::jacobi_cn, py::arg("z"), py::arg("m"));
  m.def("jacobi_sn", &kdv::jacobi_sn, py::arg("z"), py::arg("m"));

  m.def("default_cfl", &kdv::default_cfl, py::arg("degree"));

  m.def("exact_solution",
        [](const std::string& example, double x, double t) {
          return kdv::make_problem(kdv::example_from_string(example)).exact(x, t);
        },
        py::arg("example"), py::arg("x"), py::arg("t"));

  m.def("run_convergence",
        [](const std::string& example, const std::string& method, int degree,
           const std::vector<int>& cells, double cfl, bool random_mesh,
           double perturb_fraction, std::uint64_t seed) {
          kdv::ConvergenceConfig config;
          config.example = kdv::example_from_string(example);
          config.variant = kdv::variant_from_string(method);
          config.degree = degree;
          config.cells = cells;
          config.cfl = cfl;
          config.random_mesh = random_mesh;
          config.perturb_fraction = perturb_fraction;
          config.seed = seed;
          const auto rep = kdv::run_convergence(kdv::make_problem(config.example), config);
          py::list rows;
          for (const auto& r : rep.rows) {
            py::dict row;
            row["cells"] = r.cells;
            row["ok"] = r.ok;
            row["error_u"] = r.error_u;
            row["order_u"] = r.order_u;
            row["error_phi"] = r.error_phi;
            row["order_phi"] = r.order_phi;
            rows.append(row);
          }
          py::dict out;
          out["cfl"] = rep.cfl;
          out["t_final"] = rep.t_final;
          out["rows"] = rows;
          out["csv"] = kdv::convergence_csv(rep);
          return out;
        },
        py::arg("example") = "4.1", py::arg("method") = "A", py::arg("degree") = 2,
        py::arg("cells") = std::vector<int>{10, 20, 40, 80}, py::arg("cfl") = 0.0,
        py::arg("random_mesh") = true, py::arg("perturb_fraction") = 0.1,
        py::arg("seed") = 7);

  m.def("run_evolution",
        [](const std::string& example, const std::string& method, int degree, int cells,
           double t_final, double cfl, bool random_mesh, double perturb_fraction,
           std::uint64_t seed, int energy_every) {
          kdv::EvolutionConfig config;
          config.example = kdv::example_from_string(example);
          config.variant = kdv::variant_from_string(method);
          config.degree = degree;
          config.cells = cells;
          config.t_final = t_final;
          config.cfl = cfl;
          config.random_mesh = random_mesh;
          config.perturb_fraction = perturb_fraction;
          config.seed = seed;
          config.energy_every = energy_every;
          const auto res = kdv::run_evolution(kdv::make_problem(config.example), config);
          py::list history;
          for (const auto& s : res.history)
            history.append(py::make_tuple(s.t, s.energy_u, s.energy_phi));
          py::dict out;
          out["cfl"] = res.cfl;
          out["dt"] = res.dt;
          out["history"] = history;
          out["final_error_u"] = res.final_error_u;
          out["energy_csv"] = kdv::energy_csv(res);
          out["snapshot_csv"] = kdv::snapshot_csv(res.final_state);
          return out;
        },
        py::arg("example") = "4.4", py::arg("method") = "A", py::arg("degree") = 2,
        py::arg("cells") = 20, py::arg("t_final") = 5.0, py::arg("cfl") = 0.0,
        py::arg("random_mesh") = false, py::arg("perturb_fraction") = 0.1,
        py::arg("seed") = 7, py::arg("energy_every") = 1000);

  m.def("verify",
        [](std::uint64_t seed, int num_states) {
          const auto rep = kdv::run_property_suite(seed, num_states);
          py::list out;
          for (const auto& r : rep.results) {
            py::dict item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["measured"] = r.magnitude;
            item["tolerance"] = r.tolerance;
            out.append(item);
          }
          return out;
        },
        py::arg("seed") = 2024, py::arg("num_states") = 100);
}
