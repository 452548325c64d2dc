#include <doctest.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "kdv/harness.hpp"
#include "kdv/operators.hpp"
#include "kdv/problems.hpp"

using kdv::DGField;
using kdv::FluxFunction;
using kdv::Mesh;
using kdv::MeshPtr;
using kdv::MethodVariant;
using kdv::StatePair;

namespace {

MeshPtr make_uniform(int n) {
  return std::make_shared<const Mesh>(kdv::uniform_mesh(n));
}

MeshPtr make_perturbed(int n, std::uint64_t seed) {
  return std::make_shared<const Mesh>(kdv::perturbed_mesh(n, 0.1, seed));
}

DGField piecewise_constant(MeshPtr mesh, int degree, const std::vector<double>& vals) {
  DGField f(mesh, degree);
  for (int j = 0; j < f.num_cells(); ++j) f.coeff(j, 0) = vals[j] * std::sqrt(2.0);
  return f;
}

FluxFunction burgers() {
  return {[](double u) { return 0.5 * u * u; }, [](double u) { return u; },
          [](double u) { return u * u * u / 6.0; }};
}

}  // namespace

TEST_CASE("variant names round-trip") {
  for (auto v : {MethodVariant::A, MethodVariant::U, MethodVariant::C})
    CHECK(kdv::variant_from_string(kdv::to_string(v)) == v);
  CHECK_THROWS_AS(kdv::variant_from_string("B"), std::invalid_argument);
}

TEST_CASE("entropy flux: divided difference of the potential") {
  const FluxFunction f = burgers();
  // (Psi(2) - Psi(1)) / (2 - 1) = (8/6 - 1/6) = 7/6 = (uL^2 + uL uR + uR^2)/6.
  CHECK(kdv::entropy_flux(1.0, 2.0, f) == doctest::Approx(7.0 / 6.0).epsilon(1e-14));
  CHECK(kdv::entropy_flux(-1.0, 3.0, f) == doctest::Approx(7.0 / 6.0).epsilon(1e-14));
  // Consistency: equal states give f(u).
  CHECK(kdv::entropy_flux(0.7, 0.7, f) == doctest::Approx(f.f(0.7)).epsilon(1e-14));
  // Degenerate branch: nearly equal states fall back to the midpoint value.
  const double a = 2.0, b = 2.0 + 1e-12;
  CHECK(kdv::entropy_flux(a, b, f) == doctest::Approx(f.f(0.5 * (a + b))).epsilon(1e-13));
}

TEST_CASE("entropy flux of a linear f is the arithmetic mean") {
  const FluxFunction lin{[](double u) { return 3.0 * u; }, [](double) { return 3.0; },
                         [](double u) { return 1.5 * u * u; }};
  CHECK(kdv::entropy_flux(1.0, 5.0, lin) == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("interface flux selection per variant") {
  const auto mesh = make_uniform(2);
  StatePair state{piecewise_constant(mesh, 2, {1.0, 3.0}),
                  piecewise_constant(mesh, 2, {2.0, -1.0})};

  const auto fu = kdv::flux_values(state, MethodVariant::U);
  CHECK(fu[0].u_hat[0] == doctest::Approx(3.0));  // left value at interface 0
  CHECK(fu[1].u_hat[0] == doctest::Approx(1.0));
  CHECK(fu[0].u_hat[1] == doctest::Approx(0.0).scale(1.0));
  CHECK(fu[0].phi_hat[0] == doctest::Approx(0.0).scale(1.0));

  const auto fc = kdv::flux_values(state, MethodVariant::C);
  CHECK(fc[0].u_hat[0] == doctest::Approx(3.0));
  CHECK(fc[0].u_hat[1] == doctest::Approx(0.0).scale(1.0));  // mean of derivatives

  // Variant A: u_hat = {u} + [phi]/2, phi_hat = {phi} + [u]/2.
  const auto fa = kdv::flux_values(state, MethodVariant::A);
  CHECK(fa[0].u_hat[0] == doctest::Approx(2.0 + 0.5 * 3.0));
  CHECK(fa[0].phi_hat[0] == doctest::Approx(0.5 + 0.5 * (-2.0)));
  CHECK(fa[1].u_hat[0] == doctest::Approx(2.0 - 0.5 * 3.0));
  CHECK(fa[1].phi_hat[0] == doctest::Approx(0.5 + 0.5 * 2.0));
}

TEST_CASE("dispersion form requires degree >= 2") {
  const auto mesh = make_uniform(4);
  StatePair state{kdv::zero_field(mesh, 1), kdv::zero_field(mesh, 1)};
  CHECK_THROWS_AS(kdv::dispersion_residual(state, MethodVariant::A, 1.0),
                  std::invalid_argument);
}

TEST_CASE("dispersion form is linear in the state") {
  const auto mesh = make_perturbed(8, 13);
  const int k = 3;
  StatePair x{kdv::random_field(mesh, k, 1), kdv::random_field(mesh, k, 2)};
  StatePair y{kdv::random_field(mesh, k, 3), kdv::random_field(mesh, k, 4)};
  const StatePair z = 2.0 * x + (-3.0) * y;
  const auto dx = kdv::dispersion_residual(x, MethodVariant::A, 0.7);
  const auto dy = kdv::dispersion_residual(y, MethodVariant::A, 0.7);
  const auto dz = kdv::dispersion_residual(z, MethodVariant::A, 0.7);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i <= k; ++i) {
      CHECK(dz.u.coeff(j, i) ==
            doctest::Approx(2.0 * dx.u.coeff(j, i) - 3.0 * dy.u.coeff(j, i))
                .epsilon(1e-12).scale(1.0));
      CHECK(dz.phi.coeff(j, i) ==
            doctest::Approx(2.0 * dx.phi.coeff(j, i) - 3.0 * dy.phi.coeff(j, i))
                .epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("conservation identities of the three variants") {
  const double eps = 0.31;
  for (int k : {2, 3, 4}) {
    const auto mesh = make_perturbed(12, 100 + k);
    for (int s = 0; s < 20; ++s) {
      StatePair state{kdv::random_field(mesh, k, 10 * k + s),
                      kdv::random_field(mesh, k, 10 * k + s + 500)};
      // A: sum_j D_u(.; u) - sum_j D_phi(.; phi) = 0.
      const auto da = kdv::dispersion_residual(state, MethodVariant::A, eps);
      const double va = kdv::form_value(da.u, state.u) - kdv::form_value(da.phi, state.phi);
      const double sa = kdv::form_scale(da.u, state.u) + kdv::form_scale(da.phi, state.phi);
      CHECK(std::abs(va) <= 1e-12 * sa);

      StatePair uonly{state.u, kdv::zero_field(mesh, k)};
      // C: sum_j D_u(u; u) = 0 exactly.
      const auto dc = kdv::dispersion_residual(uonly, MethodVariant::C, eps);
      CHECK(std::abs(kdv::form_value(dc.u, state.u)) <=
            1e-12 * kdv::form_scale(dc.u, state.u));
      // U: sum_j D_u(u; u) >= 0 (dissipative).
      const auto du = kdv::dispersion_residual(uonly, MethodVariant::U, eps);
      CHECK(kdv::form_value(du.u, state.u) >=
            -1e-12 * kdv::form_scale(du.u, state.u));
    }
  }
}

TEST_CASE("entropy identity: convection form vanishes against its own state") {
  const auto mesh = make_perturbed(10, 77);
  const FluxFunction f = burgers();
  for (int s = 0; s < 20; ++s) {
    StatePair state{kdv::random_field(mesh, 3, 900 + s), kdv::zero_field(mesh, 3)};
    const DGField conv = kdv::convection_residual(state, f);
    CHECK(std::abs(kdv::form_value(conv, state.u)) <=
          1e-11 * kdv::form_scale(conv, state.u));
  }
}

TEST_CASE("constant states are discrete steady states") {
  const auto mesh = make_perturbed(6, 5);
  kdv::ProblemSpec prob = kdv::make_problem(kdv::ExampleId::Ex43);
  StatePair state{piecewise_constant(mesh, 3, std::vector<double>(6, 1.3)),
                  kdv::zero_field(mesh, 3)};
  for (auto v : {MethodVariant::A, MethodVariant::U, MethodVariant::C}) {
    const StatePair r = kdv::rhs(state, prob, v);
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i <= 3; ++i) {
        CHECK(r.u.coeff(j, i) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        CHECK(r.phi.coeff(j, i) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
      }
  }
}

TEST_CASE("residual stencil is the cell and its two neighbours") {
  const auto mesh = make_uniform(8);
  const int k = 2;
  StatePair base{kdv::random_field(mesh, k, 31), kdv::random_field(mesh, k, 32)};
  StatePair bumped = base;
  bumped.u.coeff(3, 1) += 1.0;
  const auto d0 = kdv::dispersion_residual(base, MethodVariant::A, 1.0);
  const auto d1 = kdv::dispersion_residual(bumped, MethodVariant::A, 1.0);
  for (int j = 0; j < 8; ++j) {
    double diff = 0.0;
    for (int i = 0; i <= k; ++i)
      diff += std::abs(d1.u.coeff(j, i) - d0.u.coeff(j, i)) +
              std::abs(d1.phi.coeff(j, i) - d0.phi.coeff(j, i));
    if (j >= 2 && j <= 4)
      CHECK(diff > 0.0);
    else
      CHECK(diff == doctest::Approx(0.0).scale(1.0));
  }
}

TEST_CASE("rhs is weakly consistent with the exact time derivative") {
  // d/dt of the exact solutions at t = 0, tested against a smooth projected
  // test function: <u_t, cos(2 pi x)> = amp / 2.
  struct Case { kdv::ExampleId id; double amp; };
  for (const Case c : {Case{kdv::ExampleId::Ex41, 2.0 * M_PI},
                       Case{kdv::ExampleId::Ex42, 4.0 * M_PI}}) {
    const kdv::ProblemSpec prob = kdv::make_problem(c.id);
    for (int n : {16, 32}) {
      const auto mesh = make_uniform(n);
      StatePair state{kdv::l2_project(prob.initial, mesh, 3), kdv::zero_field(mesh, 3)};
      const StatePair r = kdv::rhs(state, prob, MethodVariant::A);
      const DGField w =
          kdv::l2_project([](double x) { return std::cos(2.0 * M_PI * x); }, mesh, 3);
      const double got = kdv::inner_product(r.u, w);
      CHECK(got == doctest::Approx(0.5 * c.amp).epsilon(n == 16 ? 1e-5 : 1e-7));
    }
  }
}

TEST_CASE("variants U and C do not move phi") {
  const auto mesh = make_uniform(6);
  kdv::ProblemSpec prob = kdv::make_problem(kdv::ExampleId::Ex41);
  StatePair state{kdv::random_field(mesh, 2, 8), kdv::random_field(mesh, 2, 9)};
  for (auto v : {MethodVariant::U, MethodVariant::C}) {
    const StatePair r = kdv::rhs(state, prob, v);
    CHECK(kdv::l2_norm(r.phi) == doctest::Approx(0.0).scale(1.0));
  }
}
