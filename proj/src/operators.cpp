#include "kdv/operators.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "kdv/basis.hpp"

namespace kdv {

std::string to_string(MethodVariant v) {
  switch (v) {
    case MethodVariant::A: return "A";
    case MethodVariant::U: return "U";
    case MethodVariant::C: return "C";
  }
  return "?";
}

MethodVariant variant_from_string(const std::string& s) {
  if (s == "A") return MethodVariant::A;
  if (s == "U") return MethodVariant::U;
  if (s == "C") return MethodVariant::C;
  throw std::invalid_argument("unknown method variant: " + s);
}

namespace {

// Per-degree reference tables shared by all residual evaluations.
struct OperatorTables {
  int degree;
  QuadratureRule q_nonlinear;        // k+2 points, for f(u_h)(v_h)_x
  std::vector<double> third_deriv;   // [i*(k+1)+m] = int b_m b_i''' dxi
  std::vector<double> end_basis[2];  // xi = -1 / +1: [d*(k+1)+i] = b_i^(d)(xi)
  std::vector<double> b_at_q;        // [q*(k+1)+i] = b_i(xi_q) on q_nonlinear
  std::vector<double> bx_at_q;       // [q*(k+1)+i] = b_i'(xi_q)

  explicit OperatorTables(int k) : degree(k), q_nonlinear(gauss_rule(k + 2)) {
    const int n = k + 1;
    const QuadratureRule ql = gauss_rule(n);  // exact for degree <= 2k+1
    third_deriv.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < n; ++m) {
        double s = 0.0;
        for (int q = 0; q < ql.size(); ++q)
          s += ql.weights[q] * orthonormal_basis_eval(m, 0, ql.points[q]) *
               orthonormal_basis_eval(i, 3, ql.points[q]);
        third_deriv[i * n + m] = s;
      }
    for (int side = 0; side < 2; ++side) {
      const double xi = side == 0 ? -1.0 : 1.0;
      end_basis[side].resize(3 * n);
      for (int d = 0; d < 3; ++d)
        for (int i = 0; i < n; ++i)
          end_basis[side][d * n + i] = orthonormal_basis_eval(i, d, xi);
    }
    const int nq = q_nonlinear.size();
    b_at_q.resize(static_cast<std::size_t>(nq) * n);
    bx_at_q.resize(static_cast<std::size_t>(nq) * n);
    for (int q = 0; q < nq; ++q)
      for (int i = 0; i < n; ++i) {
        b_at_q[q * n + i] = orthonormal_basis_eval(i, 0, q_nonlinear.points[q]);
        bx_at_q[q * n + i] = orthonormal_basis_eval(i, 1, q_nonlinear.points[q]);
      }
  }
};

const OperatorTables& tables_for(int degree) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<OperatorTables>> cache;
  std::scoped_lock lock(mutex);
  auto& slot = cache[degree];
  if (!slot) slot = std::make_unique<OperatorTables>(degree);
  return *slot;
}

// D_{.,j} boundary contribution of one interface flux against cell-local test
// functions: at the cell's right end (outgoing, sign +1, interior trace xi=+1)
// and left end (sign -1, xi=-1).
void scatter_boundary(const OperatorTables& tab, const double flux_hat[3], double h,
                      int side /*0: left end, 1: right end*/, double eps_signed,
                      double* res_cell) {
  const int n = tab.degree + 1;
  const double s1 = 2.0 / h;
  const double s2 = s1 * s1;
  const double* eb = tab.end_basis[side].data();
  for (int i = 0; i < n; ++i) {
    const double term = flux_hat[0] * eb[2 * n + i] * s2 -
                        flux_hat[1] * eb[1 * n + i] * s1 +
                        flux_hat[2] * eb[0 * n + i];
    res_cell[i] += eps_signed * term;
  }
}

}  // namespace

std::vector<InterfaceFlux> flux_values(const StatePair& state, MethodVariant variant) {
  const auto tr_u = traces(state.u);
  const int n = state.u.num_cells();
  std::vector<InterfaceFlux> out(n);
  if (variant == MethodVariant::A) {
    const auto tr_phi = traces(state.phi);
    for (int i = 0; i < n; ++i)
      for (int d = 0; d < 3; ++d) {
        out[i].u_hat[d] = tr_u[i].mean(d) + 0.5 * tr_phi[i].jump(d);
        out[i].phi_hat[d] = tr_phi[i].mean(d) + 0.5 * tr_u[i].jump(d);
      }
    return out;
  }
  for (int i = 0; i < n; ++i) {
    out[i].u_hat[0] = tr_u[i].left[0];
    out[i].u_hat[2] = tr_u[i].right[2];
    out[i].u_hat[1] =
        (variant == MethodVariant::U) ? tr_u[i].right[1] : tr_u[i].mean(1);
    for (int d = 0; d < 3; ++d) out[i].phi_hat[d] = 0.0;
  }
  return out;
}

DispersionResidual dispersion_residual(const StatePair& state, MethodVariant variant,
                                       double epsilon) {
  const int k = state.u.degree();
  if (k < 2)
    throw std::invalid_argument("dispersion_residual: ultra-weak form requires degree >= 2");
  const OperatorTables& tab = tables_for(k);
  const Mesh& mesh = *state.u.mesh();
  const int ncells = mesh.num_cells();
  const int n = k + 1;
  const bool coupled = variant == MethodVariant::A;

  const auto fluxes = flux_values(state, variant);
  DispersionResidual res{zero_field(state.u.mesh(), k), zero_field(state.u.mesh(), k)};

  for (int j = 0; j < ncells; ++j) {
    const double h = mesh.cell_sizes[j];
    const double s2 = (2.0 / h) * (2.0 / h);
    const int left = j;
    const int right = (j + 1) % ncells;
    double* ru = &res.u.coeff(j, 0);
    // Volume term: -eps * int u_h (v_h)_xxx dx.
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += tab.third_deriv[i * n + m] * state.u.coeff(j, m);
      ru[i] = -epsilon * s2 * s;
    }
    scatter_boundary(tab, fluxes[right].u_hat, h, 1, epsilon, ru);
    scatter_boundary(tab, fluxes[left].u_hat, h, 0, -epsilon, ru);

    if (coupled) {
      double* rp = &res.phi.coeff(j, 0);
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int m = 0; m < n; ++m) s += tab.third_deriv[i * n + m] * state.phi.coeff(j, m);
        rp[i] = -epsilon * s2 * s;
      }
      scatter_boundary(tab, fluxes[right].phi_hat, h, 1, epsilon, rp);
      scatter_boundary(tab, fluxes[left].phi_hat, h, 0, -epsilon, rp);
    }
  }
  return res;
}

double entropy_flux(double u_left, double u_right, const FluxFunction& flux) {
  const double gap = std::abs(u_right - u_left);
  const double ref = std::max({1.0, std::abs(u_left), std::abs(u_right)});
  if (gap > 1e-8 * ref)
    return (flux.potential(u_right) - flux.potential(u_left)) / (u_right - u_left);
  return flux.f(0.5 * (u_left + u_right));
}

DGField convection_residual(const StatePair& state, const FluxFunction& flux) {
  DGField res = zero_field(state.u.mesh(), state.u.degree());
  if (flux.is_zero()) return res;

  const int k = state.u.degree();
  const int n = k + 1;
  const OperatorTables& tab = tables_for(k);
  const Mesh& mesh = *state.u.mesh();
  const int ncells = mesh.num_cells();

  const auto tr = traces(state.u);
  std::vector<double> fhat(ncells);
  for (int i = 0; i < ncells; ++i)
    fhat[i] = entropy_flux(tr[i].left[0], tr[i].right[0], flux);

  const int nq = tab.q_nonlinear.size();
  for (int j = 0; j < ncells; ++j) {
    double* r = &res.coeff(j, 0);
    // -int f(u_h) (v_h)_x dx, as a reference integral: the 2/h chain factor
    // cancels the h/2 Jacobian. Together with the interface terms this is
    // consistent with +int f(u)_x v dx.
    for (int q = 0; q < nq; ++q) {
      double uq = 0.0;
      for (int m = 0; m < n; ++m) uq += state.u.coeff(j, m) * tab.b_at_q[q * n + m];
      const double fw = flux.f(uq) * tab.q_nonlinear.weights[q];
      for (int i = 0; i < n; ++i) r[i] -= fw * tab.bx_at_q[q * n + i];
    }
    const int left = j;
    const int right = (j + 1) % ncells;
    for (int i = 0; i < n; ++i) {
      r[i] += fhat[right] * tab.end_basis[1][i];
      r[i] -= fhat[left] * tab.end_basis[0][i];
    }
  }
  return res;
}

StatePair rhs(const StatePair& state, const ProblemSpec& problem, MethodVariant variant) {
  DispersionResidual disp = dispersion_residual(state, variant, problem.epsilon);
  const bool convect = !problem.flux.is_zero();
  DGField conv = convect ? convection_residual(state, problem.flux)
                         : zero_field(state.u.mesh(), state.u.degree());

  const Mesh& mesh = *state.u.mesh();
  StatePair out{zero_field(state.u.mesh(), state.u.degree()),
                zero_field(state.u.mesh(), state.u.degree())};
  const int n = state.u.degree() + 1;
  for (int j = 0; j < mesh.num_cells(); ++j) {
    const double inv_mass = 2.0 / mesh.cell_sizes[j];
    for (int i = 0; i < n; ++i) {
      out.u.coeff(j, i) = -inv_mass * (disp.u.coeff(j, i) + conv.coeff(j, i));
      if (variant == MethodVariant::A)
        out.phi.coeff(j, i) = inv_mass * disp.phi.coeff(j, i);
    }
  }
  return out;
}

}  // namespace kdv
