#include "kdv/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kdv/basis.hpp"

namespace kdv {

namespace {

// Dense solve with partial pivoting; a is n x n row-major, overwritten.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0)
      throw std::runtime_error("gauss_radau_project: singular local system");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r * n + col] / a[col * n + col];
      for (int c = col; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return x;
}

}  // namespace

DGField::DGField(MeshPtr mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree),
      coeffs_(static_cast<std::size_t>(mesh_->num_cells()) * (degree + 1), 0.0) {
  if (degree < 0) throw std::invalid_argument("DGField: degree must be >= 0");
}

double DGField::cell_eval(int cell, double xi, int deriv) const {
  const double scale = std::pow(2.0 / mesh_->cell_sizes[cell], deriv);
  double s = 0.0;
  for (int i = 0; i <= degree_; ++i)
    s += coeff(cell, i) * orthonormal_basis_eval(i, deriv, xi);
  return s * scale;
}

double DGField::evaluate(double x) const {
  const auto& nodes = mesh_->nodes;
  // Cell j such that nodes[j] < x <= nodes[j+1]; x = 0 maps to cell 0.
  auto it = std::lower_bound(nodes.begin() + 1, nodes.end(), x);
  if (it == nodes.end()) --it;
  const int j = static_cast<int>(it - nodes.begin()) - 1;
  const double xi = 2.0 * (x - nodes[j]) / mesh_->cell_sizes[j] - 1.0;
  return cell_eval(j, std::clamp(xi, -1.0, 1.0));
}

bool DGField::is_finite() const {
  for (double c : coeffs_)
    if (!std::isfinite(c)) return false;
  return true;
}

DGField& DGField::operator+=(const DGField& other) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DGField& DGField::operator*=(double a) {
  for (double& c : coeffs_) c *= a;
  return *this;
}

std::vector<InterfaceTrace> traces(const DGField& field) {
  const int n = field.num_cells();
  std::vector<InterfaceTrace> out(n);
  for (int i = 0; i < n; ++i) {
    const int left_cell = (i + n - 1) % n;
    for (int d = 0; d < 3; ++d) {
      out[i].left[d] = field.cell_eval(left_cell, 1.0, d);
      out[i].right[d] = field.cell_eval(i, -1.0, d);
    }
  }
  return out;
}

DGField l2_project(const ScalarFn& g, MeshPtr mesh, int degree) {
  DGField field(std::move(mesh), degree);
  const QuadratureRule rule = gauss_rule(degree + 4);
  const Mesh& m = *field.mesh();
  for (int j = 0; j < m.num_cells(); ++j) {
    const double xl = m.nodes[j];
    const double h = m.cell_sizes[j];
    for (int q = 0; q < rule.size(); ++q) {
      const double x = xl + 0.5 * h * (rule.points[q] + 1.0);
      const double gw = g(x) * rule.weights[q];
      for (int i = 0; i <= degree; ++i)
        field.coeff(j, i) += gw * orthonormal_basis_eval(i, 0, rule.points[q]);
    }
  }
  return field;
}

DGField gauss_radau_project(RadauSide side, const ScalarFn3& g, MeshPtr mesh, int degree) {
  if (degree < 2)
    throw std::invalid_argument("gauss_radau_project: requires degree >= 2");
  DGField field(std::move(mesh), degree);
  const Mesh& m = *field.mesh();
  const int n = degree + 1;
  const QuadratureRule rule = gauss_rule(degree + 4);
  const double xi_end = (side == RadauSide::Plus) ? -1.0 : 1.0;

  for (int j = 0; j < m.num_cells(); ++j) {
    const double xl = m.nodes[j];
    const double h = m.cell_sizes[j];
    const double x_end = (side == RadauSide::Plus) ? xl : m.nodes[j + 1];

    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> b(n, 0.0);
    // Moment rows: orthonormal basis makes them c_i = (g, b_i).
    for (int row = 0; row <= degree - 3; ++row) {
      a[row * n + row] = 1.0;
      double s = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        const double x = xl + 0.5 * h * (rule.points[q] + 1.0);
        s += rule.weights[q] * g.value(x) * orthonormal_basis_eval(row, 0, rule.points[q]);
      }
      b[row] = s;
    }
    // Endpoint rows: value, first, second derivative at the matching side.
    const double gd[3] = {g.value(x_end), g.dx(x_end), g.dxx(x_end)};
    for (int d = 0; d < 3; ++d) {
      const int row = n - 3 + d;
      const double scale = std::pow(2.0 / h, d);
      for (int i = 0; i < n; ++i)
        a[row * n + i] = scale * orthonormal_basis_eval(i, d, xi_end);
      b[row] = gd[d];
    }
    const std::vector<double> c = solve_dense(std::move(a), std::move(b));
    for (int i = 0; i < n; ++i) field.coeff(j, i) = c[i];
  }
  return field;
}

std::pair<DGField, DGField> coupled_project(const ScalarFn3& u, const ScalarFn3& phi,
                                            MeshPtr mesh, int degree) {
  const ScalarFn3 sum{
      [&](double x) { return u.value(x) + phi.value(x); },
      [&](double x) { return u.dx(x) + phi.dx(x); },
      [&](double x) { return u.dxx(x) + phi.dxx(x); }};
  const ScalarFn3 diff{
      [&](double x) { return u.value(x) - phi.value(x); },
      [&](double x) { return u.dx(x) - phi.dx(x); },
      [&](double x) { return u.dxx(x) - phi.dxx(x); }};
  const DGField plus = gauss_radau_project(RadauSide::Plus, sum, mesh, degree);
  const DGField minus = gauss_radau_project(RadauSide::Minus, diff, mesh, degree);
  DGField p1 = 0.5 * (plus + minus);
  DGField p2 = 0.5 * (plus + -1.0 * minus);
  return {std::move(p1), std::move(p2)};
}

double inner_product(const DGField& a, const DGField& b) {
  const Mesh& m = *a.mesh();
  double s = 0.0;
  for (int j = 0; j < m.num_cells(); ++j) {
    double cj = 0.0;
    for (int i = 0; i <= a.degree(); ++i) cj += a.coeff(j, i) * b.coeff(j, i);
    s += 0.5 * m.cell_sizes[j] * cj;
  }
  return s;
}

double l2_norm(const DGField& field) { return std::sqrt(inner_product(field, field)); }

double l2_error(const DGField& field, const ScalarFn& g) {
  const Mesh& m = *field.mesh();
  const QuadratureRule rule = gauss_rule(field.degree() + 3);
  double s = 0.0;
  for (int j = 0; j < m.num_cells(); ++j) {
    const double xl = m.nodes[j];
    const double h = m.cell_sizes[j];
    for (int q = 0; q < rule.size(); ++q) {
      const double x = xl + 0.5 * h * (rule.points[q] + 1.0);
      const double d = field.cell_eval(j, rule.points[q]) - g(x);
      s += 0.5 * h * rule.weights[q] * d * d;
    }
  }
  return std::sqrt(s);
}

double energy(const StatePair& state) {
  return inner_product(state.u, state.u) + inner_product(state.phi, state.phi);
}

DGField zero_field(MeshPtr mesh, int degree) { return DGField(std::move(mesh), degree); }

}  // namespace kdv
