#ifndef KDV_FIELD_HPP
#define KDV_FIELD_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "kdv/mesh.hpp"

namespace kdv {

using MeshPtr = std::shared_ptr<const Mesh>;
using ScalarFn = std::function<double(double)>;

/// A scalar function together with its first two derivatives, as needed by
/// the Gauss-Radau projections.
struct ScalarFn3 {
  ScalarFn value;
  ScalarFn dx;
  ScalarFn dxx;
};

/// Piecewise polynomial of degree k >= 0 on a periodic mesh, stored as
/// per-cell coefficients in the orthonormal Legendre basis (cell mass matrix
/// is (h_j/2) * Identity).
class DGField {
 public:
  DGField() = default;
  DGField(MeshPtr mesh, int degree);

  int degree() const { return degree_; }
  int num_cells() const { return mesh_->num_cells(); }
  const MeshPtr& mesh() const { return mesh_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  std::vector<double>& coeffs() { return coeffs_; }

  double coeff(int cell, int mode) const { return coeffs_[cell * (degree_ + 1) + mode]; }
  double& coeff(int cell, int mode) { return coeffs_[cell * (degree_ + 1) + mode]; }

  /// Value (or physical derivative of order deriv <= 3) at reference
  /// coordinate xi in [-1,1] within cell j.
  double cell_eval(int cell, double xi, int deriv = 0) const;

  /// Point value at x in [0,1]; at interfaces the left limit is taken.
  double evaluate(double x) const;

  bool is_finite() const;

  // Value-semantic arithmetic, used by the time stepper.
  DGField& operator+=(const DGField& other);
  DGField& operator*=(double a);
  friend DGField operator+(DGField a, const DGField& b) { return a += b; }
  friend DGField operator*(double a, DGField f) { return f *= a; }

 private:
  MeshPtr mesh_;
  int degree_ = 0;
  std::vector<double> coeffs_;
};

/// The doubled unknown (u_h, phi_h), advanced in time together.
struct StatePair {
  DGField u;
  DGField phi;

  StatePair& operator+=(const StatePair& o) { u += o.u; phi += o.phi; return *this; }
  StatePair& operator*=(double a) { u *= a; phi *= a; return *this; }
  friend StatePair operator+(StatePair a, const StatePair& b) { return a += b; }
  friend StatePair operator*(double a, StatePair s) { return s *= a; }
};

/// One-sided limits of value and first two physical derivatives at one
/// interface. Interface i sits at mesh node i; left limits come from cell
/// (i-1+N) % N, right limits from cell i (periodic wraparound at i = 0).
struct InterfaceTrace {
  double left[3];
  double right[3];

  double jump(int d) const { return right[d] - left[d]; }
  double mean(int d) const { return 0.5 * (right[d] + left[d]); }
};

std::vector<InterfaceTrace> traces(const DGField& field);

/// Cellwise L2 projection of g onto V_h^k.
DGField l2_project(const ScalarFn& g, MeshPtr mesh, int degree);

enum class RadauSide {
  Plus,   // P_h^+: matches value/dx/dxx at the left cell endpoint x_{j-1/2}
  Minus,  // P_h^-: matches value/dx/dxx at the right cell endpoint x_{j+1/2}
};

/// Generalized Gauss-Radau projection: interior moments against P^{k-3}
/// (vacuous for k = 2) plus one-sided value/first/second derivative matching.
/// Requires k >= 2.
DGField gauss_radau_project(RadauSide side, const ScalarFn3& g, MeshPtr mesh, int degree);

/// Coupled projection (P1* u, P2* phi), computed locally as
///   P1* u  = (P^+(u+phi) + P^-(u-phi)) / 2,
///   P2* phi = (P^+(u+phi) - P^-(u-phi)) / 2.
std::pair<DGField, DGField> coupled_project(const ScalarFn3& u, const ScalarFn3& phi,
                                            MeshPtr mesh, int degree);

double inner_product(const DGField& a, const DGField& b);
double l2_norm(const DGField& field);

/// L2 distance to g, evaluated with a (k+3)-point Gauss rule per cell.
double l2_error(const DGField& field, const ScalarFn& g);

/// Total energy ||u_h||^2 + ||phi_h||^2 via Parseval.
double energy(const StatePair& state);

DGField zero_field(MeshPtr mesh, int degree);

}  // namespace kdv

#endif
