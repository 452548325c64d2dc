#ifndef KDV_OPERATORS_HPP
#define KDV_OPERATORS_HPP

#include <functional>
#include <string>
#include <vector>

#include "kdv/field.hpp"

namespace kdv {

/// Flux selection for the dispersion operator.
///   A: new coupled fluxes on the doubled system (u_h, phi_h);
///   U: Cheng-Shu fluxes (optimal, dissipative), u_h only;
///   C: Bona et al. fluxes (conservative, suboptimal), u_h only.
enum class MethodVariant { A, U, C };

std::string to_string(MethodVariant v);
MethodVariant variant_from_string(const std::string& s);

/// Convective flux f with its derivative and the potential Psi, Psi' = f.
/// The square-entropy-conserving two-point flux is the divided difference of
/// Psi. A default-constructed FluxFunction means f == 0 (no convection).
struct FluxFunction {
  ScalarFn f;
  ScalarFn fprime;
  ScalarFn potential;

  bool is_zero() const { return !f; }
};

/// One instance of u_t + f(u)_x + epsilon u_xxx = 0 with periodic data.
struct ProblemSpec {
  std::string name;
  double epsilon = 0.0;
  FluxFunction flux;
  ScalarFn initial;
  std::function<double(double, double)> exact;  // null when unknown

  bool has_exact() const { return static_cast<bool>(exact); }
};

/// Single-valued numerical fluxes (value, first, second derivative) at one
/// interface; phi_hat is only meaningful for variant A.
struct InterfaceFlux {
  double u_hat[3];
  double phi_hat[3];
};

std::vector<InterfaceFlux> flux_values(const StatePair& state, MethodVariant variant);

/// Dual-space residuals: coefficient (j,i) holds the value of the bilinear
/// form against the basis function b_i of cell j (no mass inversion).
struct DispersionResidual {
  DGField u;
  DGField phi;
};

/// Ultra-weak dispersion forms D_u and D_phi. Requires degree >= 2.
DispersionResidual dispersion_residual(const StatePair& state, MethodVariant variant,
                                       double epsilon);

/// Square-entropy-conserving two-point flux: divided difference of the
/// potential, with a guarded degenerate branch returning f((uL+uR)/2).
double entropy_flux(double u_left, double u_right, const FluxFunction& flux);

/// Convection form F_u with the entropy-conserving interface flux.
DGField convection_residual(const StatePair& state, const FluxFunction& flux);

/// Method-of-lines right-hand side: d/dt u_h = -M^{-1}(F_u + D_u),
/// d/dt phi_h = +M^{-1} D_phi (zero for variants U and C).
StatePair rhs(const StatePair& state, const ProblemSpec& problem, MethodVariant variant);

}  // namespace kdv

#endif
