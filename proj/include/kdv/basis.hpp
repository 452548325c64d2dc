#ifndef KDV_BASIS_HPP
#define KDV_BASIS_HPP

#include <vector>

namespace kdv {

/// Gauss-Legendre rule on the reference interval [-1,1].
struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
};

/// d-th derivative (d in 0..3) of the Legendre polynomial P_degree at xi.
double legendre_eval(int degree, int deriv_order, double xi);

/// Orthonormal Legendre mode b_i = sqrt((2i+1)/2) P_i, so the reference mass
/// matrix is the identity. Derivatives up to order 3.
double orthonormal_basis_eval(int i, int deriv_order, double xi);

/// n-point Gauss-Legendre rule, exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_rule(int n);

}  // namespace kdv

#endif
