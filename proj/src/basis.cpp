#include "kdv/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace kdv {

namespace {

// P_n and its first three derivatives by differentiating the three-term
// recurrence (n+1) P_{n+1} = (2n+1) xi P_n - n P_{n-1}.
void legendre_all(int degree, double xi, double out[4]) {
  double p[4] = {1.0, 0.0, 0.0, 0.0};   // P_0
  if (degree == 0) {
    for (int d = 0; d < 4; ++d) out[d] = p[d];
    return;
  }
  double q[4] = {xi, 1.0, 0.0, 0.0};    // P_1
  for (int n = 1; n < degree; ++n) {
    const double a = (2.0 * n + 1.0) / (n + 1.0);
    const double b = static_cast<double>(n) / (n + 1.0);
    double r[4];
    r[0] = a * xi * q[0] - b * p[0];
    r[1] = a * (q[0] + xi * q[1]) - b * p[1];
    r[2] = a * (2.0 * q[1] + xi * q[2]) - b * p[2];
    r[3] = a * (3.0 * q[2] + xi * q[3]) - b * p[3];
    for (int d = 0; d < 4; ++d) { p[d] = q[d]; q[d] = r[d]; }
  }
  for (int d = 0; d < 4; ++d) out[d] = q[d];
}

}  // namespace

double legendre_eval(int degree, int deriv_order, double xi) {
  if (degree < 0) throw std::invalid_argument("legendre_eval: degree must be >= 0");
  if (deriv_order < 0 || deriv_order > 3)
    throw std::invalid_argument("legendre_eval: deriv_order must be in 0..3");
  double v[4];
  legendre_all(degree, xi, v);
  return v[deriv_order];
}

double orthonormal_basis_eval(int i, int deriv_order, double xi) {
  return std::sqrt(i + 0.5) * legendre_eval(i, deriv_order, xi);
}

QuadratureRule gauss_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_rule: n must be >= 1");
  QuadratureRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double v[4];
      legendre_all(n, x, v);
      dp = v[1];
      const double dx = v[0] / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double v[4];
    legendre_all(n, x, v);
    dp = v[1];
    rule.points[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;
  return rule;
}

}  // namespace kdv
