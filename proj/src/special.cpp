#include "kdv/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kdv {

namespace {
constexpr int kMaxAgmIter = 40;

void check_parameter(double m) {
  if (!(m >= 0.0 && m < 1.0))
    throw std::invalid_argument("elliptic parameter m must lie in [0, 1)");
}
}  // namespace

double elliptic_K(double m) {
  check_parameter(m);
  double a = 1.0;
  double g = std::sqrt(1.0 - m);
  for (int i = 0; i < kMaxAgmIter && std::abs(a - g) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
  }
  return M_PI / (2.0 * a);
}

JacobiValues jacobi_elliptic(double z, double m) {
  check_parameter(m);
  if (m == 0.0) return {std::sin(z), std::cos(z), 1.0};

  // Descending AGM (Abramowitz & Stegun 16.4).
  double a[kMaxAgmIter + 1], c[kMaxAgmIter + 1];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double g = std::sqrt(1.0 - m);
  int n = 0;
  while (n < kMaxAgmIter && std::abs(c[n]) > 1e-16 * a[n]) {
    const double an = 0.5 * (a[n] + g);
    c[n + 1] = 0.5 * (a[n] - g);
    g = std::sqrt(a[n] * g);
    a[n + 1] = an;
    ++n;
  }
  double phi = std::ldexp(a[n] * z, n);
  for (int i = n; i >= 1; --i) {
    const double s = std::clamp(c[i] * std::sin(phi) / a[i], -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }
  JacobiValues v;
  v.sn = std::sin(phi);
  v.cn = std::cos(phi);
  v.dn = std::sqrt(std::max(0.0, 1.0 - m * v.sn * v.sn));
  return v;
}

double jacobi_cn(double z, double m) { return jacobi_elliptic(z, m).cn; }
double jacobi_sn(double z, double m) { return jacobi_elliptic(z, m).sn; }

}  // namespace kdv
