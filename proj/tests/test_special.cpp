#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kdv/special.hpp"

namespace {

// Independent oracle: K(m) by direct midpoint quadrature of the defining
// integral K = int_0^{pi/2} dt / sqrt(1 - m sin^2 t).
double elliptic_K_quadrature(double m, int n = 20000) {
  double s = 0.0;
  const double h = M_PI / 2.0 / n;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) * h;
    const double st = std::sin(t);
    s += h / std::sqrt(1.0 - m * st * st);
  }
  return s;
}

}  // namespace

TEST_CASE("elliptic K matches the defining integral") {
  for (double m : {0.0, 0.1, 0.5, 0.9, 0.99})
    CHECK(kdv::elliptic_K(m) == doctest::Approx(elliptic_K_quadrature(m)).epsilon(1e-9));
}

TEST_CASE("elliptic K frozen reference values") {
  CHECK(kdv::elliptic_K(0.0) == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  CHECK(kdv::elliptic_K(0.5) == doctest::Approx(1.8540746773013719).epsilon(1e-14));
  CHECK(kdv::elliptic_K(0.9) == doctest::Approx(2.5780921133481731).epsilon(1e-14));
}

TEST_CASE("elliptic K rejects parameters outside [0,1)") {
  CHECK_THROWS_AS(kdv::elliptic_K(1.0), std::invalid_argument);
  CHECK_THROWS_AS(kdv::elliptic_K(-0.1), std::invalid_argument);
}

TEST_CASE("Jacobi functions at z = 0 and for m = 0") {
  const auto v0 = kdv::jacobi_elliptic(0.0, 0.7);
  CHECK(v0.sn == doctest::Approx(0.0).scale(1.0));
  CHECK(v0.cn == doctest::Approx(1.0));
  CHECK(v0.dn == doctest::Approx(1.0));
  const auto vt = kdv::jacobi_elliptic(0.8, 0.0);
  CHECK(vt.sn == doctest::Approx(std::sin(0.8)).epsilon(1e-14));
  CHECK(vt.cn == doctest::Approx(std::cos(0.8)).epsilon(1e-14));
  CHECK(vt.dn == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("fundamental Jacobi identities hold pointwise") {
  for (double m : {0.2, 0.7, 0.9})
    for (double z : {-2.3, -0.4, 0.1, 1.7, 5.2}) {
      const auto v = kdv::jacobi_elliptic(z, m);
      CHECK(v.sn * v.sn + v.cn * v.cn == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(v.dn * v.dn + m * v.sn * v.sn == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("quarter and full period behaviour") {
  const double m = 0.9;
  const double K = kdv::elliptic_K(m);
  CHECK(std::abs(kdv::jacobi_cn(K, m)) < 1e-13);
  CHECK(kdv::jacobi_sn(K, m) == doctest::Approx(1.0).epsilon(1e-13));
  // cn has period 4K; cn(2K) = -1.
  CHECK(kdv::jacobi_cn(2.0 * K, m) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(kdv::jacobi_cn(4.0 * K + 0.3, m) ==
        doctest::Approx(kdv::jacobi_cn(0.3, m)).epsilon(1e-11));
}

TEST_CASE("derivative relations via finite differences") {
  const double m = 0.7, z = 0.6, h = 1e-6;
  const auto v = kdv::jacobi_elliptic(z, m);
  const double dsn = (kdv::jacobi_sn(z + h, m) - kdv::jacobi_sn(z - h, m)) / (2 * h);
  const double dcn = (kdv::jacobi_cn(z + h, m) - kdv::jacobi_cn(z - h, m)) / (2 * h);
  CHECK(dsn == doctest::Approx(v.cn * v.dn).epsilon(1e-8));
  CHECK(dcn == doctest::Approx(-v.sn * v.dn).epsilon(1e-8));
}
