#include <doctest.h>

#include <cmath>

#include "kdv/basis.hpp"

using kdv::gauss_rule;
using kdv::legendre_eval;
using kdv::orthonormal_basis_eval;

TEST_CASE("Legendre values match closed forms") {
  CHECK(legendre_eval(0, 0, 0.3) == doctest::Approx(1.0));
  CHECK(legendre_eval(1, 0, 0.3) == doctest::Approx(0.3));
  // P_3(x) = (5x^3 - 3x)/2, P_4(x) = (35x^4 - 30x^2 + 3)/8.
  CHECK(legendre_eval(3, 0, 0.5) == doctest::Approx(-0.4375).epsilon(1e-14));
  CHECK(legendre_eval(4, 0, 0.3) == doctest::Approx(0.0729375).epsilon(1e-13));
  CHECK(legendre_eval(6, 0, 1.0) == doctest::Approx(1.0));
  CHECK(legendre_eval(5, 0, -1.0) == doctest::Approx(-1.0));
}

TEST_CASE("Legendre derivatives match closed forms") {
  // P_2'(x) = 3x, P_3''(x) = 15x, P_5'''(x) = (3780x^2 - 420)/8.
  CHECK(legendre_eval(2, 1, 0.7) == doctest::Approx(2.1).epsilon(1e-14));
  CHECK(legendre_eval(3, 2, -0.2) == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(legendre_eval(5, 3, 0.5) == doctest::Approx(65.625).epsilon(1e-13));
}

TEST_CASE("Legendre derivatives agree with finite differences") {
  const double h = 1e-5;
  for (int deg = 1; deg <= 6; ++deg)
    for (double xi : {-0.8, -0.1, 0.4, 0.9}) {
      for (int d = 1; d <= 3; ++d) {
        const double fd = (legendre_eval(deg, d - 1, xi + h) -
                           legendre_eval(deg, d - 1, xi - h)) /
                          (2.0 * h);
        CHECK(legendre_eval(deg, d, xi) ==
              doctest::Approx(fd).epsilon(1e-6).scale(1.0));
      }
    }
}

TEST_CASE("orthonormal modes have unit norm and are orthogonal") {
  const auto q = gauss_rule(8);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      double s = 0.0;
      for (int n = 0; n < q.size(); ++n)
        s += q.weights[n] * orthonormal_basis_eval(i, 0, q.points[n]) *
             orthonormal_basis_eval(j, 0, q.points[n]);
      CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("small Gauss rules match tabulated nodes and weights") {
  const auto q2 = gauss_rule(2);
  CHECK(q2.points[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(q2.points[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(q2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

  const auto q3 = gauss_rule(3);
  CHECK(q3.points[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-14));
  CHECK(q3.points[1] == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
  CHECK(q3.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
  CHECK(q3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("Gauss points are Legendre roots and weights sum to 2") {
  for (int n : {2, 4, 5, 7, 9}) {
    const auto q = gauss_rule(n);
    REQUIRE(q.size() == n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(legendre_eval(n, 0, q.points[i])) < 1e-13);
      wsum += q.weights[i];
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("n-point rule is exact through degree 2n-1") {
  // int_{-1}^{1} x^8 dx = 2/9; a 5-point rule must be exact, 4-point is not.
  auto integrate = [](const kdv::QuadratureRule& q) {
    double s = 0.0;
    for (int i = 0; i < q.size(); ++i) s += q.weights[i] * std::pow(q.points[i], 8);
    return s;
  };
  CHECK(integrate(gauss_rule(5)) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  CHECK(std::abs(integrate(gauss_rule(4)) - 2.0 / 9.0) > 1e-4);
}
