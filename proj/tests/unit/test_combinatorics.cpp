#include "sbt/combinatorics.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace sbt;

TEST_CASE("Stirling numbers match hand-computed rows") {
  // second kind, row 4: partitions of a 4-set into k blocks
  CHECK(stirling_second(4, 1) == 1);
  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_second(4, 3) == 6);
  CHECK(stirling_second(4, 4) == 1);
  CHECK(stirling_second(5, 2) == 15);
  // signed first kind, row 4: coefficients of z(z-1)(z-2)(z-3)
  CHECK(stirling_first(4, 1) == -6);
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(4, 3) == -6);
  CHECK(stirling_first(4, 4) == 1);
  CHECK(stirling_first(3, 2) == -3);
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_second(6, 0) == 0);
}

TEST_CASE("the two kinds are inverse triangles") {
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) {
      BigInt acc = 0;
      for (int k = m; k <= n; ++k) acc += stirling_second(n, k) * stirling_first(k, m);
      CHECK(acc == BigInt(n == m ? 1 : 0));
    }
}

TEST_CASE("bounds are enforced") {
  StirlingTable table(StirlingTable::Kind::second, 8);
  CHECK_THROWS_AS(table.value(9, 1), std::domain_error);
  CHECK_THROWS_AS(table.value(3, 4), std::domain_error);
  CHECK_THROWS_AS(table.value(-1, 0), std::domain_error);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(factorial(6) == 720);
  CHECK(factorial(0) == 1);
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(3) == 15);  // 5!! = 1*3*5
}

TEST_CASE("factorial polynomials expand correctly") {
  // z(z-1)(z-2) = z^3 - 3z^2 + 2z
  CHECK(falling_factorial(3) ==
        Poly::from_coeffs({Rational(0), Rational(2), Rational(-3), Rational(1)}));
  CHECK(falling_factorial(0) == Poly(Rational(1)));
  // z(z - 1/2) = z^2 - z/2
  CHECK(generalized_factorial(2, Rational(1, 2)) ==
        Poly::from_coeffs({Rational(0), Rational(-1, 2), Rational(1)}));
  // alpha = 1 reduces to the plain falling factorial
  for (int n = 0; n <= 8; ++n) CHECK(generalized_factorial(n, Rational(1)) == falling_factorial(n));
}

TEST_CASE("Touchard polynomials carry the Stirling rows") {
  CHECK(touchard(3) == Poly::from_coeffs({Rational(0), Rational(1), Rational(3), Rational(1)}));
  CHECK(touchard(4) ==
        Poly::from_coeffs({Rational(0), Rational(1), Rational(7), Rational(6), Rational(1)}));
  CHECK(touchard(0) == Poly(Rational(1)));
  // scaled variant: coefficient of z^k is S(n,k) alpha^{n-k}
  CHECK(touchard_scaled(3, Rational(2)) ==
        Poly::from_coeffs({Rational(0), Rational(4), Rational(6), Rational(1)}));
  // Bell numbers at z = 1: 1, 1, 2, 5, 15, 52
  CHECK(touchard(5).eval(Rational(1)) == Rational(52));
}

TEST_CASE("lattice moments from scaled Touchard values") {
  ModelParams p11(Rational(1), Rational(1));
  ModelParams p25(Rational(2), Rational(5));
  CHECK(poisson_type_moment(0, p11) == Rational(1));
  CHECK(poisson_type_moment(1, p11) == Rational(1));        // mean sigma/alpha
  CHECK(poisson_type_moment(2, p11) == Rational(2));        // variance + mean^2
  CHECK(poisson_type_moment(1, p25) == Rational(5, 2));
  CHECK(poisson_type_moment(2, p25) == Rational(45, 4));
  // second central moment is sigma for every parameter set
  for (const ModelParams& p : {p11, p25, ModelParams(Rational(1, 2), Rational(3, 4))}) {
    Rational mean = poisson_type_moment(1, p);
    CHECK(poisson_type_moment(2, p) - mean * mean == p.sigma);
  }
}

TEST_CASE("Gaussian moments") {
  Rational s(3, 2);
  CHECK(gaussian_moment(0, s) == Rational(1));
  CHECK(gaussian_moment(1, s) == Rational(0));
  CHECK(gaussian_moment(2, s) == s);
  CHECK(gaussian_moment(3, s) == Rational(0));
  CHECK(gaussian_moment(4, s) == Rational(3) * s * s);
  CHECK(gaussian_moment(6, s) == Rational(15) * s * s * s);
}
