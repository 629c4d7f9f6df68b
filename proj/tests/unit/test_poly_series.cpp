#include "sbt/poly.hpp"
#include "sbt/series.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace sbt;

TEST_CASE("polynomial arithmetic and evaluation") {
  Poly p = Poly::from_coeffs({Rational(1), Rational(-3), Rational(1)});  // z^2 - 3z + 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(0)) == Rational(1));
  CHECK(p.eval(Rational(2)) == Rational(-1));
  CHECK(p.eval(Rational(1, 2)) == Rational(-1, 4));

  Poly q = Poly::monomial(1) - Poly(Rational(1));  // z - 1
  CHECK((p * q).eval(Rational(3)) == p.eval(Rational(3)) * q.eval(Rational(3)));
  CHECK((p + q).degree() == 2);
  CHECK((p - p).is_zero());
}

TEST_CASE("shift is a ring homomorphism point") {
  Poly p = Poly::from_coeffs({Rational(2), Rational(0), Rational(5), Rational(1)});
  Poly sh = p.shifted(Rational(3, 2));
  for (int x = -2; x <= 2; ++x)
    CHECK(sh.eval(Rational(x)) == p.eval(Rational(x) + Rational(3, 2)));
}

TEST_CASE("derivative and pow") {
  Poly p = Poly::monomial(3);  // z^3
  CHECK(p.derivative() == Poly::monomial(2, Rational(3)));
  Poly lin = Poly::monomial(1) + Poly(Rational(1));
  CHECK(lin.pow(2) == Poly::from_coeffs({Rational(1), Rational(2), Rational(1)}));
  CHECK(lin.pow(0) == Poly(Rational(1)));
}

TEST_CASE("complex evaluation agrees with rational evaluation") {
  Poly p = Poly::from_coeffs({Rational(1), Rational(-3), Rational(1)});
  Complex v = p.eval(Complex(0.5, 0.0));
  CHECK(v.real() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("series exp/log are mutually inverse") {
  Series t = Series::identity(12);
  Series e = series_exp(t);  // sum t^n/n!
  CHECK(e.coeff(0) == Rational(1));
  CHECK(e.coeff(3) == Rational(1, 6));
  CHECK(series_log(e) == t);

  Series lp1 = Series::from_coeffs(12, {Rational(1), Rational(1)});  // 1 + t
  Series l = series_log(lp1);
  CHECK(l.coeff(1) == Rational(1));
  CHECK(l.coeff(2) == Rational(-1, 2));
  CHECK(l.coeff(3) == Rational(1, 3));
  CHECK(series_exp(l) == lp1);
}

TEST_CASE("series composition and reversion") {
  const int order = 10;
  Series t = Series::identity(order);
  Series b = series_log(Series::from_coeffs(order, {Rational(1), Rational(1)}));  // log(1+t)
  Series c = series_exp(t) - Series::constant(order, Rational(1));                // e^t - 1
  CHECK(series_compose(b, c) == t);
  CHECK(series_compose(c, b) == t);
  CHECK(series_reversion(b) == c);
  CHECK(series_reversion(c) == b);
}

TEST_CASE("series preconditions throw") {
  Series one = Series::constant(4, Rational(1));
  CHECK_THROWS_AS(series_exp(one), std::domain_error);          // constant term != 0
  CHECK_THROWS_AS(series_log(Series::identity(4)), std::domain_error);  // constant term != 1
  CHECK_THROWS_AS(series_reversion(Series::constant(4, Rational(0))), std::domain_error);
}
