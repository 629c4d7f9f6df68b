#include "sbt/transform.hpp"

#include "sbt/combinatorics.hpp"
#include "sbt/orthogonal.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace sbt;

namespace {
const ModelParams kUnit(Rational(1), Rational(1));
const ModelParams kHalf(Rational(1, 2), Rational(3, 4));

GridFunction sample_poly(const Poly& p, const Rational& alpha, int bound) {
  GridFunction f;
  for (int n = 0; n <= bound; ++n) f.values.push_back(p.eval(Complex(to_double(alpha) * n, 0.0)));
  return f;
}
}  // namespace

TEST_CASE("atom weights") {
  CHECK(measure_weight(kUnit, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(measure_weight_exact(kUnit, 3) == Rational(1, 6));  // lambda^3/3! at lambda = 1
  double total = 0.0;
  for (int n = 0; n <= 60; ++n) total += measure_weight(kHalf, n);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(measure_weight(kUnit, -1), std::domain_error);
}

TEST_CASE("polynomial inner products against the lattice measure") {
  OrthogonalBasis basis = OrthogonalBasis::charlier(kUnit, 5);
  CHECK(inner_product_L2pi(Poly(Rational(1)), Poly(Rational(1)), kUnit) == Rational(1));
  CHECK(inner_product_L2pi(basis.poly(1), basis.poly(0), kUnit) == Rational(0));
  CHECK(inner_product_L2pi(basis.poly(1), basis.poly(1), kUnit) == Rational(1));
  // squared norms n! sigma^n on a non-unit parameter set
  OrthogonalBasis b2 = OrthogonalBasis::charlier(kHalf, 5);
  for (int n = 0; n <= 5; ++n) {
    Rational expected = Rational(factorial(n)) * rational_pow(kHalf.sigma, n);
    CHECK(inner_product_L2pi(b2.poly(n), b2.poly(n), kHalf) == expected);
  }
}

TEST_CASE("weighted coefficient pairing is diagonal") {
  BargmannElement z2{{0.0, 0.0, 1.0}, Rational(1)};
  BargmannElement z3{{0.0, 0.0, 0.0, 1.0}, Rational(1)};
  CHECK(bargmann_inner(z2, z2).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(bargmann_inner(z2, z3)) == doctest::Approx(0.0));
  BargmannElement one{{1.0}, Rational(1)};
  CHECK(bargmann_inner(one, one).real() == doctest::Approx(1.0));
  BargmannElement other{{1.0}, Rational(2)};
  CHECK_THROWS_AS(bargmann_inner(one, other), std::domain_error);
}

TEST_CASE("closed-form coherent states") {
  CHECK(coherent_state_charlier(kUnit, 2, Complex(0.0, 0.0)).real() == doctest::Approx(1.0));
  // at the bottom atom the closed form is a bare exponential
  Complex z(0.3, -0.7);
  Complex expect = std::exp(-z / to_double(kUnit.alpha));
  Complex got = coherent_state_charlier(kUnit, 0, z);
  CHECK(std::abs(got - expect) < 1e-14);
  CHECK(coherent_state_charlier(kUnit, 1, Complex(1.0, 0.0)).real() ==
        doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-12));

  CHECK(coherent_state_hermite(Rational(1), Complex(0.5, 0.5), Complex(0.0, 0.0)).real() ==
        doctest::Approx(1.0));
  CHECK(coherent_state_hermite(Rational(1), Complex(0.0, 0.0), Complex(1.0, 0.0)).real() ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(coherent_state_hermite(Rational(1), Complex(1.0, 0.0), Complex(1.0, 0.0)).real() ==
        doctest::Approx(std::exp(0.5)).epsilon(1e-12));
}

TEST_CASE("closed forms match their defining partial sums") {
  Complex z(0.6, 0.8);
  for (int n = 0; n <= 4; ++n) {
    Complex closed = coherent_state_charlier(kHalf, n, z);
    Complex x(to_double(kHalf.alpha) * n, 0.0);
    Complex series = coherent_state_charlier_partial(kHalf, x, z, 40);
    CHECK(std::abs(closed - series) < 1e-10);
  }
  Complex xh(0.75, 0.0);
  CHECK(std::abs(coherent_state_hermite(Rational(1), xh, z) -
                 coherent_state_hermite_partial(Rational(1), xh, z, 40)) < 1e-10);
}

TEST_CASE("summation formula: constants, atoms, and family members") {
  // f = 1 maps to 1 everywhere
  GridFunction ones;
  ones.values.assign(41, Complex(1.0, 0.0));
  for (const Complex& z : {Complex(0.0, 0.0), Complex(1.0, 1.0), Complex(-0.5, 0.25)}) {
    TransformValue v = transform_apply(ones, kUnit, z);
    CHECK(std::abs(v.value - Complex(1.0, 0.0)) < 1e-12);
    CHECK(v.tail_bound < 1e-12);
  }
  // single atom at the origin picks up one summand
  GridFunction atom;
  atom.values.assign(1, Complex(1.0, 0.0));
  for (double zr : {0.0, 0.5, 2.0}) {
    TransformValue v = transform_apply(atom, kUnit, Complex(zr, 0.0));
    CHECK(std::abs(v.value - std::exp(-(1.0 + zr))) < 1e-14);
  }
  // degree-1 family member lands on z
  OrthogonalBasis basis = OrthogonalBasis::charlier(kUnit, 2);
  GridFunction c1 = sample_poly(basis.poly(1), kUnit.alpha, 60);
  TransformValue v = transform_apply(c1, kUnit, Complex(0.5, 0.0));
  CHECK(std::abs(v.value - Complex(0.5, 0.0)) < 1e-9);
}

TEST_CASE("polynomial transform routes agree and invert") {
  OrthogonalBasis basis = OrthogonalBasis::charlier(kHalf, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(transform_poly(basis.poly(n), kHalf) == Poly::monomial(n));
    CHECK(transform_poly_inverse(Poly::monomial(n), kHalf) == basis.poly(n));
  }
  Poly p = Poly::from_coeffs({Rational(1, 2), Rational(-3), Rational(0), Rational(2)});
  CHECK(transform_poly_inverse(transform_poly(p, kHalf), kHalf) == p);
}

TEST_CASE("isometry on polynomials, coefficient side vs moment side") {
  OrthogonalBasis basis = OrthogonalBasis::charlier(kUnit, 6);
  UnitarityReport r = transform_unitarity_check(basis.poly(3), basis.poly(3), kUnit);
  CHECK(r.pass);
  CHECK(r.lhs == Rational(6));  // 3! * 1^3
  UnitarityReport cross = transform_unitarity_check(basis.poly(2), basis.poly(5), kUnit);
  CHECK(cross.pass);
  CHECK(cross.lhs == Rational(0));
}

TEST_CASE("Gaussian shift-average on polynomials") {
  Rational s(3, 4);
  CHECK(gaussian_transform_poly(Poly::monomial(2), s) ==
        Poly::from_coeffs({s, Rational(0), Rational(1)}));
  for (int n = 0; n <= 8; ++n)
    CHECK(gaussian_transform_poly(Poly::monomial(n), s) == hermite_tilde(s, n));
  // and it sends the orthogonal family back to monomials
  OrthogonalBasis basis = OrthogonalBasis::hermite(s, 8);
  for (int n = 0; n <= 8; ++n)
    CHECK(gaussian_transform_poly(basis.poly(n), s) == Poly::monomial(n));
}

TEST_CASE("plane-measure monomial pairing via polar quadrature") {
  CHECK(std::abs(nu_sigma_monomial_inner(1, 2, Rational(1), 32)) == doctest::Approx(0.0));
  CHECK(nu_sigma_monomial_inner(2, 2, Rational(1), 32).real() ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(nu_sigma_monomial_inner(3, 3, Rational(3, 4), 32).real() ==
        doctest::Approx(6.0 * std::pow(0.75, 3)).epsilon(1e-10));
}

TEST_CASE("centered characteristic function and its Gaussian limit") {
  CharFnValue at0 = centered_char_function(kUnit, 0.0);
  CHECK(std::abs(at0.value - Complex(1.0, 0.0)) < 1e-15);
  CHECK(at0.gaussian == doctest::Approx(1.0));
  // |phi(y)| = exp(lambda (cos(alpha y) - 1)) at (1,1), y = 1
  CharFnValue at1 = centered_char_function(kUnit, 1.0);
  CHECK(std::abs(at1.value) == doctest::Approx(std::exp(std::cos(1.0) - 1.0)).epsilon(1e-12));
  CHECK(at1.gaussian == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  // the gap closes roughly linearly in the spacing
  double gap_coarse = std::abs(centered_char_function(ModelParams(Rational(1, 2), Rational(1)), 1.0).value -
                               Complex(std::exp(-0.5), 0.0));
  double gap_fine = std::abs(centered_char_function(ModelParams(Rational(1, 4), Rational(1)), 1.0).value -
                             Complex(std::exp(-0.5), 0.0));
  CHECK(gap_fine < gap_coarse);
}

TEST_CASE("partial sums of the coherent series shift under the scaled difference") {
  for (int trunc = 4; trunc <= 10; ++trunc) {
    EigenReport r = lowering_eigenfunction_check(kHalf, Complex(0.3, 0.4), trunc);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(lowering_eigenfunction_check(kUnit, Complex(0.0, 0.0), 2), std::domain_error);
}

TEST_CASE("adaptive summation certifies its tail") {
  auto f = [](int n) { return Complex(std::cos(0.7 * n), std::sin(0.7 * n)); };  // |f| = 1
  for (const Complex& z : {Complex(1.0, 0.5), Complex(-0.5, 1.0)}) {
    TransformValue v = transform_apply_adaptive(f, kUnit, z);
    Complex refined = transform_apply_truncated(f, kUnit, z, v.terms * 2 + 64);
    CHECK(std::abs(refined - v.value) <= v.tail_bound);
  }
}

TEST_CASE("coefficient seminorms") {
  std::vector<Complex> e0 = {Complex(1.0, 0.0)};
  CHECK(emin_norm(e0, 3) == doctest::Approx(1.0));
  std::vector<Complex> e1 = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
  CHECK(emin_norm(e1, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(emin_norm(e1, 0) == doctest::Approx(1.0).epsilon(1e-12));
}
