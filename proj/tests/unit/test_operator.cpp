#include "sbt/operator.hpp"

#include "sbt/combinatorics.hpp"
#include "sbt/orthogonal.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace sbt;

namespace {
const ModelParams kUnit(Rational(1), Rational(1));
const ModelParams kHalf(Rational(1, 2), Rational(3, 4));
}  // namespace

TEST_CASE("differentiation, multiplication, and shift act as expected") {
  PolyOperator d = op_diff(6);
  CHECK(d.apply(Poly::monomial(3)) == Poly::monomial(2, Rational(3)));
  CHECK(d.apply(Poly(Rational(7))).is_zero());

  PolyOperator z = op_mulz(6);
  CHECK(z.apply(Poly::monomial(2)) == Poly::monomial(3));

  PolyOperator e1 = op_shift(Rational(1), 6);
  CHECK(e1.apply(Poly::monomial(2)) ==
        Poly::from_coeffs({Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("shift equals its finite exponential expansion") {
  for (const Rational& h : {Rational(1, 3), Rational(-2, 5), Rational(4)})
    CHECK(op_agree(op_shift(h, 9), op_shift_taylor(h, 9)));
}

TEST_CASE("composition bookkeeping rejects escaping degrees") {
  PolyOperator z = op_mulz(6);  // growth 1
  PolyOperator d = op_diff(5);  // growth 0
  CHECK_THROWS_AS(op_compose(d, z), std::invalid_argument);  // needs outer cap >= 7
  PolyOperator ok = op_compose(op_diff(7), z);
  CHECK(ok.cap() == 6);
  CHECK(ok.growth() == 1);
  CHECK_THROWS_AS(op_diff(4).apply(Poly::monomial(5)), std::domain_error);
}

TEST_CASE("canonical commutation relations") {
  PolyOperator bracket = op_commutator(op_diff(8), op_mulz(8));
  CHECK(op_agree(bracket, PolyOperator::identity(bracket.cap())));
  PolyOperator shift_d = op_commutator(op_shift(Rational(2, 3), 8), op_diff(8));
  for (int n = 0; n <= shift_d.cap(); ++n) CHECK(shift_d.image(n).is_zero());
}

TEST_CASE("umbral substitution and its inverse") {
  PolyOperator t = op_umbral_touchard(kHalf, 8);
  CHECK(t.apply(Poly::monomial(3)) == touchard_scaled(3, kHalf.alpha));
  PolyOperator f = op_umbral_factorial(kHalf, 8);
  CHECK(f.apply(Poly::monomial(3)) == generalized_factorial(3, kHalf.alpha));
  CHECK(op_agree(op_compose(t.restricted(8), f), PolyOperator::identity(8)));
  CHECK(op_agree(op_compose(f.restricted(8), t), PolyOperator::identity(8)));
}

TEST_CASE("the transform operator and its inverse on low degrees") {
  PolyOperator s = op_sheffer_S(kUnit, 8);
  // z^2 -> T_2(z+1) = (z+1) + (z+1)^2
  CHECK(s.apply(Poly::monomial(2)) ==
        Poly::from_coeffs({Rational(2), Rational(3), Rational(1)}));
  PolyOperator s_inv = op_sheffer_S_inv(kUnit, 8);
  CHECK(s_inv.apply(Poly::monomial(2)) ==
        Poly::from_coeffs({Rational(1), Rational(-3), Rational(1)}));
  CHECK(op_agree(op_compose(s.restricted(8), s_inv), PolyOperator::identity(8)));
  // factorized route: shift after umbral substitution
  PolyOperator routed = op_compose(op_shift(kUnit.mean(), 9), op_umbral_touchard(kUnit, 8));
  CHECK(op_agree(s, routed));
}

TEST_CASE("ladder pair commutator is the lattice spacing") {
  for (const ModelParams& p : {kUnit, kHalf}) {
    auto [u, v] = op_weyl_pair(p, 10);
    PolyOperator bracket = op_commutator(v, u);
    PolyOperator expected = p.alpha * PolyOperator::identity(bracket.cap());
    CHECK(op_agree(bracket, expected));
  }
}

TEST_CASE("tridiagonal operator equals the ladder product") {
  for (const ModelParams& p : {kUnit, kHalf}) {
    auto [u, v] = op_weyl_pair(p, 10);
    CHECK(op_agree(op_jacobi(p, 9), op_compose(u, v.restricted(9))));
  }
}

TEST_CASE("normal ordering holds at small orders") {
  for (int n = 1; n <= 5; ++n) {
    OpCheckReport r = katriel_check(kUnit, n, 16);
    CHECK(r.pass);
  }
  OpCheckReport r2 = katriel_check(kHalf, 4, 16);
  CHECK(r2.pass);
}

TEST_CASE("lowering and raising move along the family") {
  for (const ModelParams& p : {kUnit, kHalf}) {
    OrthogonalBasis basis = OrthogonalBasis::charlier(p, 9);
    PolyOperator lower = op_lowering_charlier(p, 8);
    PolyOperator raise = op_raising_charlier(p, 8);
    for (int n = 1; n <= 8; ++n)
      CHECK(lower.apply(basis.poly(n)) == Rational(n) * basis.poly(n - 1));
    for (int n = 0; n <= 8; ++n) CHECK(raise.apply(basis.poly(n)) == basis.poly(n + 1));
  }
}

TEST_CASE("operator powers restrict caps progressively") {
  PolyOperator z = op_mulz(10);  // growth 1
  PolyOperator z3 = op_power(z, 3);
  CHECK(z3.cap() == 8);
  CHECK(z3.growth() == 3);
  CHECK(z3.apply(Poly::monomial(2)) == Poly::monomial(5));
  CHECK(op_agree(op_power(z, 0), PolyOperator::identity(10)));
}
