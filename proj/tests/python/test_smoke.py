"""End-to-end checks of the python surface against hand-computed values."""

import cmath
import math
from fractions import Fraction

import pytest

import sbtransform as sbt


def test_coeff_families():
    assert sbt.coeffs("charlier", 2) == [1, -3, 1]
    assert sbt.coeffs("charlier", 3) == [-1, 8, -6, 1]
    assert sbt.coeffs("touchard", 3) == [0, 1, 3, 1]
    assert sbt.coeffs("hermite", 2) == [-1, 0, 1]
    assert sbt.coeffs("hermite", 3) == [0, -3, 0, 1]
    assert sbt.coeffs("factorial", 3) == [0, 2, -3, 1]
    assert sbt.coeffs("hermite-tilde", 2) == [1, 0, 1]
    with pytest.raises(ValueError):
        sbt.coeffs("nope", 2)


def test_exact_rational_boundary():
    # Fraction, int, and string parameters all mean the same exact value
    via_fraction = sbt.coeffs("charlier", 2, Fraction(1, 2), Fraction(3, 4))
    via_string = sbt.coeffs("charlier", 2, "1/2", "3/4")
    via_decimal = sbt.coeffs("charlier", 2, "0.5", "0.75")
    assert via_fraction == via_string == via_decimal
    assert all(isinstance(c, Fraction) for c in via_fraction)
    with pytest.raises(TypeError):
        sbt.coeffs("charlier", 2, 0.5, 0.75)  # floats are ambiguous, rejected


def test_coeff_table_padding():
    table = sbt.coeff_table("charlier", 3)
    assert len(table) == 4
    assert all(len(row) == 4 for row in table)
    assert table[2] == [1, -3, 1, 0]


def test_stirling_and_moments():
    assert sbt.stirling_first(4, 2) == 11
    assert sbt.stirling_second(4, 2) == 7
    assert sbt.poisson_moment(2, 2, 5) == Fraction(45, 4)
    assert sbt.poisson_moment(1, "1/2", "3/4") == Fraction(3, 2)
    assert sbt.gaussian_moment(4, "3/2") == Fraction(27, 4)  # 3 sigma^2
    assert sbt.gaussian_moment(3, 1) == 0


def test_inner_products():
    c2 = sbt.coeffs("charlier", 2)
    c3 = sbt.coeffs("charlier", 3)
    assert sbt.inner_product(c2, c3, 1, 1) == 0
    assert sbt.inner_product(c3, c3, 1, 1) == 6  # 3! * 1^3
    h2 = sbt.coeffs("hermite", 2, sigma="3/4")
    assert sbt.gaussian_inner_product(h2, h2, "3/4") == Fraction(2 * 9, 16)  # 2! (3/4)^2
    assert abs(sbt.bargmann_inner([0, 0, 1], [0, 0, 1], 1) - 2) < 1e-12
    assert abs(sbt.bargmann_inner([0, 1], [1, 0], 1)) == 0


def test_transform_polynomials():
    for n in range(7):
        cn = sbt.coeffs("charlier", n, "1/2", "3/4")
        image = sbt.transform_poly(cn, "1/2", "3/4")
        assert image == [0] * n + [1]
        assert sbt.transform_poly_inverse(image, "1/2", "3/4") == cn
    assert sbt.gaussian_transform_poly([0, 0, 1], "3/4") == [Fraction(3, 4), 0, 1]


def test_transform_apply_values():
    # constant function maps to 1
    r = sbt.transform_apply([1.0] * 41, 1, 1, 0.7 + 0.3j)
    assert abs(r["value"] - 1.0) < 1e-12
    assert r["tail_bound"] < 1e-12
    # single atom at the origin
    r = sbt.transform_apply([1.0], 1, 1, 0.5)
    assert abs(r["value"] - math.exp(-1.5)) < 1e-14
    # first family member sampled on the lattice lands on z
    c1 = [n - 1.0 for n in range(61)]  # c_1(x) = x - 1 at (1,1), x = n
    r = sbt.transform_apply(c1, 1, 1, 0.5)
    assert abs(r["value"] - 0.5) < 1e-9


def test_coherent_states():
    assert abs(sbt.coherent_charlier(1, 1, 1, 1.0) - 2 * math.exp(-1)) < 1e-12
    assert abs(sbt.coherent_charlier(1, 1, 5, 0.0) - 1.0) < 1e-15
    assert abs(sbt.coherent_hermite(1, 0.0, 1.0) - math.exp(-0.5)) < 1e-12
    assert abs(sbt.coherent_hermite(1, 1.0, 1.0) - math.exp(0.5)) < 1e-12


def test_char_function():
    value, gauss = sbt.char_function(1, 1, 1.0)
    assert abs(abs(value) - math.exp(math.cos(1.0) - 1.0)) < 1e-12
    assert abs(gauss - math.exp(-0.5)) < 1e-12
    coarse = abs(sbt.char_function(1, 1, 1.0)[0] - sbt.char_function(1, 1, 1.0)[1])
    fine = abs(sbt.char_function("1/4", 1, 1.0)[0] - sbt.char_function("1/4", 1, 1.0)[1])
    assert fine < coarse


def test_nu_sigma_and_weights():
    assert abs(sbt.nu_sigma_inner(2, 2, 1) - 2.0) < 1e-8
    assert abs(sbt.nu_sigma_inner(1, 2, 1)) < 1e-14
    assert abs(sbt.measure_weight(0, 1, 1) - math.exp(-1)) < 1e-12


def test_eval_poly_exact():
    # 1 - 3x + x^2 at x = 1/2
    assert sbt.eval_poly([1, -3, 1], Fraction(1, 2)) == Fraction(-1, 4)
    assert sbt.eval_poly(["1/3", "2/3"], "1/2") == Fraction(2, 3)


def test_verify_surface():
    suites = sbt.verify_suites()
    assert "series" in suites and "transform" in suites
    results = sbt.verify("series")
    assert results and all(r["pass"] for r in results)
    assert all(r["mode"] in ("exact", "numeric") for r in results)
    ok, detail = sbt.katriel_ok(1, 1, 4, cap=16)
    assert ok, detail
    with pytest.raises(ValueError):
        sbt.verify("nope")
