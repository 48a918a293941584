import pytest
from sympy import expand, symbols

from sl2hecke.coequaliser import (
    coequaliser_exactness_checks, crossing_lines_exactness, infinity_chart, normalisation_example,
    psi_identity_check, symmetric_in_s, symmetric_kernel,
)
from sl2hecke.field import make_field
from sl2hecke.poly import LaurentPoly, MPoly, UPoly


def test_crossing_lines(spec):
    checks = crossing_lines_exactness(spec, 10)
    assert all(c.passed for c in checks)
    assert all(c.bound == 10 for c in checks)


def test_normalisation_example(f5):
    fx, fy = normalisation_example(f5)
    x, y = MPoly.gens(f5, ("x", "y"))
    assert fx == x and fy == y


def test_symmetric_example(f5):
    # x^2 + x^-2 = s^2 - 2, and -2 = 3 mod 5
    P = symmetric_in_s(f5, LaurentPoly(f5, {2: 1, -2: 1}))
    assert P == UPoly(f5, [3, 0, 1])


def test_symmetric_in_s_against_sympy():
    spec = make_field(7)
    x = symbols("x")
    for n in range(1, 9):
        P = symmetric_in_s(spec, LaurentPoly(spec, {n: 1, -n: 1}))
        lhs = expand(sum(c * (x + 1 / x) ** k for k, c in enumerate(P.coeffs)) - x ** n - x ** (-n))
        numer = expand(lhs * x ** n)
        assert all(int(c) % 7 == 0 for c in numer.as_poly(x).all_coeffs())


def test_non_symmetric_rejected(f5):
    assert symmetric_in_s(f5, LaurentPoly(f5, {1: 1})) is None


def test_symmetric_kernel(spec):
    checks, witnesses = symmetric_kernel(spec, 20)
    assert all(c.passed for c in checks)
    assert witnesses[0] == UPoly.const(spec, 1)
    assert len(witnesses) == 21


def test_infinity_chart(spec):
    checks = infinity_chart(spec, 5)
    assert [c.bound for c in checks] == list(range(6))
    assert all(c.passed for c in checks)


def test_psi_identity(f5):
    checks = {c.name: c for c in psi_identity_check(f5)}
    assert all(c.passed for c in checks.values())
    assert "a-b is not in <(a-b)(ab-1)>" in checks


def test_degree_bound_validated(f5):
    with pytest.raises(ValueError):
        coequaliser_exactness_checks(f5, dbound=2)
