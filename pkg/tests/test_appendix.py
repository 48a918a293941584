import pytest

from sl2hecke.appendix import (
    apply, appendix_eigenline_check, det2, expected_lines, matrix_a, matrix_b, mat_add, mat_mul, mat_scale, same_line,
)
from sl2hecke.field import make_field
from sl2hecke.poly import RatFunc


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("a", [0, 1])
def test_every_b(p, a):
    spec = make_field(p)
    for b in range(p):
        rep = appendix_eigenline_check(spec, a, b)
        assert rep.passed
        exp = expected_lines(spec, a)
        assert len(rep.lines) == len(exp)
        assert all(any(same_line(x, y) for y in exp) for x in rep.lines)


def test_a0_witness(f5):
    z, c = RatFunc.var(f5), lambda n: RatFunc.const(f5, n)
    for b in range(5):
        image = apply(matrix_a(f5, 0, b), (c(0), c(1)))
        assert image == (z, c(-b))
        assert det2((c(0), c(1)), image) == -z


def test_a1_witness(f5):
    z, c = RatFunc.var(f5), lambda n: RatFunc.const(f5, n)
    for b in range(5):
        image = apply(matrix_a(f5, 1, b), (c(1), c(1)))
        assert image == (z - c(1), c(-(1 + b)))
        assert not det2((c(1), c(1)), image).is_constant()


def test_minimum_polynomial(f5):
    for a in (0, 1):
        B = matrix_b(f5, a)
        S = mat_add(mat_mul(B, B), mat_scale(B, RatFunc.const(f5, a)))
        assert all(e.is_zero() for row in S for e in row)


def test_bad_a(f5):
    with pytest.raises(ValueError):
        appendix_eigenline_check(f5, 2, 0)
