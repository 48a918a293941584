"""Eigenline computation for the two-dimensional module over Q = k(zeta).

The matrices of tau0 and tau1 in the basis (v, w) are

    A = [[b, zeta - a(b+1)], [0, -(a+b)]]      B = [[0, 0], [1, -a]]

with a in {0, 1} and b in k.  The B-stable lines are computed and each is
shown not to be A-stable by a nonzero determinant det[x | Ax].
"""
from __future__ import annotations

from dataclasses import dataclass

from .field import FieldSpec
from .poly import RatFunc

Matrix = list[list[RatFunc]]
Vector = tuple[RatFunc, RatFunc]


def _c(spec, n: int) -> RatFunc:
    return RatFunc.const(spec, n)


def matrix_a(spec: FieldSpec, a: int, b: int) -> Matrix:
    z = RatFunc.var(spec)
    return [[_c(spec, b), z - _c(spec, a * (b + 1))], [_c(spec, 0), _c(spec, -(a + b))]]


def matrix_b(spec: FieldSpec, a: int) -> Matrix:
    return [[_c(spec, 0), _c(spec, 0)], [_c(spec, 1), _c(spec, -a)]]


def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    return [[m[i][0] * n[0][j] + m[i][1] * n[1][j] for j in range(2)] for i in range(2)]


def mat_add(m: Matrix, n: Matrix) -> Matrix:
    return [[m[i][j] + n[i][j] for j in range(2)] for i in range(2)]


def mat_scale(m: Matrix, c: RatFunc) -> Matrix:
    return [[c * m[i][j] for j in range(2)] for i in range(2)]


def apply(m: Matrix, x: Vector) -> Vector:
    return (m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1])


def det2(x: Vector, y: Vector) -> RatFunc:
    return x[0] * y[1] - x[1] * y[0]


def is_scalar(m: Matrix) -> bool:
    return m[0][1].is_zero() and m[1][0].is_zero() and m[0][0] == m[1][1]


def stable_lines(spec: FieldSpec, m: Matrix) -> list[Vector]:
    """Eigenlines of a matrix with entries in k: eigenvalues of such a matrix in
    k(zeta) lie in k, since k is algebraically closed in k(zeta)."""
    lines = []
    for lam in range(spec.p):
        L = _c(spec, lam)
        shifted = [[m[0][0] - L, m[0][1]], [m[1][0], m[1][1] - L]]
        if not (shifted[0][0] * shifted[1][1] - shifted[0][1] * shifted[1][0]).is_zero():
            continue
        # kernel of a singular nonzero 2x2 matrix: (-row[1], row[0]) for a nonzero row
        row = shifted[0] if not (shifted[0][0].is_zero() and shifted[0][1].is_zero()) else shifted[1]
        if row[0].is_zero() and row[1].is_zero():
            lines.extend([(_c(spec, 1), _c(spec, 0)), (_c(spec, 0), _c(spec, 1))])
            continue
        lines.append((-row[1], row[0]))
    return lines


@dataclass
class EigenlineReport:
    a: int
    b: int
    min_poly_ok: bool
    lines: list[Vector]
    witnesses: list[RatFunc]  # det[x | Ax] for each line, all nonzero

    @property
    def passed(self) -> bool:
        return self.min_poly_ok and bool(self.lines) and all(not w.is_zero() for w in self.witnesses)


def appendix_eigenline_check(spec: FieldSpec, a: int, b: int) -> EigenlineReport:
    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    A, B = matrix_a(spec, a, b), matrix_b(spec, a)
    square_plus = mat_add(mat_mul(B, B), mat_scale(B, _c(spec, a)))
    min_poly_ok = all(e.is_zero() for row in square_plus for e in row) and not is_scalar(B)
    lines = stable_lines(spec, B)
    witnesses = [det2(x, apply(A, x)) for x in lines]
    return EigenlineReport(a, b, min_poly_ok, lines, witnesses)


def expected_lines(spec: FieldSpec, a: int) -> list[Vector]:
    """span(w), plus span(v + w) when a = 1."""
    w = (_c(spec, 0), _c(spec, 1))
    if a == 1:
        return [w, (_c(spec, 1), _c(spec, 1))]
    return [w]


def same_line(x: Vector, y: Vector) -> bool:
    return det2(x, y).is_zero()
