"""Sparse exact linear algebra over F_q.

Vectors are dicts from arbitrary hashable coordinates to nonzero field codes.
:class:`Echelon` keeps an incrementally built echelon form; each stored row
remembers which input vectors it came from, so membership tests also return
the combination that witnesses them.
"""
from __future__ import annotations

from .field import FieldSpec


def _axpy(spec: FieldSpec, y: dict, a: int, x: dict) -> None:
    """y += a*x in place, dropping zeros."""
    add, mul = spec.add, spec.mul
    for k, v in x.items():
        s = add(y.get(k, 0), mul(a, v))
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    """Rows in echelon form, pivots eliminated in creation order."""

    def __init__(self, spec: FieldSpec, track: bool = True):
        self.spec = spec
        self.track = track
        self.rows: list[tuple[object, dict, dict]] = []  # (pivot, row, combination)
        self.pivots: dict = {}
        self.dependent: list[dict] = []  # combinations of inputs that vanish

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        spec = self.spec
        vec = {k: v for k, v in vec.items() if v}
        for piv, row, rcombo in self.rows:
            c = vec.get(piv)
            if c:
                a = spec.neg(c)
                _axpy(spec, vec, a, row)
                if self.track:
                    _axpy(spec, combo, a, rcombo)
        return vec, combo

    def reduce(self, vec: dict) -> tuple[dict, dict]:
        """Return (residual, combo) with vec = residual + sum combo[tag] * input[tag]."""
        residual, combo = self._reduce(vec, {})
        return residual, {k: self.spec.neg(v) for k, v in combo.items()}

    def add(self, vec: dict, tag=None) -> bool:
        """Insert a vector; return True iff it raised the rank."""
        start = {tag: 1} if self.track and tag is not None else {}
        residual, combo = self._reduce(vec, start)
        if not residual:
            if self.track and combo:
                self.dependent.append(combo)
            return False
        piv = next(iter(residual))
        inv = self.spec.inv(residual[piv])
        row = {k: self.spec.mul(v, inv) for k, v in residual.items()}
        rc = {k: self.spec.mul(v, inv) for k, v in combo.items()}
        self.rows.append((piv, row, rc))
        self.pivots[piv] = len(self.rows) - 1
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, vec: dict) -> bool:
        return not self._reduce(vec, {})[0]


def rank(spec: FieldSpec, vectors) -> int:
    ech = Echelon(spec, track=False)
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(spec: FieldSpec, vectors) -> list[dict]:
    """A basis of {c : sum c_i v_i = 0}, as dicts index -> code."""
    ech = Echelon(spec)
    for i, v in enumerate(vectors):
        ech.add(v, tag=i)
    return ech.dependent


def solve(spec: FieldSpec, vectors, target: dict) -> dict | None:
    """Coefficients c with sum c_i v_i = target, or None."""
    ech = Echelon(spec)
    for i, v in enumerate(vectors):
        ech.add(v, tag=i)
    residual, combo = ech.reduce(target)
    if residual:
        return None
    return combo
