"""The cyclic group Omega = F_q^x, its characters id^j and the idempotents e_lambda.

Everything is stored as exponents relative to the fixed generator g of the
field: the group element g^i is ``OmegaElem(i)`` and the character
``x -> x^j`` is ``Character(j)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecMismatch
from .field import FieldElem, FieldSpec


@dataclass(frozen=True, order=True)
class OmegaElem:
    exp: int


def omega(spec: FieldSpec, i: int) -> OmegaElem:
    return OmegaElem(i % (spec.q - 1))


def omega_minus_one(spec: FieldSpec) -> OmegaElem:
    """The element of Omega corresponding to -1, i.e. g^((q-1)/2)."""
    return OmegaElem((spec.q - 1) // 2)


@dataclass(frozen=True, order=True)
class Character:
    exp: int

    def label(self) -> str:
        return f"id^{self.exp}"


def character(spec: FieldSpec, j: int) -> Character:
    return Character(j % (spec.q - 1))


def mu(spec: FieldSpec) -> Character:
    """The twisting character id^2."""
    return character(spec, 2)


def char_eval(spec: FieldSpec, lam: Character, w: OmegaElem) -> FieldElem:
    return spec.elem(spec.gpow(lam.exp * w.exp))


def char_mul(spec: FieldSpec, a: Character, b: Character) -> Character:
    return character(spec, a.exp + b.exp)


def char_inv(spec: FieldSpec, a: Character) -> Character:
    return character(spec, -a.exp)


def class_of(spec: FieldSpec, alpha: Character, twist: Character | None = None) -> frozenset:
    """The equivalence class {alpha, twist/alpha}; twist defaults to id^2."""
    twist = mu(spec) if twist is None else twist
    return frozenset({alpha, character(spec, twist.exp - alpha.exp)})


def all_classes(spec: FieldSpec, twist: Character | None = None) -> list[frozenset]:
    seen, out = set(), []
    for j in range(spec.q - 1):
        c = class_of(spec, Character(j), twist)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


class GroupAlgElem:
    """Sparse element of k[Omega]: map exponent -> nonzero field code."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms: dict[int, int] | None = None):
        self.spec = spec
        n = spec.q - 1
        clean: dict[int, int] = {}
        for i, c in (terms or {}).items():
            i %= n
            c = spec.add(clean.get(i, 0), c)
            if c:
                clean[i] = c
            else:
                clean.pop(i, None)
        self.terms = clean

    @classmethod
    def basis(cls, spec: FieldSpec, i: int) -> "GroupAlgElem":
        return cls(spec, {i: 1})

    @classmethod
    def one(cls, spec: FieldSpec) -> "GroupAlgElem":
        return cls(spec, {0: 1})

    def _check(self, other: "GroupAlgElem"):
        if other.spec is not self.spec:
            raise SpecMismatch("group algebra elements over different fields")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for i, c in other.terms.items():
            t[i] = self.spec.add(t.get(i, 0), c)
        return GroupAlgElem(self.spec, t)

    def __neg__(self):
        return GroupAlgElem(self.spec, {i: self.spec.neg(c) for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = self.spec.from_int(other)
            return GroupAlgElem(self.spec, {i: self.spec.mul(a, c) for i, a in self.terms.items()})
        self._check(other)
        sp, n = self.spec, self.spec.q - 1
        out: dict[int, int] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = (i + j) % n
                out[k] = sp.add(out.get(k, 0), sp.mul(a, b))
        return GroupAlgElem(sp, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupAlgElem):
            return NotImplemented
        return self.spec is other.spec and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{self.spec.format_code(c)}*w({i})" for i, c in sorted(self.terms.items()))


def idempotent_terms(spec: FieldSpec, lam: Character) -> dict[int, int]:
    """Coefficients of e_lambda = -sum lambda(w)^-1 w, keyed by exponent of w."""
    n = spec.q - 1
    return {i: spec.neg(spec.gpow(-lam.exp * i)) for i in range(n)}


def idempotent(spec: FieldSpec, lam: Character) -> GroupAlgElem:
    return GroupAlgElem(spec, idempotent_terms(spec, lam))


def group_alg_mul(a: GroupAlgElem, b: GroupAlgElem) -> GroupAlgElem:
    return a * b
