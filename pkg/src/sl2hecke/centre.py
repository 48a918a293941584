"""The centre Z of H in component coordinates, the normalisation map to
k[Omega][t] and the localisation at zeta.

Component layout of a :class:`ZElem` (n = q - 1):

* characters id^0 and id^(n/2) are self-inverse; each carries a polynomial in x,
  with x acting as X_lambda;
* every other character id^j pairs with id^(-j); the pair is keyed by the
  smaller exponent j and carries an element of k[x, y]/<xy>, with x acting as
  X_(id^j) and y as X_(id^-j).

Monomials are stored as (a, b) exponent pairs with a*b == 0.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import InternalCheckFailed, NotCentral, NotRecognized
from .field import FieldSpec
from .hecke import HElem, e_elem, tau, tau_omega
from .linalg import Echelon
from .poly import LaurentPoly, UPoly


# the elements zeta and X_lambda ---------------------------------------------------

@lru_cache(maxsize=None)
def zeta_elem(spec: FieldSpec) -> HElem:
    """zeta = (tau0 + e_1)(tau1 + e_1) + tau1 tau0; checked against the mirrored formula."""
    t0, t1, e1 = tau(spec, 0), tau(spec, 1), e_elem(spec, 0)
    z = (t0 + e1) * (t1 + e1) + t1 * t0
    z2 = (t1 + e1) * (t0 + e1) + t0 * t1
    if z != z2:
        raise InternalCheckFailed("the two expressions for zeta disagree")
    for g in generators(spec):
        if z * g != g * z:
            raise InternalCheckFailed(f"zeta does not commute with {g!r}")
    return z


def generators(spec: FieldSpec) -> list[HElem]:
    """tau_g (g generates Omega), tau0 and tau1, which generate H as an algebra."""
    return [tau_omega(spec, 1), tau(spec, 0), tau(spec, 1)]


@lru_cache(maxsize=None)
def x_elem(spec: FieldSpec, j: int) -> HElem:
    """X_lambda for lambda = id^j."""
    n = spec.q - 1
    j %= n
    if j == 0:
        return e_elem(spec, 0) * zeta_elem(spec)
    t01 = tau(spec, 0) * tau(spec, 1)
    t10 = tau(spec, 1) * tau(spec, 0)
    return e_elem(spec, j) * t01 + e_elem(spec, -j) * t10


def zeta_power(spec: FieldSpec, k: int) -> HElem:
    return _zeta_powers(spec, k)


@lru_cache(maxsize=None)
def _zeta_powers(spec: FieldSpec, k: int) -> HElem:
    if k == 0:
        return HElem.one(spec)
    return _zeta_powers(spec, k - 1) * zeta_elem(spec)


@lru_cache(maxsize=None)
def x_power(spec: FieldSpec, j: int, k: int) -> HElem:
    if k == 1:
        return x_elem(spec, j)
    return x_power(spec, j, k - 1) * x_elem(spec, j)


def is_central(h: HElem) -> HElem | None:
    """None if h commutes with every algebra generator, else a witness generator."""
    for g in generators(h.spec):
        if h * g != g * h:
            return g
    return None


# component coordinates ----------------------------------------------------------

def component_keys(spec: FieldSpec) -> list[int]:
    """Self-inverse characters 0 and n/2, then pair representatives 1..n/2 - 1."""
    n = spec.q - 1
    return [0, n // 2] + list(range(1, n // 2))


def is_pair(spec: FieldSpec, key: int) -> bool:
    return key not in (0, (spec.q - 1) // 2)


def component_of(spec: FieldSpec, j: int) -> tuple[int, int]:
    """(component key, 0 for the x side or 1 for the y side) of the character id^j."""
    n = spec.q - 1
    j %= n
    if j in (0, n // 2):
        return j, 0
    if j < n // 2:
        return j, 0
    return n - j, 1


class ZElem:
    """Element of Z in component coordinates: key -> {(a, b): code}."""

    __slots__ = ("spec", "comps")

    def __init__(self, spec: FieldSpec, comps: dict | None = None):
        self.spec = spec
        clean: dict = {}
        keys = set(component_keys(spec))
        for key, mons in (comps or {}).items():
            if key not in keys:
                raise ValueError(f"{key} is not a component key")
            d = {}
            for (a, b), c in mons.items():
                if a < 0 or b < 0:
                    raise ValueError("negative exponent in centre coordinates")
                if a and b:
                    raise ValueError("mixed monomial x^a y^b is zero modulo xy; not reduced")
                if b and not is_pair(spec, key):
                    raise ValueError("self-inverse components have no y variable")
                if c:
                    d[(a, b)] = c
            if d:
                clean[key] = d
        self.comps = clean

    @classmethod
    def one(cls, spec) -> "ZElem":
        return cls(spec, {k: {(0, 0): 1} for k in component_keys(spec)})

    @classmethod
    def unit(cls, spec, key: int, c: int = 1) -> "ZElem":
        return cls(spec, {key: {(0, 0): c}})

    @classmethod
    def x_power(cls, spec, j: int, k: int, c: int = 1) -> "ZElem":
        """Coordinates of c * X_(id^j)^k (k >= 1)."""
        key, side = component_of(spec, j)
        mono = (k, 0) if side == 0 else (0, k)
        return cls(spec, {key: {mono: c}})

    def __add__(self, o: "ZElem") -> "ZElem":
        comps = {k: dict(v) for k, v in self.comps.items()}
        for key, mons in o.comps.items():
            d = comps.setdefault(key, {})
            for m, c in mons.items():
                d[m] = self.spec.add(d.get(m, 0), c)
        return ZElem(self.spec, comps)

    def __neg__(self):
        return ZElem(self.spec, {k: {m: self.spec.neg(c) for m, c in v.items()} for k, v in self.comps.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o: "ZElem") -> "ZElem":
        sp = self.spec
        comps = {}
        for key, m1 in self.comps.items():
            m2 = o.comps.get(key)
            if not m2:
                continue
            d: dict = {}
            for (a1, b1), c1 in m1.items():
                for (a2, b2), c2 in m2.items():
                    a, b = a1 + a2, b1 + b2
                    if a and b:
                        continue
                    d[(a, b)] = sp.add(d.get((a, b), 0), sp.mul(c1, c2))
            comps[key] = d
        return ZElem(sp, comps)

    def __eq__(self, o):
        if not isinstance(o, ZElem):
            return NotImplemented
        return self.spec is o.spec and self.comps == o.comps

    def __hash__(self):
        return hash(tuple(sorted((k, frozenset(v.items())) for k, v in self.comps.items())))

    def __repr__(self):
        if not self.comps:
            return "ZElem(0)"
        parts = []
        for key in sorted(self.comps):
            mons = self.comps[key]
            body = " + ".join(
                f"{self.spec.format_code(c)}*{_mono(a, b)}" for (a, b), c in sorted(mons.items())
            )
            parts.append(f"[{key}] {body}")
        return "ZElem(" + "; ".join(parts) + ")"


def _mono(a: int, b: int) -> str:
    if a:
        return f"x^{a}"
    if b:
        return f"y^{b}"
    return "1"


def _component_unit(spec: FieldSpec, key: int) -> HElem:
    if is_pair(spec, key):
        return e_elem(spec, key) + e_elem(spec, -key)
    return e_elem(spec, key)


def z_to_h(z: ZElem) -> HElem:
    spec = z.spec
    out = HElem.zero(spec)
    for key, mons in z.comps.items():
        for (a, b), c in mons.items():
            if a == 0 and b == 0:
                out = out + _component_unit(spec, key).scale(c)
            elif a:
                out = out + x_power(spec, key, a).scale(c)
            else:
                out = out + x_power(spec, -key, b).scale(c)
    return out


def h_to_z(h: HElem, bound: int = 4) -> ZElem:
    """Coordinates of a central element whose component degrees are at most bound."""
    spec = h.spec
    witness = is_central(h)
    if witness is not None:
        raise NotCentral(witness)
    candidates: list[tuple[int, tuple[int, int]]] = []
    for key in component_keys(spec):
        candidates.append((key, (0, 0)))
        for k in range(1, bound + 1):
            candidates.append((key, (k, 0)))
            if is_pair(spec, key):
                candidates.append((key, (0, k)))
    ech = Echelon(spec)
    for idx, (key, mono) in enumerate(candidates):
        ech.add(z_to_h(ZElem(spec, {key: {mono: 1}})).terms, tag=idx)
    residual, combo = ech.reduce(h.terms)
    if residual:
        raise NotRecognized(bound)
    comps: dict = {}
    for idx, c in combo.items():
        key, mono = candidates[idx]
        comps.setdefault(key, {})[mono] = c
    z = ZElem(spec, comps)
    if z_to_h(z) != h:
        raise InternalCheckFailed("centre coordinates do not reproduce the element")
    return z


def zeta_coords(spec: FieldSpec) -> ZElem:
    """zeta = sum of X_lambda, so x in every self-inverse slot and x + y in every pair."""
    comps = {}
    for key in component_keys(spec):
        comps[key] = {(1, 0): 1, (0, 1): 1} if is_pair(spec, key) else {(1, 0): 1}
    return ZElem(spec, comps)


# normalisation k[Omega][t] ----------------------------------------------------------

class ZPrimeElem:
    """Tuple of q-1 polynomials in t, slot j for the character id^j."""

    __slots__ = ("spec", "slots")

    def __init__(self, spec: FieldSpec, slots):
        self.spec = spec
        slots = tuple(slots)
        if len(slots) != spec.q - 1:
            raise ValueError("need one polynomial per character")
        self.slots = slots

    @classmethod
    def zero(cls, spec):
        return cls(spec, [UPoly(spec)] * (spec.q - 1))

    def __add__(self, o):
        return ZPrimeElem(self.spec, [a + b for a, b in zip(self.slots, o.slots)])

    def __mul__(self, o):
        return ZPrimeElem(self.spec, [a * b for a, b in zip(self.slots, o.slots)])

    def __eq__(self, o):
        if not isinstance(o, ZPrimeElem):
            return NotImplemented
        return self.slots == o.slots

    def __hash__(self):
        return hash(self.slots)

    def __repr__(self):
        return "ZPrime(" + ", ".join(repr(s) for s in self.slots) + ")"


def phi_map(z: ZElem) -> ZPrimeElem:
    """The normalisation map: X_lambda -> t in slot lambda."""
    spec = z.spec
    n = spec.q - 1
    slots = [UPoly(spec) for _ in range(n)]
    for key, mons in z.comps.items():
        for (a, b), c in mons.items():
            if a == 0 and b == 0:
                targets = [key, -key % n] if is_pair(spec, key) else [key]
                for j in targets:
                    slots[j] = slots[j] + UPoly.const(spec, c)
            elif a:
                slots[key] = slots[key] + UPoly.monomial(spec, a, c)
            else:
                j = -key % n
                slots[j] = slots[j] + UPoly.monomial(spec, b, c)
    return ZPrimeElem(spec, slots)


# localisation at zeta ------------------------------------------------------------

class ZZetaElem:
    """Tuple of q-1 Laurent polynomials in t."""

    __slots__ = ("spec", "slots")

    def __init__(self, spec: FieldSpec, slots):
        self.spec = spec
        self.slots = tuple(slots)
        if len(self.slots) != spec.q - 1:
            raise ValueError("need one Laurent polynomial per character")

    @classmethod
    def zero(cls, spec):
        return cls(spec, [LaurentPoly(spec)] * (spec.q - 1))

    @classmethod
    def one(cls, spec):
        return cls(spec, [LaurentPoly(spec, {0: 1})] * (spec.q - 1))

    @classmethod
    def from_zprime(cls, zp: ZPrimeElem) -> "ZZetaElem":
        return cls(zp.spec, [LaurentPoly(zp.spec, dict(enumerate(s.coeffs))) for s in zp.slots])

    def __add__(self, o):
        return ZZetaElem(self.spec, [a + b for a, b in zip(self.slots, o.slots)])

    def __mul__(self, o):
        return ZZetaElem(self.spec, [a * b for a, b in zip(self.slots, o.slots)])

    def __eq__(self, o):
        if not isinstance(o, ZZetaElem):
            return NotImplemented
        return self.slots == o.slots

    def __hash__(self):
        return hash(self.slots)

    def __repr__(self):
        return "ZZeta(" + ", ".join(repr(s) for s in self.slots) + ")"


def zeta_in_zzeta(spec: FieldSpec, power: int = 1) -> ZZetaElem:
    return ZZetaElem(spec, [LaurentPoly(spec, {power: 1})] * (spec.q - 1))


def epsilon_elem(spec: FieldSpec, j: int) -> ZZetaElem:
    """epsilon_lambda = X_lambda / zeta: 1 in slot lambda, 0 elsewhere."""
    n = spec.q - 1
    j %= n
    return ZZetaElem(spec, [LaurentPoly(spec, {0: 1}) if k == j else LaurentPoly(spec) for k in range(n)])


__all__ = [
    "ZElem", "ZPrimeElem", "ZZetaElem", "zeta_elem", "x_elem", "x_power", "zeta_power",
    "z_to_h", "h_to_z", "phi_map", "epsilon_elem", "zeta_coords", "is_central",
    "component_keys", "component_of", "generators",
]
