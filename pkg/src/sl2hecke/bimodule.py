"""The localisation H_zeta, the matrix-valued homomorphism kappa2 and the
bimodule B = H_zeta/H_zeta tau0 (+) H_zeta/H_zeta tau1 with its twisted right
action.

Everything here requires q = p.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .centre import x_elem, zeta_elem, zeta_power
from .errors import RequiresPrimeField, SpecMismatch
from .field import FieldSpec
from .hecke import HElem, Word, coset_reduce, e_elem, iota_generator, tau_omega


def require_prime_field(spec: FieldSpec):
    if spec.e != 1:
        raise RequiresPrimeField(f"this construction needs q = p, got q = {spec.q}")


class HLoc:
    """num / zeta**pow in H_zeta.  Equality cross-multiplies (H has no zeta-torsion)."""

    __slots__ = ("num", "pow")

    def __init__(self, num: HElem, pow: int = 0):
        if pow < 0:
            raise ValueError("zeta power must be nonnegative")
        self.num = num
        self.pow = pow

    @property
    def spec(self) -> FieldSpec:
        return self.num.spec

    @classmethod
    def zero(cls, spec):
        return cls(HElem.zero(spec), 0)

    @classmethod
    def one(cls, spec):
        return cls(HElem.one(spec), 0)

    def lift(self, k: int) -> HElem:
        """Numerator over zeta**(pow + k)."""
        return self.num if k == 0 else self.num * zeta_power(self.spec, k)

    def __add__(self, o: "HLoc") -> "HLoc":
        if o.spec is not self.spec:
            raise SpecMismatch("localised elements over different fields")
        if not o.num:
            return self
        if not self.num:
            return o
        m = max(self.pow, o.pow)
        return HLoc(self.lift(m - self.pow) + o.lift(m - o.pow), m)

    def __neg__(self):
        return HLoc(-self.num, self.pow)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, HElem):
            o = HLoc(o)
        if o.spec is not self.spec:
            raise SpecMismatch("localised elements over different fields")
        if not self.num or not o.num:
            return HLoc.zero(self.spec)
        return HLoc(self.num * o.num, self.pow + o.pow)

    def scale(self, c: int) -> "HLoc":
        return HLoc(self.num.scale(c), self.pow)

    def __eq__(self, o):
        if isinstance(o, HElem):
            o = HLoc(o)
        if not isinstance(o, HLoc):
            return NotImplemented
        m = max(self.pow, o.pow)
        return self.lift(m - self.pow) == o.lift(m - o.pow)

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.num

    def __repr__(self):
        if self.pow == 0:
            return repr(self.num)
        return f"({self.num!r}) / zeta^{self.pow}"


def hloc_ops(a: HLoc, b: HLoc, op: str):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


@dataclass
class Mat2:
    a: HLoc
    b: HLoc
    c: HLoc
    d: HLoc

    @classmethod
    def diag(cls, x: HLoc, y: HLoc) -> "Mat2":
        z = HLoc.zero(x.spec)
        return cls(x, z, z, y)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o):
        return self + (-o)

    def scale_left(self, x: HLoc) -> "Mat2":
        return Mat2(x * self.a, x * self.b, x * self.c, x * self.d)

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), o.entries()))

    __hash__ = None  # type: ignore[assignment]

    def mismatch(self, o: "Mat2") -> str | None:
        for name, x, y in zip("abcd", self.entries(), o.entries()):
            if x != y:
                return f"entry {name}: {x!r} != {y!r}"
        return None


def default_z(spec: FieldSpec) -> HLoc:
    """z = -tau_(omega_-1) / zeta."""
    return HLoc(-tau_omega(spec, (spec.q - 1) // 2), 1)


class Kappa2:
    """The algebra map H -> M_2(H_zeta) determined by (iota, z, mu = id^twist)."""

    def __init__(self, spec: FieldSpec, z: HLoc | None = None, twist: int = 2):
        require_prime_field(spec)
        self.spec = spec
        self.z = default_z(spec) if z is None else z
        self.twist = twist
        self._pure: dict[tuple[int, int], Mat2] = {}
        zero = HLoc.zero(spec)
        mu_idem = HLoc(e_elem(spec, twist))
        mu_inv_idem = HLoc(e_elem(spec, -twist))
        self.m0 = Mat2(-mu_idem, zero, self.z * HLoc(iota_generator(spec, 1)), zero)
        self.m1 = Mat2(zero, self.z * HLoc(iota_generator(spec, 0)), zero, -mu_inv_idem)

    def omega_matrix(self, i: int) -> Mat2:
        """Image of tau_(g^i): diag(mu^-1(w) tau_w, mu(w) tau_w)."""
        sp = self.spec
        t = tau_omega(sp, i)
        return Mat2.diag(HLoc(t.scale(sp.gpow(-self.twist * i))), HLoc(t.scale(sp.gpow(self.twist * i))))

    def gen_matrix(self, i: int) -> Mat2:
        return self.m0 if i == 0 else self.m1

    def pure(self, n: int, f: int) -> Mat2:
        key = (n, f)
        hit = self._pure.get(key)
        if hit is not None:
            return hit
        if n == 0:
            one, zero = HLoc.one(self.spec), HLoc.zero(self.spec)
            m = Mat2(one, zero, zero, one)
        else:
            last = Word(n, f, 0).last
            prev = self.pure(n - 1, f) if n > 1 else self.pure(0, -1)
            m = prev * self.gen_matrix(last)
        self._pure[key] = m
        return m

    def __call__(self, h: HElem) -> Mat2:
        sp = self.spec
        if h.spec is not sp:
            raise SpecMismatch("element over a different field")
        # gather the k[Omega] prefix of each word shape, already twisted by mu^-1 and mu
        left: dict[tuple[int, int], dict[Word, int]] = {}
        right: dict[tuple[int, int], dict[Word, int]] = {}
        for w, c in h.terms.items():
            key = (w.len, w.first)
            base = Word(0, -1, w.omega)
            lt = left.setdefault(key, {})
            rt = right.setdefault(key, {})
            lt[base] = sp.add(lt.get(base, 0), sp.mul(c, sp.gpow(-self.twist * w.omega)))
            rt[base] = sp.add(rt.get(base, 0), sp.mul(c, sp.gpow(self.twist * w.omega)))
        # accumulate numerators per (entry, zeta power), align once at the end
        acc: list[dict[int, HElem]] = [dict(), dict(), dict(), dict()]
        for key in left:
            K = self.pure(*key)
            A, B = HElem(sp, left[key]), HElem(sp, right[key])
            for slot, (pref, ent) in enumerate(((A, K.a), (A, K.b), (B, K.c), (B, K.d))):
                if not ent.num or not pref:
                    continue
                d = acc[slot]
                prod = pref * ent.num
                d[ent.pow] = d[ent.pow] + prod if ent.pow in d else prod
        out = []
        for d in acc:
            if not d:
                out.append(HLoc.zero(sp))
                continue
            m = max(d)
            total = HElem.zero(sp)
            for k, num in d.items():
                total = total + (num * zeta_power(sp, m - k) if m != k else num)
            out.append(HLoc(total, m))
        return Mat2(*out)


@lru_cache(maxsize=None)
def default_kappa2(spec: FieldSpec) -> Kappa2:
    return Kappa2(spec)


def kappa2(h: HElem) -> Mat2:
    return default_kappa2(h.spec)(h)


# the bimodule B -------------------------------------------------------------------

def _reduce_loc(x: HLoc, side: int) -> HLoc:
    return HLoc(coset_reduce(x.num, side), x.pow)


class BElem:
    """(u, v) with u in H_zeta/H_zeta tau0 and v in H_zeta/H_zeta tau1."""

    __slots__ = ("u", "v", "kappa")

    def __init__(self, u: HLoc, v: HLoc, kappa: Kappa2 | None = None):
        self.kappa = kappa if kappa is not None else default_kappa2(u.spec)
        self.u = _reduce_loc(u, 0)
        self.v = _reduce_loc(v, 1)

    @property
    def spec(self):
        return self.u.spec

    def right_act(self, h: HElem) -> "BElem":
        M = self.kappa(h)
        return self.right_act_matrix(M)

    def right_act_matrix(self, M: Mat2) -> "BElem":
        return BElem(self.u * M.a + self.v * M.c, self.u * M.b + self.v * M.d, self.kappa)

    def left_act(self, a: HLoc | HElem) -> "BElem":
        if isinstance(a, HElem):
            a = HLoc(a)
        return BElem(a * self.u, a * self.v, self.kappa)

    def __add__(self, o: "BElem") -> "BElem":
        return BElem(self.u + o.u, self.v + o.v, self.kappa)

    def __neg__(self):
        return BElem(-self.u, -self.v, self.kappa)

    def __sub__(self, o):
        return self + (-o)

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def __eq__(self, o):
        if not isinstance(o, BElem):
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"B({self.u!r}, {self.v!r})"


def b_make(u: HLoc | HElem, v: HLoc | HElem, kappa: Kappa2 | None = None) -> BElem:
    u = HLoc(u) if isinstance(u, HElem) else u
    v = HLoc(v) if isinstance(v, HElem) else v
    return BElem(u, v, kappa)


def b_right_act(w: BElem, h: HElem) -> BElem:
    return w.right_act(h)


def b_left_act(a: HLoc | HElem, w: BElem) -> BElem:
    return w.left_act(a)


def b_one(spec: FieldSpec, kappa: Kappa2 | None = None) -> BElem:
    one = HLoc.one(spec)
    return BElem(one, one, kappa)


def module_generators(spec: FieldSpec, kappa: Kappa2 | None = None) -> list[BElem]:
    one, zero = HLoc.one(spec), HLoc.zero(spec)
    return [BElem(one, zero, kappa), BElem(zero, one, kappa)]


def psi(h: HElem, kappa: Kappa2 | None = None) -> BElem:
    """h * (1, 1)."""
    return b_one(h.spec, kappa).left_act(h)


# the actions of epsilon_alpha and zeta^-1 -------------------------------------------

def left_epsilon(w: BElem, j: int) -> BElem:
    """epsilon_(id^j) * w = (X_(id^j) / zeta) * w."""
    return w.left_act(HLoc(x_elem(w.spec, j), 1))


def right_epsilon(w: BElem, j: int) -> BElem:
    """w * epsilon_(id^j) = zeta * (w * X_(id^j)); right zeta^-1 acts as left zeta."""
    return w.right_act(x_elem(w.spec, j)).left_act(zeta_elem(w.spec))


def right_zeta_inverse(w: BElem) -> BElem:
    return w.left_act(zeta_elem(w.spec))


__all__ = [
    "HLoc", "Mat2", "Kappa2", "BElem", "kappa2", "default_kappa2", "default_z", "b_make",
    "b_right_act", "b_left_act", "b_one", "module_generators", "psi", "left_epsilon",
    "right_epsilon", "right_zeta_inverse", "hloc_ops", "require_prime_field",
]
