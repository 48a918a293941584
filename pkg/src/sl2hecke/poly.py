"""Polynomials over F_q: univariate, Laurent, rational functions, multivariate
polynomials and ideals with a Buchberger Groebner basis engine.

Coefficients are raw field codes of a shared :class:`FieldSpec`.
"""
from __future__ import annotations

import heapq
import threading
from itertools import combinations

from .errors import DivisionByZero, SpecMismatch, VariableMismatch
from .field import FieldSpec


# univariate ------------------------------------------------------------------

class UPoly:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of var**i."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=()):
        self.spec = spec
        c = [spec.from_int(x) if not 0 <= x < spec.q else x for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, spec, n: int, c: int = 1) -> "UPoly":
        return cls(spec, [0] * n + [c])

    @classmethod
    def const(cls, spec, c: int) -> "UPoly":
        return cls(spec, [spec.from_int(c) if c < 0 or c >= spec.q else c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, o):
        if not isinstance(o, UPoly):
            raise TypeError("expected UPoly")
        if o.spec is not self.spec:
            raise SpecMismatch("polynomials over different fields")

    def __add__(self, o):
        self._check(o)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = self.spec.add(out[i], x)
        return UPoly(self.spec, out)

    def __neg__(self):
        return UPoly(self.spec, [self.spec.neg(x) for x in self.coeffs])

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, int):
            c = self.spec.from_int(o)
            return UPoly(self.spec, [self.spec.mul(x, c) for x in self.coeffs])
        self._check(o)
        if not self.coeffs or not o.coeffs:
            return UPoly(self.spec)
        sp = self.spec
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    if y:
                        out[i + j] = sp.add(out[i + j], sp.mul(x, y))
        return UPoly(sp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = UPoly.const(self.spec, 1)
        for _ in range(n):
            r = r * self
        return r

    def scale(self, c: int) -> "UPoly":
        return UPoly(self.spec, [self.spec.mul(x, c) for x in self.coeffs])

    def divmod(self, o: "UPoly") -> tuple["UPoly", "UPoly"]:
        self._check(o)
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        sp = self.spec
        rem = list(self.coeffs)
        dq = o.degree
        inv = sp.inv(o.lead())
        quo = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                f = sp.mul(c, inv)
                quo[k - dq] = f
                for i, y in enumerate(o.coeffs):
                    rem[k - dq + i] = sp.sub(rem[k - dq + i], sp.mul(f, y))
        return UPoly(sp, quo), UPoly(sp, rem[:dq] if dq > 0 else [])

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self.scale(self.spec.inv(self.lead()))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.spec.add(self.spec.mul(acc, x), c)
        return acc

    def compose(self, g: "UPoly") -> "UPoly":
        acc = UPoly(self.spec)
        for c in reversed(self.coeffs):
            acc = acc * g + UPoly.const(self.spec, c)
        return acc

    def __eq__(self, o):
        if not isinstance(o, UPoly):
            return NotImplemented
        return self.spec is o.spec and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return format_upoly(self, "t")


def format_upoly(f: UPoly, var: str) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        cs = f.spec.format_code(c)
        if i == 0:
            parts.append(cs)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            parts.append(mono if cs == "1" else f"{cs}*{mono}")
    return " + ".join(parts)


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


# Laurent ---------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial: map exponent (any int) -> nonzero code."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms: dict | None = None):
        self.spec = spec
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, spec, n: int, c: int = 1):
        return cls(spec, {n: c})

    def __add__(self, o):
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = self.spec.add(t.get(k, 0), v)
        return LaurentPoly(self.spec, t)

    def __neg__(self):
        return LaurentPoly(self.spec, {k: self.spec.neg(v) for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, int):
            c = self.spec.from_int(o)
            return LaurentPoly(self.spec, {k: self.spec.mul(v, c) for k, v in self.terms.items()})
        sp = self.spec
        t: dict[int, int] = {}
        for i, a in self.terms.items():
            for j, b in o.terms.items():
                t[i + j] = sp.add(t.get(i + j, 0), sp.mul(a, b))
        return LaurentPoly(sp, t)

    __rmul__ = __mul__

    def substitute_inverse(self) -> "LaurentPoly":
        """f(x) -> f(1/x)."""
        return LaurentPoly(self.spec, {-k: v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, o):
        if not isinstance(o, LaurentPoly):
            return NotImplemented
        return self.spec is o.spec and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{self.spec.format_code(v)}*t^{k}" for k, v in sorted(self.terms.items()))


# rational functions ------------------------------------------------------------

class RatFunc:
    """num/den in k(z), stored with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None):
        spec = num.spec
        den = UPoly.const(spec, 1) if den is None else den
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        g = upoly_gcd(num, den) if not num.is_zero() else den.monic()
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        c = spec.inv(den.lead())
        self.num = num.scale(c)
        self.den = den.scale(c)

    @property
    def spec(self):
        return self.num.spec

    @classmethod
    def const(cls, spec, c: int) -> "RatFunc":
        return cls(UPoly.const(spec, c))

    @classmethod
    def var(cls, spec) -> "RatFunc":
        return cls(UPoly.monomial(spec, 1))

    def _lift(self, o):
        if isinstance(o, RatFunc):
            return o
        if isinstance(o, int):
            return RatFunc.const(self.spec, o)
        return NotImplemented

    def __add__(self, o):
        o = self._lift(o)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        if o.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc.const(self.spec, 1) / (self ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __eq__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        n = format_upoly(self.num, "z")
        if self.den.degree == 0:
            return n
        return f"({n})/({format_upoly(self.den, 'z')})"


def ratfunc_ops(r: RatFunc, s: RatFunc, op: str) -> RatFunc:
    if r.spec is not s.spec:
        raise SpecMismatch("rational functions over different fields")
    return {"add": r.__add__, "sub": r.__sub__, "mul": r.__mul__, "div": r.__truediv__}[op](s)


# multivariate ------------------------------------------------------------------

def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e):
    return e


class MonomialOrder:
    """grevlex, lex, or a block order (lex on block sizes, grevlex within blocks)."""

    def __init__(self, kind: str = "grevlex", blocks: tuple[int, ...] | None = None):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and not blocks:
            raise ValueError("block order needs block sizes")
        self.kind = kind
        self.blocks = tuple(blocks) if blocks else None

    def key(self, e):
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        out, start = [], 0
        for size in self.blocks:
            out.append(_grevlex_key(e[start:start + size]))
            start += size
        return tuple(out)

    def __eq__(self, o):
        return isinstance(o, MonomialOrder) and (self.kind, self.blocks) == (o.kind, o.blocks)

    def __hash__(self):
        return hash((self.kind, self.blocks))

    def __repr__(self):
        return self.kind if self.kind != "block" else f"block{self.blocks}"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class MPoly:
    """Sparse polynomial: map exponent tuple -> nonzero code, over named variables."""

    __slots__ = ("spec", "vars", "terms", "order")

    def __init__(self, spec: FieldSpec, variables, terms: dict | None = None, order: MonomialOrder = GREVLEX):
        self.spec = spec
        self.vars = tuple(variables)
        nv = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nv:
                raise VariableMismatch(f"exponent {e} does not match {nv} variables")
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self.order = order

    # constructors
    @classmethod
    def const(cls, spec, variables, c: int, order=GREVLEX) -> "MPoly":
        return cls(spec, variables, {(0,) * len(tuple(variables)): spec.from_int(c)}, order)

    @classmethod
    def var(cls, spec, variables, name: str, order=GREVLEX) -> "MPoly":
        variables = tuple(variables)
        e = tuple(1 if v == name else 0 for v in variables)
        if sum(e) != 1:
            raise VariableMismatch(f"unknown variable {name!r}")
        return cls(spec, variables, {e: 1}, order)

    @classmethod
    def gens(cls, spec, variables, order=GREVLEX) -> list["MPoly"]:
        return [cls.var(spec, variables, v, order) for v in variables]

    def _like(self, terms) -> "MPoly":
        return MPoly(self.spec, self.vars, terms, self.order)

    def _check(self, o):
        if not isinstance(o, MPoly):
            raise TypeError("expected MPoly")
        if o.vars != self.vars:
            raise VariableMismatch(f"{self.vars} vs {o.vars}")
        if o.spec is not self.spec:
            raise SpecMismatch("polynomials over different fields")

    def _lift(self, o):
        if isinstance(o, int):
            return MPoly.const(self.spec, self.vars, o, self.order)
        self._check(o)
        return o

    def __add__(self, o):
        o = self._lift(o)
        t = dict(self.terms)
        add = self.spec.add
        for e, c in o.terms.items():
            s = add(t.get(e, 0), c)
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return self._like(t)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: self.spec.neg(c) for e, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        sp = self.spec
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = sp.add(t.get(e, 0), sp.mul(c1, c2))
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return self._like(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = MPoly.const(self.spec, self.vars, 1, self.order)
        for _ in range(n):
            r = r * self
        return r

    def scale(self, c: int) -> "MPoly":
        if not c:
            return self._like({})
        return self._like({e: self.spec.mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, m, c: int = 1) -> "MPoly":
        return self._like({tuple(a + b for a, b in zip(e, m)): self.spec.mul(v, c) for e, v in self.terms.items()})

    def with_order(self, order: MonomialOrder) -> "MPoly":
        return MPoly(self.spec, self.vars, self.terms, order)

    def is_zero(self) -> bool:
        return not self.terms

    def lead_monomial(self):
        return max(self.terms, key=self.order.key)

    def lead_coeff(self) -> int:
        return self.terms[self.lead_monomial()]

    def monic(self) -> "MPoly":
        if not self.terms:
            return self
        return self.scale(self.spec.inv(self.lead_coeff()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables_used(self) -> set[str]:
        return {v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)}

    def evaluate(self, values: dict) -> int:
        sp = self.spec
        acc = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = sp.mul(term, sp.pow(values[v], k))
            acc = sp.add(acc, term)
        return acc

    def subs(self, mapping: dict) -> "MPoly":
        """Substitute polynomials (same variable list) or ints for some variables."""
        out = self._like({})
        for e, c in self.terms.items():
            term = self._like({tuple(0 if v in mapping else k for v, k in zip(self.vars, e)): c})
            for v, k in zip(self.vars, e):
                if k and v in mapping:
                    term = term * (self._lift(mapping[v]) ** k)
            out = out + term
        return out

    def change_ring(self, variables, order: MonomialOrder | None = None) -> "MPoly":
        """Re-express over another variable list containing every variable used here."""
        variables = tuple(variables)
        idx = {v: i for i, v in enumerate(variables)}
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for v, k in zip(self.vars, e):
                if k:
                    if v not in idx:
                        raise VariableMismatch(f"variable {v!r} missing from target ring")
                    ne[idx[v]] = k
            t[tuple(ne)] = c
        return MPoly(self.spec, variables, t, order or self.order)

    def __eq__(self, o):
        if isinstance(o, int):
            o = MPoly.const(self.spec, self.vars, o)
        if not isinstance(o, MPoly):
            return NotImplemented
        return self.vars == o.vars and self.spec is o.spec and self.terms == o.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=self.order.key, reverse=True):
            c = self.spec.format_code(self.terms[e])
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def mp_arith(f: MPoly, g: MPoly, op: str) -> MPoly:
    f._check(g)
    return {"add": f.__add__, "sub": f.__sub__, "mul": f.__mul__}[op](g)


# Groebner engine -----------------------------------------------------------------

def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _neg_key(k):
    return tuple(_neg_key(x) for x in k) if isinstance(k, tuple) else -k


def normal_form(f: MPoly, basis: list[MPoly]) -> MPoly:
    """Full reduction of f by basis (every term, not just the lead)."""
    sp = f.spec
    key = f.order.key
    leads = [(g.lead_monomial(), sp.inv(g.lead_coeff()), g) for g in basis if g.terms]
    rem: dict = {}
    p = dict(f.terms)
    # max-heap of live monomials; stale entries are skipped when popped
    heap = [(_neg_key(key(e)), e) for e in p]
    heapq.heapify(heap)
    queued = set(p)
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = p.get(m)
        if not c:
            continue
        for lm, linv, g in leads:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                factor = sp.neg(sp.mul(c, linv))
                for e, v in g.terms.items():
                    ne = tuple(a + b for a, b in zip(e, shift))
                    s = sp.add(p.get(ne, 0), sp.mul(factor, v))
                    if s:
                        p[ne] = s
                        if ne not in queued:
                            queued.add(ne)
                            heapq.heappush(heap, (_neg_key(key(ne)), ne))
                    else:
                        p.pop(ne, None)
                break
        else:
            rem[m] = c
            del p[m]
    return f._like(rem)


def s_polynomial(f: MPoly, g: MPoly) -> MPoly:
    lf, lg = f.lead_monomial(), g.lead_monomial()
    m = _lcm(lf, lg)
    sp = f.spec
    a = f.mul_monomial(tuple(x - y for x, y in zip(m, lf)), sp.inv(f.lead_coeff()))
    b = g.mul_monomial(tuple(x - y for x, y in zip(m, lg)), sp.inv(g.lead_coeff()))
    return a - b


def buchberger(gens: list[MPoly]) -> list[MPoly]:
    """Reduced, monic Groebner basis of the ideal generated by gens.

    Pairs are taken by normal selection; the coprime and chain criteria skip
    pairs whose S-polynomial is known to reduce to zero.
    """
    basis = [g.monic() for g in gens if not g.is_zero()]
    if not basis:
        return []
    key = basis[0].order.key
    leads = [g.lead_monomial() for g in basis]
    heap: list = []

    def push(i, j):
        heapq.heappush(heap, (key(_lcm(leads[i], leads[j])), i, j))

    for i, j in combinations(range(len(basis)), 2):
        push(i, j)
    done: set[tuple[int, int]] = set()
    while heap:
        _, i, j = heapq.heappop(heap)
        done.add((i, j))
        li, lj = leads[i], leads[j]
        if all(not (a and b) for a, b in zip(li, lj)):
            continue
        m = _lcm(li, lj)
        if any(k != i and k != j and _divides(leads[k], m)
               and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done
               for k in range(len(basis))):
            continue
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r.monic())
            leads.append(basis[-1].lead_monomial())
            k = len(basis) - 1
            for i2 in range(k):
                push(i2, k)
    return _reduce_basis(basis)


def _reduce_basis(basis: list[MPoly]) -> list[MPoly]:
    # drop elements whose lead is divisible by another lead
    minimal: list[MPoly] = []
    for g in sorted(basis, key=lambda g: g.order.key(g.lead_monomial())):
        if not any(_divides(h.lead_monomial(), g.lead_monomial()) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lm = g.lead_monomial()
        tail = normal_form(g._like({e: c for e, c in g.terms.items() if e != lm}), others)
        reduced.append((tail + g._like({lm: g.terms[lm]})).monic())
    return sorted(reduced, key=lambda g: g.order.key(g.lead_monomial()))


def spolys_reduce_to_zero(basis: list[MPoly]) -> bool:
    """Buchberger criterion: every S-polynomial of the basis reduces to 0."""
    return all(normal_form(s_polynomial(f, g), basis).is_zero() for f, g in combinations(basis, 2))


class IdealHandle:
    """Ideal in a polynomial ring, with a lazily computed reduced Groebner basis.

    The basis is computed at most once; concurrent readers block on a lock.
    """

    def __init__(self, spec: FieldSpec, variables, gens, order: MonomialOrder = GREVLEX):
        self.spec = spec
        self.vars = tuple(variables)
        self.order = order
        self.gens = [MPoly(spec, self.vars, g.terms, order) if g.vars == self.vars else g.change_ring(self.vars, order)
                     for g in gens]
        self._basis: list[MPoly] | None = None
        self._lock = threading.Lock()

    @property
    def basis(self) -> list[MPoly]:
        if self._basis is None:
            with self._lock:
                if self._basis is None:
                    self._basis = buchberger(self.gens)
        return self._basis

    def reduce(self, f: MPoly) -> tuple[MPoly, bool]:
        f = f.change_ring(self.vars, self.order)
        r = normal_form(f, self.basis)
        return r, r.is_zero()

    def contains(self, f: MPoly) -> bool:
        return self.reduce(f)[1]

    def is_unit(self) -> bool:
        return any(g.total_degree() == 0 for g in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __eq__(self, o):
        if not isinstance(o, IdealHandle):
            return NotImplemented
        return ideal_equal(self, o)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return "<" + ", ".join(map(repr, self.basis)) + ">"


def ideal(spec, variables, gens, order=GREVLEX) -> IdealHandle:
    return IdealHandle(spec, variables, gens, order)


def groebner(I: IdealHandle) -> list[MPoly]:
    return I.basis


def reduce(f: MPoly, I: IdealHandle) -> tuple[MPoly, bool]:
    return I.reduce(f)


def ideal_equal(I: IdealHandle, J: IdealHandle) -> bool:
    if I.vars != J.vars:
        raise VariableMismatch(f"{I.vars} vs {J.vars}")
    if I.order == J.order:
        return [g.terms for g in I.basis] == [g.terms for g in J.basis]
    return all(J.contains(g) for g in I.gens) and all(I.contains(g) for g in J.gens)


def eliminate(I: IdealHandle, keep) -> IdealHandle:
    """I intersected with k[keep], via lex with the eliminated variables first."""
    keep = [v for v in I.vars if v in set(keep)]
    drop = [v for v in I.vars if v not in set(keep)]
    big = tuple(drop) + tuple(keep)
    order = MonomialOrder("block", (len(drop), len(keep))) if drop and keep else LEX
    J = IdealHandle(I.spec, big, [g.change_ring(big, order) for g in I.gens], order)
    kept = [g for g in J.basis if not (g.variables_used() & set(drop))]
    return IdealHandle(I.spec, tuple(keep), [g.change_ring(tuple(keep), I.order) for g in kept], I.order)


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I cap J = (u*I + (1-u)*J) cap k[vars]."""
    if I.vars != J.vars:
        raise VariableMismatch(f"{I.vars} vs {J.vars}")
    u = "_u"
    while u in I.vars:
        u += "_"
    big = (u,) + I.vars
    uu = MPoly.var(I.spec, big, u)
    one = MPoly.const(I.spec, big, 1)
    gens = [uu * g.change_ring(big) for g in I.gens] + [(one - uu) * g.change_ring(big) for g in J.gens]
    K = IdealHandle(I.spec, big, gens, I.order)
    return eliminate(K, I.vars)


def ring_map_kernel(spec, src_vars, images: list[MPoly]) -> IdealHandle:
    """Kernel of k[src_vars] -> k[tgt], src_var_i -> images[i], by elimination."""
    tgt = images[0].vars
    big = tuple(tgt) + tuple(src_vars)
    gens = [MPoly.var(spec, big, s) - im.change_ring(big) for s, im in zip(src_vars, images)]
    return eliminate(IdealHandle(spec, big, gens), src_vars)
