"""The pro-p Iwahori Hecke algebra of SL2 in characteristic p.

A basis word ``Word(len, first, omega)`` stands for tau_w with
w = g^omega * s_first * s_other * ... (len alternating letters).  Elements
are sparse maps from words to field codes.

Multiplication follows from three rules for left multiplication by a
generator:

* tau_w' * tau_(w, x)  = tau_(w' w, x)
* tau_si * tau_(w, x)  = tau_(w^-1, si x)          if x is empty or starts with the other letter
* tau_si * tau_(w, x)  = sum over all w' of tau_(w', x)   if x starts with si

``mul_by_rewriting`` applies them literally; ``HElem.__mul__`` uses the
equivalent closed form for a product of two basis words.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import SpecMismatch
from .field import FieldSpec
from .omega import Character, idempotent_terms


class Word(NamedTuple):
    len: int
    first: int  # 0 or 1; -1 when len == 0
    omega: int

    @property
    def last(self) -> int:
        if self.len == 0:
            return -1
        return self.first if self.len % 2 else 1 - self.first

    def letters(self) -> list[int]:
        return [self.first if k % 2 == 0 else 1 - self.first for k in range(self.len)]


def word_from_letters(omega: int, letters: Iterable[int]) -> Word:
    """Word for omega * s_l1 * ... ; the letters must alternate."""
    letters = list(letters)
    for a, b in zip(letters, letters[1:]):
        if a == b:
            raise ValueError("letters of a reduced word must alternate")
    if not letters:
        return Word(0, -1, omega)
    return Word(len(letters), letters[0], omega)


def _concat(n1: int, f1: int, n2: int, f2: int) -> tuple[int, int]:
    if n1 == 0:
        return n2, f2
    return n1 + n2, f1


class HElem:
    """Finite linear combination of basis words.  Treat as immutable."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms: dict | None = None, _clean: bool = False):
        self.spec = spec
        if _clean:
            self.terms = terms
        else:
            self.terms = {w: c for w, c in (terms or {}).items() if c}

    # constructors
    @classmethod
    def zero(cls, spec: FieldSpec) -> "HElem":
        return cls(spec, {}, True)

    @classmethod
    def one(cls, spec: FieldSpec) -> "HElem":
        return cls(spec, {Word(0, -1, 0): 1}, True)

    @classmethod
    def basis(cls, spec: FieldSpec, word: Word, coeff: int = 1) -> "HElem":
        n = spec.q - 1
        return cls(spec, {Word(word.len, word.first, word.omega % n): coeff})

    @classmethod
    def scalar(cls, spec: FieldSpec, c: int) -> "HElem":
        return cls(spec, {Word(0, -1, 0): spec.from_int(c)})

    # basic arithmetic
    def _check(self, other: "HElem"):
        if not isinstance(other, HElem):
            raise TypeError(f"cannot combine HElem with {type(other).__name__}")
        if other.spec is not self.spec:
            raise SpecMismatch("Hecke elements over different fields")

    def __add__(self, other: "HElem") -> "HElem":
        self._check(other)
        add = self.spec.add
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = add(t.get(w, 0), c)
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        return HElem(self.spec, t, True)

    def __neg__(self) -> "HElem":
        neg = self.spec.neg
        return HElem(self.spec, {w: neg(c) for w, c in self.terms.items()}, True)

    def __sub__(self, other: "HElem") -> "HElem":
        return self + (-other)

    def scale(self, c: int) -> "HElem":
        if not c:
            return HElem.zero(self.spec)
        mul = self.spec.mul
        return HElem(self.spec, {w: mul(a, c) for w, a in self.terms.items()}, True)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.spec.from_int(other))
        self._check(other)
        return _mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(self.spec.from_int(other))
        return NotImplemented

    def __pow__(self, n: int) -> "HElem":
        if n < 0:
            raise ValueError("negative powers are not defined in H")
        result, base = HElem.one(self.spec), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, HElem):
            return NotImplemented
        return self.spec is other.spec and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def max_len(self) -> int:
        return max((w.len for w in self.terms), default=-1)

    def left_omega(self, i: int, c: int = 1) -> "HElem":
        """c * tau_(g^i) * self, cheaply."""
        n = self.spec.q - 1
        mul = self.spec.mul
        return HElem(
            self.spec,
            {Word(w.len, w.first, (w.omega + i) % n): mul(a, c) for w, a in self.terms.items()},
            True,
        )

    def __repr__(self):
        from .expr import format_helem

        return format_helem(self)


def _mul(a: HElem, b: HElem) -> HElem:
    spec = a.spec
    n = spec.q - 1
    add, mul = spec.add, spec.mul
    out: dict[Word, int] = {}
    full: dict[tuple[int, int], int] = {}
    # group the right factor by shape so the collapsing case is one sum per shape
    b_shapes: dict[tuple[int, int], list[tuple[int, int]]] = {}
    b_sums: dict[tuple[int, int], int] = {}
    for w, c in b.terms.items():
        key = (w.len, w.first)
        b_shapes.setdefault(key, []).append((w.omega, c))
        b_sums[key] = add(b_sums.get(key, 0), c)
    for u, ca in a.terms.items():
        n1, f1, o1 = u
        last = u.last
        sign = -1 if n1 % 2 else 1
        for (n2, f2), items in b_shapes.items():
            if n1 and n2 and last == f2:
                key = (n1 + n2 - 1, f1)
                full[key] = add(full.get(key, 0), mul(ca, b_sums[(n2, f2)]))
            else:
                ln, lf = _concat(n1, f1, n2, f2)
                for o2, cb in items:
                    w = Word(ln, lf, (o1 + sign * o2) % n)
                    s = add(out.get(w, 0), mul(ca, cb))
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
    for (ln, lf), c in full.items():
        if not c:
            continue
        for o in range(n):
            w = Word(ln, lf, o)
            s = add(out.get(w, 0), c)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return HElem(spec, out, True)


# literal generator rewriting, kept as the reference implementation

def _left_gen(spec: FieldSpec, gen, h: HElem) -> HElem:
    """Left-multiply h by a single generator: ('w', i) or ('s', i)."""
    n = spec.q - 1
    add = spec.add
    out: dict[Word, int] = {}

    def put(w, c):
        s = add(out.get(w, 0), c)
        if s:
            out[w] = s
        else:
            out.pop(w, None)

    kind, i = gen
    for w, c in h.terms.items():
        if kind == "w":
            put(Word(w.len, w.first, (w.omega + i) % n), c)
        elif w.len == 0 or w.first != i:
            put(Word(w.len + 1, i, -w.omega % n), c)
        else:
            for o in range(n):
                put(Word(w.len, w.first, o), c)
    return HElem(spec, out, True)


def generator_string(w: Word) -> list:
    return [("w", w.omega)] + [("s", l) for l in w.letters()]


def mul_by_rewriting(a: HElem, b: HElem) -> HElem:
    """a * b by decomposing each word of a into generators and applying them right to left."""
    a._check(b)
    spec = a.spec
    total = HElem.zero(spec)
    for w, c in a.terms.items():
        cur = b
        for gen in reversed(generator_string(w)):
            cur = _left_gen(spec, gen, cur)
        total = total + cur.scale(c)
    return total


# generators

def tau(spec: FieldSpec, i: int) -> HElem:
    return HElem(spec, {Word(1, i, 0): 1}, True)


def tau_omega(spec: FieldSpec, i: int) -> HElem:
    return HElem(spec, {Word(0, -1, i % (spec.q - 1)): 1}, True)


def e_elem(spec: FieldSpec, j: int) -> HElem:
    """The idempotent e_(id^j) viewed in H."""
    terms = idempotent_terms(spec, Character(j % (spec.q - 1)))
    return HElem(spec, {Word(0, -1, i): c for i, c in terms.items()})


def gen_elem(spec: FieldSpec, which: str, index: int = 0) -> HElem:
    if which == "tau0":
        return tau(spec, 0)
    if which == "tau1":
        return tau(spec, 1)
    if which == "omega":
        return tau_omega(spec, index)
    if which == "e":
        return e_elem(spec, index)
    if which == "one":
        return HElem.one(spec)
    raise ValueError(f"unknown generator {which!r}")


def h_arith(a: HElem, b: HElem, op: str, c: int | None = None) -> HElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(a.spec.from_int(c))
    raise ValueError(f"unknown operation {op!r}")


def word_elem(spec: FieldSpec, omega: int, letters: Iterable[int]) -> HElem:
    return HElem.basis(spec, word_from_letters(omega % (spec.q - 1), letters))


# cosets of the left ideals H tau_i

def coset_reduce(h: HElem, side: int) -> HElem:
    """Canonical representative of h modulo H*tau_side: drop words ending in s_side."""
    return HElem(h.spec, {w: c for w, c in h.terms.items() if w.last != side}, True)


def in_left_ideal(h: HElem, side: int) -> bool:
    return all(w.last == side for w in h.terms)


# involutions

_IOTA_CACHE: dict = {}


def _iota_pure(spec: FieldSpec, n: int, f: int) -> HElem:
    key = (spec.p, spec.e, n, f)
    hit = _IOTA_CACHE.get(key)
    if hit is not None:
        return hit
    if n == 0:
        img = HElem.one(spec)
    else:
        w = Word(n, f, 0)
        prev = _iota_pure(spec, n - 1, f) if n > 1 else HElem.one(spec)
        img = prev * iota_generator(spec, w.last)
    _IOTA_CACHE[key] = img
    return img


def iota_generator(spec: FieldSpec, i: int) -> HElem:
    """iota(tau_i) = -e_1 - tau_i."""
    return -e_elem(spec, 0) - tau(spec, i)


def iota(h: HElem) -> HElem:
    """The k[Omega]-linear automorphism with tau_i -> -e_1 - tau_i."""
    spec = h.spec
    out = HElem.zero(spec)
    by_shape: dict[tuple[int, int], HElem] = {}
    for w, c in h.terms.items():
        key = (w.len, w.first)
        by_shape[key] = by_shape.get(key, HElem.zero(spec)) + tau_omega(spec, w.omega).scale(c)
    for (n, f), front in by_shape.items():
        out = out + front * _iota_pure(spec, n, f)
    return out


def jmap_word(spec: FieldSpec, w: Word) -> Word:
    """The normal form of w^-1 in the extended Weyl group."""
    n = spec.q - 1
    half = n // 2
    sign = 1 if w.len % 2 else -1
    om = (w.len * half + sign * w.omega) % n
    if w.len == 0:
        return Word(0, -1, om)
    return Word(w.len, w.last, om)


def jmap(h: HElem) -> HElem:
    """The anti-automorphism tau_w -> tau_(w^-1)."""
    spec = h.spec
    return HElem(spec, {jmap_word(spec, w): c for w, c in h.terms.items()}, True)


def involution_apply(h: HElem, which: str) -> HElem:
    if which == "iota":
        return iota(h)
    if which == "jmap":
        return jmap(h)
    raise ValueError(f"unknown involution {which!r}")


# filtered basis

class FiltBasis:
    """All words of length <= bound, ordered by (len, first, omega)."""

    def __init__(self, spec: FieldSpec, bound: int):
        if bound < 0:
            raise ValueError("length bound must be nonnegative")
        self.spec = spec
        self.bound = bound
        n = spec.q - 1
        words = [Word(0, -1, o) for o in range(n)]
        for ln in range(1, bound + 1):
            for f in (0, 1):
                words.extend(Word(ln, f, o) for o in range(n))
        self.words = words
        self.index = {w: k for k, w in enumerate(words)}

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def elements(self) -> list[HElem]:
        return [HElem.basis(self.spec, w) for w in self.words]


def filtered_basis(spec: FieldSpec, bound: int) -> FiltBasis:
    return FiltBasis(spec, bound)


def solve_left_combination(target: HElem, gens: list[HElem], bound: int) -> list[HElem]:
    """Find u_i supported in length <= bound with target = sum u_i * gens[i].

    Raises NoSolution(bound) when no such combination exists at this bound.
    """
    from .errors import NoSolution
    from .linalg import Echelon

    if not gens:
        raise ValueError("need at least one generator")
    spec = target.spec
    basis = FiltBasis(spec, bound)
    columns = []
    ech = Echelon(spec)
    for gi, g in enumerate(gens):
        for w in basis:
            col = HElem.basis(spec, w) * g
            columns.append((gi, w))
            ech.add(col.terms, tag=len(columns) - 1)
    residual, combo = ech.reduce(target.terms)
    if residual:
        raise NoSolution(bound)
    coeffs: list[dict] = [dict() for _ in gens]
    for tag, c in combo.items():
        gi, w = columns[tag]
        coeffs[gi][w] = c
    result = [HElem(spec, d) for d in coeffs]
    check = HElem.zero(spec)
    for u, g in zip(result, gens):
        check = check + u * g
    if check != target:
        from .errors import InternalCheckFailed

        raise InternalCheckFailed("left combination does not reproduce the target")
    return result
