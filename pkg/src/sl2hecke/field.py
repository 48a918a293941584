"""Exact arithmetic in F_q, q = p**e, for small primes and e <= 3.

Elements are stored internally as integer codes ``sum(c_i * p**i)`` where
``c_0 + c_1 x + ... + c_{e-1} x^{e-1}`` is the reduced polynomial
representative.  Hot loops elsewhere in the package work on these raw codes
through the :class:`FieldSpec` methods; :class:`FieldElem` is the public
value type with operators.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import (
    DivisionByZero,
    NotPrime,
    PTooSmall,
    SpecMismatch,
    UnsupportedDegree,
    ZeroHasNoLog,
)

MAX_DEGREE = 3


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a, b, reduction, p):
    """Multiply coefficient tuples a, b modulo the monic ``reduction``."""
    e = len(reduction) - 1
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            # x^k = x^(k-e) * x^e and x^e = -(lower part of reduction)
            for i in range(e):
                prod[k - e + i] = (prod[k - e + i] - c * reduction[i]) % p
            prod[k] = 0
    return tuple(prod[:e])


def _has_root(poly, p):
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Least monic irreducible of degree e (coefficients low->high, monic last)."""
    if e == 1:
        return (0, 1)
    # for e <= 3 irreducible <=> no root in F_p
    for code in range(p ** e):
        low = tuple((code // p ** i) % p for i in range(e))
        poly = low + (1,)
        if not _has_root(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field F_q with a fixed reduction polynomial and generator.

    Immutable after construction.  ``generator`` is the least primitive element
    in code order; for e = 1 that is the least primitive root mod p.
    """

    __slots__ = ("p", "e", "q", "reduction", "generator", "_exp", "_log", "__weakref__")

    def __init__(self, p: int, e: int = 1):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p < 5:
            raise PTooSmall(f"p = {p} < 5 is not supported")
        if not isinstance(e, int) or not 1 <= e <= MAX_DEGREE:
            raise UnsupportedDegree(f"extension degree {e} not in 1..{MAX_DEGREE}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.reduction = _smallest_irreducible(p, e)
        assert e == 1 or not _has_root(self.reduction, p)
        self.generator = self._find_generator()
        self._build_tables()

    # construction helpers
    def _slow_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        r = _polymulmod(self.to_coeffs(a), self.to_coeffs(b), self.reduction, self.p)
        return self.from_coeffs(r)

    def _slow_pow(self, a: int, n: int) -> int:
        result, base = 1, a
        while n:
            if n & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            n >>= 1
        return result

    def _find_generator(self) -> int:
        order = self.q - 1
        factors = prime_factors(order)
        for g in range(1, self.q):
            if all(self._slow_pow(g, order // r) != 1 for r in factors):
                return g
        raise AssertionError("field has no primitive element")  # pragma: no cover

    def _build_tables(self):
        exp = [0] * (self.q - 1)
        log = [-1] * self.q
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, self.generator)
        if x != 1 or -1 in log[1:]:
            raise AssertionError("generator does not have order q - 1")
        self._exp = tuple(exp)
        self._log = tuple(log)

    # code <-> coefficients
    def to_coeffs(self, code: int) -> tuple[int, ...]:
        p = self.p
        return tuple((code // p ** i) % p for i in range(self.e))

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    # raw arithmetic on codes
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out, scale = 0, 1
        for _ in range(self.e):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        p = self.p
        out, scale = 0, 1
        for _ in range(self.e):
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def gpow(self, i: int) -> int:
        """Code of generator**i."""
        return self._exp[i % (self.q - 1)]

    def dlog_code(self, a: int) -> int:
        if a == 0:
            raise ZeroHasNoLog("0 has no discrete logarithm")
        return self._log[a]

    # public element constructors
    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.spec is not self:
                raise SpecMismatch("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, self.from_int(value))
        return FieldElem(self, self.from_coeffs(tuple(value)))

    def elem(self, code: int) -> "FieldElem":
        return FieldElem(self, code)

    def elements(self):
        return [FieldElem(self, c) for c in range(self.q)]

    def g(self) -> "FieldElem":
        return FieldElem(self, self.generator)

    def format_code(self, code: int) -> str:
        if self.e == 1:
            return str(code)
        return "[" + ",".join(map(str, self.to_coeffs(code))) + "]"

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, g={self.format_code(self.generator)})"

    def __reduce__(self):
        return (make_field, (self.p, self.e))


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """Return the (cached, shared) field F_{p^e}."""
    return FieldSpec(p, e)


class FieldElem:
    """An element of F_q.  Value type; ``coeffs`` is the reduced coefficient vector."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.to_coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.spec is not self.spec:
                raise SpecMismatch("operands belong to different fields")
            return other.code
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.div(o, self.code))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.code))

    def __pow__(self, n: int):
        return FieldElem(self.spec, self.spec.pow(self.code, n))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec is other.spec and self.code == other.code
        if isinstance(other, int):
            return self.code == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.e, self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        if self.spec.e != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.code

    def __repr__(self):
        return f"F{self.spec.q}({self.spec.format_code(self.code)})"


def field_ops(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    """Dispatch one of add/sub/mul/div on two elements of the same field."""
    if a.spec is not b.spec:
        raise SpecMismatch("operands belong to different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def dlog(spec: FieldSpec, x: FieldElem) -> int:
    """The exponent i in [0, q-1) with generator**i == x."""
    if x.spec is not spec:
        raise SpecMismatch("element belongs to a different field")
    return spec.dlog_code(x.code)
