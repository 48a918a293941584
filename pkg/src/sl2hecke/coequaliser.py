"""Degree-truncated exactness checks behind the gluing of the projective lines.

* the crossing-lines ring k[x,y]/<xy> embeds in k[x] x k[y] with cokernel k;
* the symmetric Laurent polynomials are exactly the polynomials in x + 1/x;
* at the point at infinity, palindromic numerators over (x^2+1)^n are
  polynomials in x/(x^2+1).

All statements hold in every degree; these functions verify them up to a
stated bound.
"""
from __future__ import annotations

from dataclasses import dataclass

from .field import FieldSpec
from .linalg import Echelon, nullspace, rank
from .poly import IdealHandle, LaurentPoly, MPoly, RatFunc, UPoly

XY = ("x", "y")


@dataclass
class TruncCheck:
    name: str
    passed: bool
    bound: int
    detail: str = ""


def crossing_lines_exactness(spec: FieldSpec, dbound: int) -> list[TruncCheck]:
    """0 -> k[x,y]/<xy> -> k[x] x k[y] -> k -> 0, in degrees <= dbound."""
    x, y = MPoly.gens(spec, XY)
    rel = IdealHandle(spec, XY, [x * y])
    basis = [MPoly.const(spec, XY, 1)] + [x ** i for i in range(1, dbound + 1)] + [y ** i for i in range(1, dbound + 1)]
    # every f in degree <= dbound reduces into this basis
    images = []
    for f in basis:
        nf, _ = rel.reduce(f)
        fx = nf.subs({"y": 0})
        fy = nf.subs({"x": 0})
        vec = {("x", e[0]): c for e, c in fx.terms.items()}
        vec.update({("y", e[1]): c for e, c in fy.terms.items()})
        images.append(vec)
    injective = rank(spec, images) == len(basis)
    # the difference of the two evaluations at the origin
    def diff(vec):
        return spec.sub(vec.get(("x", 0), 0), vec.get(("y", 0), 0))

    composite_zero = all(diff(v) == 0 for v in images)
    # kernel of (f, g) -> f(0) - g(0) on the truncated product
    product_basis = [("x", i) for i in range(dbound + 1)] + [("y", i) for i in range(dbound + 1)]
    coords = [{b: 1} for b in product_basis]
    functional_rank = rank(spec, [{0: diff(v)} for v in coords])
    kernel_dim = len(product_basis) - functional_rank
    image_rank = rank(spec, images)
    surjective = functional_rank == 1
    return [
        TruncCheck("crossing-lines map is injective", injective, dbound, f"rank {image_rank} of {len(basis)}"),
        TruncCheck("crossing-lines sequence is a complex", composite_zero, dbound),
        TruncCheck("crossing-lines sequence is exact in the middle", image_rank == kernel_dim, dbound,
                   f"image {image_rank}, kernel {kernel_dim}"),
        TruncCheck("evaluation difference is onto k", surjective, dbound),
    ]


def normalisation_example(spec: FieldSpec) -> tuple[MPoly, MPoly]:
    """f = x + y mapped to (f(x, 0), f(0, y))."""
    x, y = MPoly.gens(spec, XY)
    f = x + y
    return f.subs({"y": 0}), f.subs({"x": 0})


def laurent_power(spec: FieldSpec, s: LaurentPoly, k: int) -> LaurentPoly:
    out = LaurentPoly(spec, {0: 1})
    for _ in range(k):
        out = out * s
    return out


def symmetric_in_s(spec: FieldSpec, target: LaurentPoly) -> UPoly | None:
    """Write a symmetric Laurent polynomial as P(x + 1/x); None if impossible."""
    s = LaurentPoly(spec, {1: 1, -1: 1})
    rest = target
    deg = max((abs(k) for k in target.terms), default=0)
    coeffs = [0] * (deg + 1)
    for k in range(deg, -1, -1):
        c = rest.terms.get(k, 0)
        if c:
            coeffs[k] = c
            rest = rest - _scaled(spec, laurent_power(spec, s, k), c)
    if not rest.is_zero():
        return None
    return UPoly(spec, coeffs)


def _scaled(spec, f: LaurentPoly, c: int) -> LaurentPoly:
    return LaurentPoly(spec, {k: spec.mul(v, c) for k, v in f.terms.items()})


def symmetric_kernel(spec: FieldSpec, dbound: int) -> tuple[list[TruncCheck], dict[int, UPoly]]:
    """ker(a(x) -> a(x) - a(1/x)) on Laurent degree <= dbound."""
    monos = list(range(-dbound, dbound + 1))
    images = []
    for k in monos:
        a = LaurentPoly(spec, {k: 1})
        images.append((a - a.substitute_inverse()).terms)
    null = nullspace(spec, images)
    kernel = [{monos[i]: c for i, c in v.items()} for v in null]
    expected = [LaurentPoly(spec, {n: 1, -n: 1}).terms if n else {0: 1} for n in range(dbound + 1)]
    ech = Echelon(spec, track=False)
    for v in kernel:
        ech.add(v)
    spans_equal = len(kernel) == dbound + 1 and all(ech.contains(v) for v in expected) and rank(spec, expected) == dbound + 1
    witnesses: dict[int, UPoly] = {}
    ok = True
    for n in range(dbound + 1):
        target = LaurentPoly(spec, {n: 1, -n: 1}) if n else LaurentPoly(spec, {0: 1})
        P = symmetric_in_s(spec, target)
        if P is None:
            ok = False
            continue
        witnesses[n] = P
    in_subring = ok and all(symmetric_in_s(spec, LaurentPoly(spec, v)) is not None for v in kernel)
    return [
        TruncCheck("symmetric Laurent kernel is spanned by x^n + x^-n", spans_equal, dbound, f"dimension {len(kernel)}"),
        TruncCheck("symmetric Laurent kernel lies in k[x + 1/x]", in_subring, dbound),
    ], witnesses


def infinity_chart(spec: FieldSpec, nbound: int) -> list[TruncCheck]:
    """a(x) = a(1/x) x^(2n) implies a/(x^2+1)^n is a polynomial in x/(x^2+1)."""
    out = []
    x = RatFunc.var(spec)
    one = RatFunc.const(spec, 1)
    u = x / (x * x + one)
    for n in range(nbound + 1):
        # solutions of a(x) - x^(2n) a(1/x) = 0 among polynomials of degree <= 2n
        vecs = []
        for k in range(2 * n + 1):
            v = {k: 1}
            v[2 * n - k] = spec.sub(v.get(2 * n - k, 0), 1)
            vecs.append({i: c for i, c in v.items() if c})
        sols = nullspace(spec, vecs)
        dim_ok = len(sols) == n + 1
        expressed = True
        for sol in sols:
            a = UPoly(spec, [sol.get(k, 0) for k in range(2 * n + 1)])
            # a(x) / x^n is symmetric, so it is P(x + 1/x)
            sym = LaurentPoly(spec, {k - n: c for k, c in enumerate(a.coeffs) if c})
            P = symmetric_in_s(spec, sym)
            if P is None:
                expressed = False
                break
            lhs = RatFunc(a) / ((x * x + one) ** n)
            rhs = RatFunc(UPoly(spec))
            for i, b in enumerate(P.coeffs):
                if b:
                    rhs = rhs + RatFunc.const(spec, b) * u ** (n - i)
            if lhs != rhs:
                expressed = False
                break
        out.append(TruncCheck(f"infinity chart n={n}", dim_ok and expressed, n,
                              f"{len(sols)} palindromic solutions"))
    return out


def psi_identity_check(spec: FieldSpec) -> list[TruncCheck]:
    """(a^2+1)b - a(b^2+1) = (a-b)(ab-1), and the ideal memberships that follow."""
    V = ("a", "b")
    a, b = MPoly.gens(spec, V)
    lhs = (a * a + 1) * b - a * (b * b + 1)
    rhs = (a - b) * (a * b - 1)
    full = IdealHandle(spec, V, [rhs])
    diag = IdealHandle(spec, V, [a - b])
    nf, strictly_bigger = full.reduce(a - b)
    return [
        TruncCheck("psi identity expands correctly", lhs == rhs, 0),
        TruncCheck("psi identity lies in <(a-b)(ab-1)>", full.contains(lhs), 0),
        TruncCheck("psi identity lies in <a-b>", diag.contains(lhs), 0),
        TruncCheck("a-b is not in <(a-b)(ab-1)>", not strictly_bigger, 0, f"remainder {nf!r}"),
    ]


def coequaliser_exactness_checks(spec: FieldSpec, dbound: int = 20, phi_bound: int = 10, inf_bound: int = 5):
    if dbound < 4:
        raise ValueError("degree bound must be at least 4")
    checks = crossing_lines_exactness(spec, phi_bound)
    sym, _ = symmetric_kernel(spec, dbound)
    checks += sym
    checks += infinity_chart(spec, inf_bound)
    return checks
