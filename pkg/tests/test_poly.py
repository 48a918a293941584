import random

import pytest
import sympy
from sympy import Poly, groebner as sym_groebner, symbols

from sl2hecke.errors import DivisionByZero, VariableMismatch
from sl2hecke.field import make_field
from sl2hecke.poly import (
    GREVLEX, LEX, IdealHandle, LaurentPoly, MPoly, MonomialOrder, RatFunc, UPoly, buchberger, eliminate,
    ideal_equal, intersect, normal_form, ring_map_kernel, s_polynomial, spolys_reduce_to_zero, upoly_gcd,
)

XY = ("x", "y")


def to_sympy(f: MPoly, p: int, order: str = "grevlex"):
    gens = symbols(" ".join(f.vars))
    gens = gens if isinstance(gens, tuple) else (gens,)
    expr = sum(c * sympy.prod(g ** k for g, k in zip(gens, e)) for e, c in f.terms.items())
    return Poly(expr, *gens, modulus=p)


def grevlex_monic(P: Poly) -> Poly:
    lc = int(P.LC(order="grevlex")) % P.get_modulus()
    return P.mul_ground(pow(lc, -1, P.get_modulus()))


def random_mpoly(spec, rng, variables, terms=3, deg=3):
    return MPoly(spec, variables, {tuple(rng.randint(0, deg) for _ in variables): rng.randrange(1, spec.p)
                                   for _ in range(terms)})


# univariate and rational functions --------------------------------------------------

def test_upoly_divmod_and_gcd(f5):
    x = UPoly.monomial(f5, 1)
    one = UPoly.const(f5, 1)
    f = (x + one) * (x * x + one)
    g = (x + one) * (x - one)
    q, r = f.divmod(g)
    assert q * g + r == f
    assert upoly_gcd(f, g) == x + one


def test_ratfunc_examples(f5):
    z, one = RatFunc.var(f5), RatFunc.const(f5, 1)
    assert (z - one) / z + one / z == one
    assert (z * z - one) / (z - one) == z + one
    assert z * (one / z) == one
    with pytest.raises(DivisionByZero):
        one / RatFunc.const(f5, 0)


def test_laurent_inverse(f5):
    f = LaurentPoly(f5, {2: 1, -1: 3})
    assert f.substitute_inverse().terms == {-2: 1, 1: 3}


# multivariate arithmetic ----------------------------------------------------------

def test_expansion_examples(f5):
    x, y = MPoly.gens(f5, XY)
    assert (x - y) * (x * y - 1) == x * x * y - x - x * y * y + y
    assert x + MPoly(f5, XY) == x


def test_variable_mismatch(f5):
    with pytest.raises(VariableMismatch):
        MPoly.gens(f5, XY)[0] + MPoly.var(f5, ("a",), "a")


def test_orders():
    assert GREVLEX.key((1, 2)) > GREVLEX.key((2, 0))
    assert LEX.key((1, 0)) > LEX.key((0, 5))
    blk = MonomialOrder("block", (1, 1))
    assert blk.key((1, 0)) > blk.key((0, 9))


def test_subs_and_evaluate(f5):
    x, y = MPoly.gens(f5, XY)
    f = x * x + 2 * y
    assert f.subs({"y": 0}) == x * x
    assert f.evaluate({"x": 2, "y": 3}) == (4 + 6) % 5


# Groebner bases ---------------------------------------------------------------------

def test_groebner_examples(f5):
    x, y = MPoly.gens(f5, XY, LEX)
    assert [g.terms for g in IdealHandle(f5, XY, [x * y], LEX).basis] == [(x * y).terms]
    gb = IdealHandle(f5, XY, [x - y, x * y - 1], LEX).basis
    assert {tuple(sorted(g.terms.items())) for g in gb} == {
        tuple(sorted((x - y).terms.items())), tuple(sorted((y * y - 1).terms.items()))}
    assert IdealHandle(f5, XY, [MPoly.const(f5, XY, 1)]).is_unit()


def test_reduce_examples(f5):
    x, y = MPoly.gens(f5, XY)
    assert IdealHandle(f5, XY, [x * y]).reduce(x * x * y) == (MPoly(f5, XY), True)
    nf, inside = IdealHandle(f5, XY, [x - y, x * y - 1]).reduce(x * x)
    assert nf == MPoly.const(f5, XY, 1) and not inside
    f = x + y
    assert IdealHandle(f5, XY, [MPoly(f5, XY)]).reduce(f) == (f, False)


def test_ideal_equal_examples(f5):
    x, y = MPoly.gens(f5, XY)
    I = lambda *g: IdealHandle(f5, XY, list(g))
    assert ideal_equal(I(x, y), I(y, x))
    assert not ideal_equal(I(x), I(x * x))
    assert ideal_equal(I(x - y, x * y - 1), I(x - y, x * x - 1))


@pytest.mark.parametrize("p", [5, 7, 13])
def test_groebner_against_sympy(p):
    spec = make_field(p)
    rng = random.Random(p)
    V = ("x", "y", "z")
    for _ in range(15):
        gens = [random_mpoly(spec, rng, V) for _ in range(rng.randint(1, 3))]
        ours = IdealHandle(spec, V, gens).basis
        theirs = sym_groebner([to_sympy(g, p).as_expr() for g in gens], *symbols("x y z"), modulus=p, order="grevlex")
        assert {grevlex_monic(to_sympy(g, p)) for g in ours} == {
            grevlex_monic(Poly(g, *symbols("x y z"), modulus=p)) for g in theirs.exprs}
        assert spolys_reduce_to_zero(ours)


def test_s_polynomial_cancels_leads(f5):
    x, y = MPoly.gens(f5, XY)
    s = s_polynomial(x * x * y - 1, x * y * y - x)
    assert s.lead_monomial() not in {(2, 2)}
    assert normal_form(s, buchberger([x * x * y - 1, x * y * y - x])).is_zero()


# elimination and intersection -------------------------------------------------------

def test_eliminate_examples(f5):
    x, y = MPoly.gens(f5, XY)
    assert eliminate(IdealHandle(f5, XY, [y - x * x]), ["y"]).is_zero()
    V = ("u", "x", "y")
    u, xx, yy = MPoly.gens(f5, V)
    J = eliminate(IdealHandle(f5, V, [u * xx - 1, u * yy]), ["x", "y"])
    assert ideal_equal(J, IdealHandle(f5, ("x", "y"), [MPoly.var(f5, ("x", "y"), "y")]))


def test_intersect_examples(f5):
    x, y = MPoly.gens(f5, XY)
    I = lambda *g: IdealHandle(f5, XY, list(g))
    assert ideal_equal(intersect(I(x), I(y)), I(x * y))
    assert ideal_equal(intersect(I(x, y), I(x, y)), I(x, y))
    assert ideal_equal(intersect(I(x - y), I(x * y - 1)), I((x - y) * (x * y - 1)))


def test_intersect_against_lcm(rng):
    spec = make_field(7)
    V = ("x",)
    for _ in range(50):
        f = UPoly(spec, [rng.randrange(7) for _ in range(rng.randint(1, 4))] + [1])
        g = UPoly(spec, [rng.randrange(7) for _ in range(rng.randint(1, 4))] + [1])
        lcm = (f * g).divmod(upoly_gcd(f, g))[0]
        m = lambda u: MPoly(spec, V, {(k,): c for k, c in enumerate(u.coeffs) if c})
        got = intersect(IdealHandle(spec, V, [m(f)]), IdealHandle(spec, V, [m(g)]))
        assert ideal_equal(got, IdealHandle(spec, V, [m(lcm)]))


def test_ring_map_kernel(f5):
    # k[a, b] -> k[t], a -> t^2, b -> t^3 has kernel <a^3 - b^2>
    t = MPoly.var(f5, ("t",), "t")
    K = ring_map_kernel(f5, ("a", "b"), [t * t, t * t * t])
    a, b = MPoly.gens(f5, ("a", "b"))
    assert ideal_equal(K, IdealHandle(f5, ("a", "b"), [a ** 3 - b * b]))
